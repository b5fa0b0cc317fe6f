// sepwidth: exact graph invariants (treewidth, cutsize, balanced separators,
// layout parameters), their subgraph profiles, tree-graded graph tooling and
// free-product Cayley balls, with JSON certificates for every value.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource limit.

#include <sepwidth/sepwidth.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace sepwidth;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitInputError, "cannot open input file: " + path};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitInputError, "cannot open output file: " + path};
    out << data;
}

struct ReportBuilder {
    json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit ReportBuilder(std::string command) {
        report["command"] = std::move(command);
        report["inputs"] = json::object();
        report["results"] = json::object();
        report["flags"] = json::object();
    }

    std::string load_input(const std::string& path) {
        std::string data = read_file(path);
        report["inputs"][path] = io::fnv1a_hex(data);
        return data;
    }

    std::string finish() {
        auto elapsed = std::chrono::steady_clock::now() - start;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return report.dump(2) + "\n";
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

Graph load_graph(ReportBuilder& rb, const std::string& path) {
    return io::parse_graph_auto(rb.load_input(path));
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            out.push_back(std::stoi(token));
        } catch (...) {
            throw CliError{kExitInputError, "bad vertex list entry \"" + token + "\""};
        }
    }
    return vset::sorted(std::move(out));
}

// ── compute ──────────────────────────────────────────────────────────

int run_compute(const std::string& invariant, const std::string& path,
                const std::string& format, bool no_completion, const std::string& out_path) {
    ReportBuilder rb("compute " + invariant + " " + path);
    Graph g = load_graph(rb, path);
    json& res = rb.report["results"];
    res["invariant"] = invariant;

    if (invariant == "tw") {
        auto r = treewidth_exact(g);
        if (format == "td") {
            emit(io::td_to_pace(r.decomposition, g.vertex_count()), out_path);
            return kExitOk;
        }
        res["value"] = r.width;
        res["certificate"] = io::td_to_json(r.decomposition);
    } else if (invariant == "cut") {
        auto r = cutsize_exact(g);
        res["value"] = r.value;
        res["certificate"] = io::cutset_to_json(r);
    } else if (invariant == "bsep") {
        auto r = balanced_separator_min(g, !no_completion);
        res["value"] = r.size;
        res["certificate"] = io::bsep_to_json(r.separator);
        if (no_completion) rb.report["flags"]["definition_variant"] = "no-completion";
    } else if (invariant == "sn") {
        auto r = separation_number(g);
        res["value"] = r.value;
        res["witness_subgraph"] = r.witness;
        auto sub = induced_subgraph(g, r.witness);
        auto inner = balanced_separator_min(sub.graph);
        VertexSet a, b;
        for (int v : inner.separator.a) a.push_back(sub.old_of_new[static_cast<std::size_t>(v)]);
        for (int v : inner.separator.b) b.push_back(sub.old_of_new[static_cast<std::size_t>(v)]);
        res["certificate"] =
            io::bsep_to_json({vset::sorted(std::move(a)), vset::sorted(std::move(b))});
    } else if (invariant == "cw") {
        auto r = cutwidth_exact(g);
        res["value"] = r.value;
        res["certificate"] = io::layout_to_json(r.layout, r.value, "cutwidth");
    } else if (invariant == "pw") {
        auto r = pathwidth_exact(g);
        if (format == "td") {
            emit(io::td_to_pace(r.decomposition, g.vertex_count()), out_path);
            return kExitOk;
        }
        res["value"] = r.width;
        res["certificate"] = io::td_to_json(r.decomposition);
        res["certificate"]["parameter"] = "pathwidth";
        res["order"] = r.layout.order;
    } else if (invariant == "sumcut") {
        auto r = sumcut_exact(g);
        res["value"] = r.value;
        res["certificate"] = io::layout_to_json(r.layout, r.value, "sumcut");
        rb.report["flags"]["sumcut_definition"] =
            "min over orders of the summed vertex boundary over prefixes";
    } else {
        throw CliError{kExitInputError, "unknown invariant \"" + invariant + "\""};
    }
    emit(rb.finish(), out_path);
    return kExitOk;
}

// ── profile ──────────────────────────────────────────────────────────

std::function<int(const Graph&)> solver_for(const std::string& invariant) {
    if (invariant == "tw") return [](const Graph& g) { return treewidth_exact(g).width; };
    if (invariant == "cut") return [](const Graph& g) { return cutsize_exact(g).value; };
    if (invariant == "cw") return [](const Graph& g) { return cutwidth_exact(g).value; };
    if (invariant == "pw") return [](const Graph& g) { return pathwidth_exact(g).width; };
    if (invariant == "sumcut") return [](const Graph& g) { return sumcut_exact(g).value; };
    throw CliError{kExitInputError, "invariant \"" + invariant + "\" has no profile"};
}

int run_profile(const std::string& invariant, const std::string& path, int r,
                const std::string& mode, std::size_t budget, int jobs,
                const std::string& format, const std::string& out_path) {
    ReportBuilder rb("profile " + invariant + " " + path);
    Graph g = load_graph(rb, path);
    ProfileOptions opts;
    opts.mode = mode == "all-induced" ? SubgraphMode::AllInduced : SubgraphMode::Connected;
    if (budget > 0) opts.budget = budget;
    opts.jobs = jobs;

    ProfileResult p = invariant_profile(g, r, solver_for(invariant), opts);
    if (format == "csv") {
        emit(io::profile_to_csv(p), out_path);
        return kExitOk;
    }
    rb.report["results"]["invariant"] = invariant;
    rb.report["results"]["r"] = r;
    rb.report["results"]["mode"] = to_string(opts.mode);
    rb.report["results"]["profile"] = io::profile_to_json(p);
    rb.report["results"]["certificates"] =
        "rows carry witness subgraphs; run compute on a witness for a value certificate";
    if (!p.exact) rb.report["flags"]["lower_bound"] = "subgraph budget exhausted";
    emit(rb.finish(), out_path);
    return kExitOk;
}

// ── verify ───────────────────────────────────────────────────────────

int run_verify_sandwich(ReportBuilder& rb, const Graph& g, int r, const ProfileOptions& opts) {
    ProfileResult sep = sep_profile(g, r, opts);
    ProfileResult tw = tw_profile(g, r, opts);
    if (!sep.exact || !tw.exact)
        throw CliError{kExitResourceLimit,
                       "sandwich verification needs exhaustive profiles; raise the budget"};
    bool all_ok = true;
    json checks = json::array();
    for (int k = 1; k <= r; ++k) {
        int s = sep.value_at(k), t = tw.value_at(k);
        bool ok = s - 1 <= t && t <= 15 * s;
        all_ok = all_ok && ok;
        checks.push_back(json{{"k", k},
                              {"sep", s},
                              {"tw", t},
                              {"sep_witness", sep.entries[static_cast<std::size_t>(k - 1)].witness},
                              {"tw_witness", tw.entries[static_cast<std::size_t>(k - 1)].witness},
                              {"ok", ok}});
    }
    rb.report["results"]["suite"] = "sandwich";
    rb.report["results"]["checks"] = std::move(checks);
    rb.report["results"]["pass"] = all_ok;
    return all_ok ? kExitOk : kExitVerifyFailure;
}

int run_verify_treegraded_eq(ReportBuilder& rb, const TreeGrading& tg, int r,
                             const ProfileOptions& opts) {
    auto check = validate_tree_grading(tg);
    if (!check.ok()) throw CliError{kExitInputError, "invalid grading: " + check.detail};
    ProfileResult host = tw_profile(tg.host, r, opts);
    ProfileResult pieces = tw_profile_via_pieces(tg, r, opts);
    if (!host.exact || !pieces.exact)
        throw CliError{kExitResourceLimit,
                       "equality verification needs exhaustive profiles; raise the budget"};
    bool all_ok = true;
    json checks = json::array();
    for (int k = 1; k <= r; ++k) {
        bool ok = host.value_at(k) == pieces.value_at(k);
        all_ok = all_ok && ok;
        checks.push_back(
            json{{"k", k},
                 {"tw_host", host.value_at(k)},
                 {"tw_pieces", pieces.value_at(k)},
                 {"host_witness", host.entries[static_cast<std::size_t>(k - 1)].witness},
                 {"pieces_witness", pieces.entries[static_cast<std::size_t>(k - 1)].witness},
                 {"ok", ok}});
    }
    rb.report["results"]["suite"] = "treegraded-eq";
    rb.report["results"]["checks"] = std::move(checks);
    rb.report["results"]["pass"] = all_ok;
    return all_ok ? kExitOk : kExitVerifyFailure;
}

int run_verify_join(ReportBuilder& rb, const TreeGrading& tg) {
    auto check = validate_tree_grading(tg);
    if (!check.ok()) throw CliError{kExitInputError, "invalid grading: " + check.detail};
    GradingOrder order = grading_order(tg);
    bool all_ok = true;
    json steps = json::array();
    TreeDecomposition acc;
    int expected = 0;
    for (std::size_t m = 0; m < order.piece_order.size(); ++m) {
        const VertexSet& piece = tg.pieces[static_cast<std::size_t>(order.piece_order[m])];
        auto sub = induced_subgraph(tg.host, piece);
        auto solved = treewidth_exact(sub.graph);
        TreeDecomposition mapped = relabel_decomposition(solved.decomposition, sub.old_of_new);
        expected = std::max(expected, solved.width);
        if (m == 0)
            acc = std::move(mapped);
        else
            acc = join_decompositions(acc, mapped, {order.attach_vertex[m]});
        bool ok = acc.width() == expected;
        all_ok = all_ok && ok;
        steps.push_back(json{{"step", m},
                             {"piece", order.piece_order[m]},
                             {"piece_width", solved.width},
                             {"joined_width", acc.width()},
                             {"ok", ok}});
    }
    auto final_check = validate_tree_decomposition(acc, tg.host);
    all_ok = all_ok && final_check.ok();
    rb.report["results"]["suite"] = "join";
    rb.report["results"]["steps"] = std::move(steps);
    rb.report["results"]["decomposition_valid"] = final_check.ok();
    rb.report["results"]["certificate"] = io::td_to_json(acc);
    if (tg.host.vertex_count() <= 25) {
        int direct = treewidth_exact(tg.host).width;
        rb.report["results"]["tw_host"] = direct;
        all_ok = all_ok && direct == acc.width();
    }
    rb.report["results"]["pass"] = all_ok;
    return all_ok ? kExitOk : kExitVerifyFailure;
}

int run_verify_conversion(ReportBuilder& rb, const Graph& g, const std::string& cutset_arg) {
    VertexSet cutset;
    if (cutset_arg.empty()) {
        auto r = cutsize_exact(g);
        cutset = r.cutset;
        rb.report["results"]["cutset_source"] = "cutsize_exact";
    } else {
        cutset = parse_vertex_list(cutset_arg);
        rb.report["results"]["cutset_source"] = "flag";
    }
    BalancedSeparator bs;
    try {
        bs = cutset_to_balanced_separator(g, cutset);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInputError, e.what()};
    }
    auto valid = validate_balanced_separator(bs, g);
    bool size_ok = bs.size() == static_cast<int>(cutset.size());
    rb.report["results"]["suite"] = "conversion";
    rb.report["results"]["cutset"] = cutset;
    rb.report["results"]["certificate"] = io::bsep_to_json(bs);
    rb.report["results"]["separator_valid"] = valid.ok;
    rb.report["results"]["size_equals_cutset"] = size_ok;
    rb.report["results"]["pass"] = valid.ok && size_ok;
    return valid.ok && size_ok ? kExitOk : kExitVerifyFailure;
}

int run_verify(const std::string& suite, const std::string& path, int r,
               const std::string& cutset_arg, std::size_t budget, int jobs,
               const std::string& out_path) {
    ReportBuilder rb("verify " + suite + " " + path);
    ProfileOptions opts;
    if (budget > 0) opts.budget = budget;
    opts.jobs = jobs;

    int code;
    if (suite == "sandwich") {
        code = run_verify_sandwich(rb, load_graph(rb, path), r, opts);
    } else if (suite == "treegraded-eq") {
        TreeGrading tg = io::grading_from_json(io::parse_json_text(rb.load_input(path)));
        code = run_verify_treegraded_eq(rb, tg, r, opts);
    } else if (suite == "join") {
        TreeGrading tg = io::grading_from_json(io::parse_json_text(rb.load_input(path)));
        code = run_verify_join(rb, tg);
    } else if (suite == "conversion") {
        code = run_verify_conversion(rb, load_graph(rb, path), cutset_arg);
    } else {
        throw CliError{kExitInputError, "unknown verify suite \"" + suite + "\""};
    }
    emit(rb.finish(), out_path);
    return code;
}

// ── gen ──────────────────────────────────────────────────────────────

int run_gen_cayley(const std::string& spec_path, int radius, std::size_t cap,
                   const std::string& out_dir) {
    ReportBuilder rb("gen cayley " + spec_path);
    auto spec = io::free_product_spec_from_json(io::parse_json_text(rb.load_input(spec_path)));
    FreeProductBall ball;
    try {
        ball = free_product_ball(spec.g, spec.h, radius, cap ? cap : kDefaultBallCap);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInputError, e.what()};
    }
    std::filesystem::create_directories(out_dir);
    std::string graph_path = out_dir + "/graph.json";
    std::string grading_path = out_dir + "/grading.json";
    write_file(graph_path, io::graph_to_json(ball.graph).dump(2) + "\n");
    write_file(grading_path, io::grading_to_json(ball.grading).dump(2) + "\n");
    rb.report["results"]["vertices"] = ball.graph.vertex_count();
    rb.report["results"]["edges"] = ball.graph.edge_count();
    rb.report["results"]["pieces"] = ball.grading.pieces.size();
    rb.report["results"]["radius"] = radius;
    rb.report["results"]["graph_file"] = graph_path;
    rb.report["results"]["grading_file"] = grading_path;
    rb.report["results"]["grading_valid"] = true; // construction validates
    std::cout << rb.finish();
    return kExitOk;
}

int run_gen_compose(const std::string& spec_path, const std::string& out_path) {
    ReportBuilder rb("gen compose " + spec_path);
    GluingSpec spec = io::gluing_spec_from_json(io::parse_json_text(rb.load_input(spec_path)));
    ComposeResult res;
    try {
        res = compose(spec);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInputError, e.what()};
    }
    if (out_path.empty()) throw CliError{kExitInputError, "gen compose needs -o <file>"};
    write_file(out_path, io::grading_to_json(res.grading).dump(2) + "\n");
    rb.report["results"]["vertices"] = res.grading.host.vertex_count();
    rb.report["results"]["pieces"] = res.grading.pieces.size();
    rb.report["results"]["grading_file"] = out_path;
    rb.report["results"]["grading_valid"] = true;
    std::cout << rb.finish();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact separation/treewidth laboratory"};
    app.require_subcommand(1);

    std::string invariant, path, format = "json", mode = "connected", out_path, cutset_arg;
    std::string suite, gen_kind, spec_path, out_dir;
    int r = 1, radius = 0, jobs = 1;
    std::size_t budget = 0, cap = 0;
    bool no_completion = false;

    auto* compute = app.add_subcommand("compute", "one invariant with certificate");
    compute->add_option("invariant", invariant, "tw|cut|sn|bsep|cw|pw|sumcut")->required();
    compute->add_option("graph", path, "graph file (edge list or json)")->required();
    compute->add_option("--format", format, "json|td");
    compute->add_flag("--no-completion", no_completion, "bsep diagnostic: drop A u B = V");
    compute->add_option("-o,--output", out_path, "write report here instead of stdout");

    auto* profile = app.add_subcommand("profile", "invariant profile over subgraphs");
    profile->add_option("invariant", invariant, "tw|cut|cw|pw|sumcut")->required();
    profile->add_option("graph", path)->required();
    profile->add_option("--r", r, "profile bound")->required();
    profile->add_option("--mode", mode, "connected|all-induced");
    profile->add_option("--budget", budget, "max subgraphs (default SEPWIDTH_BUDGET or 5e6)");
    profile->add_option("--jobs", jobs, "worker threads");
    profile->add_option("--format", format, "json|csv");
    profile->add_option("-o,--output", out_path);

    auto* verify = app.add_subcommand("verify", "check the library's identities on an input");
    verify->add_option("suite", suite, "sandwich|treegraded-eq|join|conversion")->required();
    verify->add_option("target", path)->required();
    verify->add_option("--r", r, "profile bound");
    verify->add_option("--cutset", cutset_arg, "comma-separated cutset for conversion");
    verify->add_option("--budget", budget);
    verify->add_option("--jobs", jobs);
    verify->add_option("-o,--output", out_path);

    auto* gen = app.add_subcommand("gen", "generate graphs and gradings");
    gen->add_option("kind", gen_kind, "cayley|compose")->required();
    gen->add_option("spec", spec_path, "spec file")->required();
    gen->add_option("--radius", radius, "ball radius (cayley)");
    gen->add_option("--cap", cap, "ball vertex cap (cayley)");
    gen->add_option("-o,--output", out_dir, "output directory (cayley) or file (compose)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(invariant, path, format, no_completion, out_path);
        if (profile->parsed())
            return run_profile(invariant, path, r, mode, budget, jobs, format, out_path);
        if (verify->parsed())
            return run_verify(suite, path, r, cutset_arg, budget, jobs, out_path);
        if (gen->parsed()) {
            if (gen_kind == "cayley") return run_gen_cayley(spec_path, radius, cap, out_dir);
            if (gen_kind == "compose") return run_gen_compose(spec_path, out_dir);
            throw CliError{kExitInputError, "unknown gen kind \"" + gen_kind + "\""};
        }
    } catch (const CliError& e) {
        std::cout << json{{"error", e.message}, {"exit", e.code}}.dump(2) << "\n";
        return e.code;
    } catch (const parse_error& e) {
        std::cout << json{{"error", e.what()}, {"exit", kExitInputError}}.dump(2) << "\n";
        return kExitInputError;
    } catch (const limit_error& e) {
        std::cout << json{{"error", e.what()}, {"exit", kExitResourceLimit}}.dump(2) << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}, {"exit", kExitInputError}}.dump(2) << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
