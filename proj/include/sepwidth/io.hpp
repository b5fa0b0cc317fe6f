#pragma once

// Serialization: graph JSON and edge-list text, tree decompositions as JSON
// and PACE-2017 .td, gradings, gluing specs, group specs, certificates and
// profile tables.  All emitters are deterministic (sorted keys, sorted
// edges) so identical inputs produce byte-identical output.

#include "cayley.hpp"
#include "graph.hpp"
#include "layout.hpp"
#include "profile.hpp"
#include "separation.hpp"
#include "treegraded.hpp"
#include "treewidth.hpp"

#include <json.hpp>

#include <cstdio>

namespace sepwidth::io {

using json = nlohmann::json;

inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ── Graph ────────────────────────────────────────────────────────────

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, lab] : g.labels()) labels[std::to_string(v)] = lab;
        j["labels"] = std::move(labels);
    }
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph json needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw parse_error("graph json: \"n\" must be a positive integer");
    Graph g(j["n"].get<int>());
    if (!j["edges"].is_array()) throw parse_error("graph json: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw parse_error("graph json: edge must be a pair of integers, got " + e.dump());
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw parse_error("graph json: edge " + e.dump() + " out of range");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& ex) {
            throw parse_error(std::string("graph json: ") + ex.what());
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw parse_error("graph json: \"labels\" must be an object");
        for (const auto& [key, val] : j["labels"].items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw parse_error("graph json: label key \"" + key + "\" is not a vertex");
            }
            if (v < 0 || v >= g.vertex_count() || !val.is_string())
                throw parse_error("graph json: bad label for key \"" + key + "\"");
            g.set_label(v, val.get<std::string>());
        }
    }
    return g;
}

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid json: ") + e.what());
    }
}

/// Accepts either the JSON object format or the "n m" edge-list format,
/// sniffed from the first non-space byte.
inline Graph parse_graph_auto(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{')
        return graph_from_json(parse_json_text(text));
    return parse_edge_list(text);
}

// ── Tree decompositions ──────────────────────────────────────────────

inline json td_to_json(const TreeDecomposition& td) {
    json j;
    json bags = json::array();
    for (const auto& b : td.bags) bags.push_back(b);
    j["bags"] = std::move(bags);
    json edges = json::array();
    for (auto [a, b] : td.tree.edges()) edges.push_back(json::array({a, b}));
    j["tree_edges"] = std::move(edges);
    return j;
}

inline TreeDecomposition td_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bags") || !j.contains("tree_edges"))
        throw parse_error("tree decomposition json needs \"bags\" and \"tree_edges\"");
    TreeDecomposition td;
    for (const auto& b : j["bags"]) {
        VertexSet bag;
        for (const auto& v : b) bag.push_back(v.get<int>());
        td.bags.push_back(vset::sorted(std::move(bag)));
    }
    td.tree = Graph(static_cast<int>(td.bags.size()));
    for (const auto& e : j["tree_edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("tree decomposition json: bad tree edge " + e.dump());
        td.tree.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return td;
}

/// PACE-2017 .td: "s td <#bags> <width+1> <n>", "b <i> <v...>" lines (all
/// 1-based), then tree edges.
inline std::string td_to_pace(const TreeDecomposition& td, int host_vertex_count) {
    std::string out = "s td " + std::to_string(td.bags.size()) + " " +
                      std::to_string(td.width() + 1) + " " + std::to_string(host_vertex_count) +
                      "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out += "b " + std::to_string(i + 1);
        for (int v : td.bags[i]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (auto [a, b] : td.tree.edges())
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

inline TreeDecomposition td_from_pace(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long nbags = -1, maxbag = -1, nhost = -1;
    TreeDecomposition td;
    std::vector<std::pair<int, int>> tree_edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, tdtok;
            if (!(ls >> s >> tdtok >> nbags >> maxbag >> nhost) || tdtok != "td")
                throw parse_error("bad .td header \"" + line + "\"", lineno);
            td.bags.assign(static_cast<std::size_t>(nbags), {});
        } else if (line[0] == 'b') {
            std::string b;
            long long idx;
            ls >> b >> idx;
            if (nbags < 0 || idx < 1 || idx > nbags)
                throw parse_error("bag index out of range in \"" + line + "\"", lineno);
            VertexSet bag;
            long long v;
            while (ls >> v) bag.push_back(static_cast<int>(v - 1));
            td.bags[static_cast<std::size_t>(idx - 1)] = vset::sorted(std::move(bag));
        } else {
            long long a, b;
            std::istringstream es(line);
            if (!(es >> a >> b)) throw parse_error("bad .td line \"" + line + "\"", lineno);
            tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (nbags < 0) throw parse_error("missing .td header", lineno);
    td.tree = Graph(static_cast<int>(nbags));
    for (auto [a, b] : tree_edges) td.tree.add_edge(a, b);
    return td;
}

// ── Certificates ─────────────────────────────────────────────────────

inline json cutset_to_json(const CutsizeResult& r) {
    return json{{"S", r.cutset}, {"value", r.value}};
}

inline json bsep_to_json(const BalancedSeparator& s) {
    return json{{"A", s.a}, {"B", s.b}, {"size", s.size()}};
}

inline json layout_to_json(const LinearLayout& layout, int value, const std::string& parameter) {
    return json{{"order", layout.order}, {"value", value}, {"parameter", parameter}};
}

// ── Tree gradings ────────────────────────────────────────────────────

inline json grading_to_json(const TreeGrading& tg) {
    json j = graph_to_json(tg.host);
    json pieces = json::array();
    for (const auto& p : tg.pieces) pieces.push_back(p);
    j["pieces"] = std::move(pieces);
    return j;
}

inline TreeGrading grading_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pieces"))
        throw parse_error("grading json needs graph fields and \"pieces\"");
    TreeGrading tg;
    tg.host = graph_from_json(j);
    for (const auto& p : j["pieces"]) {
        VertexSet piece;
        for (const auto& v : p) piece.push_back(v.get<int>());
        tg.pieces.push_back(vset::sorted(std::move(piece)));
    }
    return tg;
}

// ── Gluing specs ─────────────────────────────────────────────────────

inline GluingSpec gluing_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("templates") || !j.contains("tree_nodes") ||
        !j.contains("tree_edges"))
        throw parse_error("gluing spec needs \"templates\", \"tree_nodes\", \"tree_edges\"");
    GluingSpec spec;
    for (const auto& [id, tpl] : j["templates"].items())
        spec.templates.emplace(id, graph_from_json(tpl));
    for (const auto& node : j["tree_nodes"]) {
        if (!node.is_object() || !node.contains("template"))
            throw parse_error("gluing spec: tree node needs \"template\"");
        spec.node_template.push_back(node["template"].get<std::string>());
    }
    for (const auto& e : j["tree_edges"]) {
        GluingSpec::Edge ge;
        ge.parent = e.at("parent").get<int>();
        ge.child = e.at("child").get<int>();
        ge.parent_vertex = e.at("parent_vertex").get<int>();
        ge.child_vertex = e.at("child_vertex").get<int>();
        spec.edges.push_back(ge);
    }
    return spec;
}

inline json gluing_spec_to_json(const GluingSpec& spec) {
    json j;
    json templates = json::object();
    for (const auto& [id, tpl] : spec.templates) templates[id] = graph_to_json(tpl);
    j["templates"] = std::move(templates);
    json nodes = json::array();
    for (const auto& id : spec.node_template) nodes.push_back(json{{"template", id}});
    j["tree_nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : spec.edges)
        edges.push_back(json{{"parent", e.parent},
                             {"child", e.child},
                             {"parent_vertex", e.parent_vertex},
                             {"child_vertex", e.child_vertex}});
    j["tree_edges"] = std::move(edges);
    return j;
}

// ── Group specs ──────────────────────────────────────────────────────

inline GroupSpec group_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw parse_error("group spec needs \"kind\"");
    GroupSpec spec;
    std::string kind = j["kind"].get<std::string>();
    if (kind == "cyclic-infinite") {
        spec.kind = GroupKind::CyclicInfinite;
        return spec;
    }
    if (kind != "finite-table")
        throw parse_error("group spec: unknown kind \"" + kind + "\"");
    spec.kind = GroupKind::FiniteTable;
    if (!j.contains("order") || !j.contains("table") || !j.contains("gens"))
        throw parse_error("finite-table group spec needs \"order\", \"table\", \"gens\"");
    spec.order = j["order"].get<int>();
    for (const auto& row : j["table"]) {
        std::vector<int> r;
        for (const auto& x : row) r.push_back(x.get<int>());
        spec.table.push_back(std::move(r));
    }
    for (const auto& s : j["gens"]) spec.gens.push_back(s.get<int>());
    return spec;
}

inline json group_spec_to_json(const GroupSpec& spec) {
    if (spec.kind == GroupKind::CyclicInfinite) return json{{"kind", "cyclic-infinite"}};
    return json{
        {"kind", "finite-table"}, {"order", spec.order}, {"table", spec.table}, {"gens", spec.gens}};
}

struct FreeProductSpec {
    GroupSpec g;
    GroupSpec h;
};

inline FreeProductSpec free_product_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("h"))
        throw parse_error("free product spec needs factors \"g\" and \"h\"");
    return {group_spec_from_json(j["g"]), group_spec_from_json(j["h"])};
}

// ── Profiles ─────────────────────────────────────────────────────────

inline json profile_to_json(const ProfileResult& p) {
    json table = json::array();
    for (const auto& e : p.entries)
        table.push_back(json{{"k", e.k}, {"value", e.value}, {"witness", e.witness}});
    return json{{"table", std::move(table)},
                {"exact", p.exact},
                {"subgraphs_examined", p.subgraphs_examined}};
}

inline std::string profile_to_csv(const ProfileResult& p) {
    std::string out = "k,value,flag,witness\n";
    for (const auto& e : p.entries) {
        out += std::to_string(e.k) + "," + std::to_string(e.value) + "," +
               (p.exact ? "exact" : "lower-bound") + ",";
        for (std::size_t i = 0; i < e.witness.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(e.witness[i]);
        }
        out += "\n";
    }
    return out;
}

} // namespace sepwidth::io
