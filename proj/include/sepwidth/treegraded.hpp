#pragma once

// Tree-graded graphs: a host covered by connected pieces that pairwise meet
// in at most one vertex, with every simple loop inside a single piece.
//
// The loop condition is decided through the block decomposition: every
// simple cycle lies inside one block, and any two edges of a block lie on a
// common simple cycle, so given the cover and thin-intersection conditions
// the loop condition holds iff every block is contained in a single piece.
// Cycle enumeration is kept as the slow validation path; the two must agree.

#include "graph.hpp"
#include "profile.hpp"
#include "treewidth.hpp"

#include <map>

namespace sepwidth {

struct TreeGrading {
    Graph host;
    std::vector<VertexSet> pieces;
};

struct TgValidation {
    enum class Kind {
        Valid,
        Structural,       // bad vertex ids, empty piece list, empty piece
        PieceDisconnected,
        Cover,            // uncovered vertex or edge
        FatIntersection,  // two pieces share >= 2 vertices
        LoopCondition     // a block (equivalently a simple cycle) straddles pieces
    };
    Kind kind = Kind::Valid;
    std::string detail;
    bool ok() const { return kind == Kind::Valid; }
};

namespace detail {

inline TgValidation validate_grading_common(const TreeGrading& tg) {
    using Kind = TgValidation::Kind;
    const int n = tg.host.vertex_count();
    if (n < 1) return {Kind::Structural, "host graph is empty"};
    if (tg.pieces.empty()) return {Kind::Structural, "grading has no pieces"};
    for (std::size_t i = 0; i < tg.pieces.size(); ++i) {
        const auto& p = tg.pieces[i];
        if (p.empty()) return {Kind::Structural, "piece " + std::to_string(i) + " is empty"};
        if (!std::is_sorted(p.begin(), p.end()) ||
            std::adjacent_find(p.begin(), p.end()) != p.end())
            return {Kind::Structural, "piece " + std::to_string(i) + " is not a sorted set"};
        for (int v : p)
            if (v < 0 || v >= n)
                return {Kind::Structural,
                        "piece " + std::to_string(i) + " references vertex " + std::to_string(v)};
        if (!is_connected(induced_subgraph(tg.host, p).graph))
            return {Kind::PieceDisconnected,
                    "piece " + std::to_string(i) + " induces a disconnected subgraph"};
    }

    // cover: vertices
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& p : tg.pieces)
        for (int v : p) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return {Kind::Cover, "vertex " + std::to_string(v) + " lies in no piece"};

    // per-vertex piece membership, for edge cover / intersections / blocks
    std::vector<std::vector<int>> member(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < tg.pieces.size(); ++i)
        for (int v : tg.pieces[i]) member[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

    for (auto [u, v] : tg.host.edges()) {
        const auto& mu = member[static_cast<std::size_t>(u)];
        const auto& mv = member[static_cast<std::size_t>(v)];
        bool found = false;
        for (int i : mu)
            if (std::binary_search(mv.begin(), mv.end(), i)) {
                found = true;
                break;
            }
        if (!found)
            return {Kind::Cover, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") lies in no piece"};
    }

    // thin intersections: no piece pair may share two vertices
    std::map<std::pair<int, int>, int> pair_seen; // (i,j) -> first shared vertex
    for (int v = 0; v < n; ++v) {
        const auto& m = member[static_cast<std::size_t>(v)];
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = x + 1; y < m.size(); ++y) {
                auto key = std::make_pair(m[x], m[y]);
                auto [it, fresh] = pair_seen.emplace(key, v);
                if (!fresh)
                    return {TgValidation::Kind::FatIntersection,
                            "pieces " + std::to_string(m[x]) + " and " + std::to_string(m[y]) +
                                " share vertices " + std::to_string(it->second) + " and " +
                                std::to_string(v)};
            }
    }
    return {};
}

inline bool some_piece_contains(const TreeGrading& tg, const VertexSet& set) {
    // candidates: pieces containing the first vertex
    for (const auto& p : tg.pieces)
        if (vset::is_subset(set, p)) return true;
    return false;
}

} // namespace detail

/// Defn-level validation; the loop condition is decided via blocks.
inline TgValidation validate_tree_grading(const TreeGrading& tg) {
    TgValidation common = detail::validate_grading_common(tg);
    if (!common.ok()) return common;
    for (const auto& block : blocks(tg.host).blocks) {
        if (!detail::some_piece_contains(tg, block))
            return {TgValidation::Kind::LoopCondition,
                    "block " + vset::to_string(block) + " is contained in no piece"};
    }
    return {};
}

/// Slow validation path: checks the loop condition by enumerating simple
/// cycles directly (up to `cycle_limit`).  Agrees with the block-based path
/// whenever the limit is not hit; kept as an oracle for the fast path.
inline TgValidation validate_tree_grading_by_cycles(const TreeGrading& tg,
                                                    std::size_t cycle_limit = 1'000'000) {
    TgValidation common = detail::validate_grading_common(tg);
    if (!common.ok()) return common;
    TgValidation out;
    auto enumeration = for_each_simple_cycle(tg.host, cycle_limit, [&](const std::vector<int>& cyc) {
        if (!out.ok()) return;
        if (!detail::some_piece_contains(tg, vset::sorted(cyc)))
            out = {TgValidation::Kind::LoopCondition,
                   "cycle " + vset::to_string(vset::sorted(cyc)) + " is contained in no piece"};
    });
    if (out.ok() && enumeration.truncated)
        throw limit_error("validate_tree_grading_by_cycles: cycle limit " +
                          std::to_string(cycle_limit) + " exceeded");
    return out;
}

// ── Composition from piece templates ─────────────────────────────────

struct GluingSpec {
    struct Edge {
        int parent = 0;
        int child = 0;
        int parent_vertex = 0;
        int child_vertex = 0;
    };
    std::map<std::string, Graph> templates;
    std::vector<std::string> node_template; // gluing-tree node -> template id
    std::vector<Edge> edges;
};

struct ComposeResult {
    TreeGrading grading;
    // per gluing-tree node: template vertex -> host vertex
    std::vector<std::vector<int>> vertex_maps;
};

/// Builds the host by instantiating one template copy per gluing-tree node
/// and merging the identified vertex of each child into its parent's copy.
/// The result always passes validate_tree_grading.
inline ComposeResult compose(const GluingSpec& spec) {
    const int nodes = static_cast<int>(spec.node_template.size());
    if (nodes < 1) throw std::invalid_argument("compose: gluing tree has no nodes");
    if (static_cast<int>(spec.edges.size()) != nodes - 1)
        throw std::invalid_argument("compose: gluing tree needs exactly nodes-1 edges");

    for (const auto& [id, tpl] : spec.templates) {
        if (tpl.vertex_count() < 1)
            throw std::invalid_argument("compose: template \"" + id + "\" is empty");
        if (!is_connected(tpl))
            throw std::invalid_argument("compose: template \"" + id + "\" is not connected");
    }
    auto template_of = [&](int node) -> const Graph& {
        const std::string& id = spec.node_template[static_cast<std::size_t>(node)];
        auto it = spec.templates.find(id);
        if (it == spec.templates.end())
            throw std::invalid_argument("compose: node " + std::to_string(node) +
                                        " references unknown template \"" + id + "\"");
        return it->second;
    };

    // orient: every node except the root is the child of exactly one edge
    std::vector<int> parent_edge(static_cast<std::size_t>(nodes), -1);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(nodes));
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const auto& ge = spec.edges[e];
        if (ge.parent < 0 || ge.parent >= nodes || ge.child < 0 || ge.child >= nodes)
            throw std::invalid_argument("compose: gluing edge references unknown node");
        if (ge.child == ge.parent)
            throw std::invalid_argument("compose: gluing edge from node " +
                                        std::to_string(ge.parent) + " to itself");
        if (parent_edge[static_cast<std::size_t>(ge.child)] != -1)
            throw std::invalid_argument("compose: node " + std::to_string(ge.child) +
                                        " is the child of two gluing edges");
        const Graph& ptpl = template_of(ge.parent);
        const Graph& ctpl = template_of(ge.child);
        if (ge.parent_vertex < 0 || ge.parent_vertex >= ptpl.vertex_count() ||
            ge.child_vertex < 0 || ge.child_vertex >= ctpl.vertex_count())
            throw std::invalid_argument("compose: gluing edge " + std::to_string(e) +
                                        " identifies an out-of-range template vertex");
        parent_edge[static_cast<std::size_t>(ge.child)] = static_cast<int>(e);
        children[static_cast<std::size_t>(ge.parent)].push_back(static_cast<int>(e));
    }
    int root = -1;
    for (int v = 0; v < nodes; ++v)
        if (parent_edge[static_cast<std::size_t>(v)] == -1) {
            if (root != -1)
                throw std::invalid_argument("compose: gluing tree is disconnected (nodes " +
                                            std::to_string(root) + " and " + std::to_string(v) +
                                            " both lack parents)");
            root = v;
        }
    if (root == -1) throw std::invalid_argument("compose: gluing edges contain a cycle");

    // materialize copies in BFS order from the root
    std::vector<std::vector<int>> maps(static_cast<std::size_t>(nodes));
    int next_id = 0;
    std::vector<int> bfs{root};
    std::vector<char> visited(static_cast<std::size_t>(nodes), 0);
    visited[static_cast<std::size_t>(root)] = 1;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        int node = bfs[qi];
        const Graph& tpl = template_of(node);
        auto& map = maps[static_cast<std::size_t>(node)];
        map.assign(static_cast<std::size_t>(tpl.vertex_count()), -1);
        if (node != root) {
            const auto& ge = spec.edges[static_cast<std::size_t>(
                parent_edge[static_cast<std::size_t>(node)])];
            map[static_cast<std::size_t>(ge.child_vertex)] =
                maps[static_cast<std::size_t>(ge.parent)][static_cast<std::size_t>(ge.parent_vertex)];
        }
        for (int v = 0; v < tpl.vertex_count(); ++v)
            if (map[static_cast<std::size_t>(v)] == -1) map[static_cast<std::size_t>(v)] = next_id++;
        for (int e : children[static_cast<std::size_t>(node)]) {
            int child = spec.edges[static_cast<std::size_t>(e)].child;
            if (visited[static_cast<std::size_t>(child)])
                throw std::invalid_argument("compose: gluing edges contain a cycle");
            visited[static_cast<std::size_t>(child)] = 1;
            bfs.push_back(child);
        }
    }
    if (static_cast<int>(bfs.size()) != nodes)
        throw std::invalid_argument("compose: gluing tree is disconnected");

    TreeGrading tg;
    tg.host = Graph(next_id);
    tg.pieces.resize(static_cast<std::size_t>(nodes));
    for (int node = 0; node < nodes; ++node) {
        const Graph& tpl = template_of(node);
        const auto& map = maps[static_cast<std::size_t>(node)];
        for (auto [u, v] : tpl.edges())
            tg.host.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
        tg.pieces[static_cast<std::size_t>(node)] = vset::sorted(VertexSet(map.begin(), map.end()));
        if (tg.pieces[static_cast<std::size_t>(node)].size() !=
            static_cast<std::size_t>(tpl.vertex_count()))
            throw std::invalid_argument("compose: identification collapses two vertices of the "
                                        "same template copy at node " + std::to_string(node));
    }

    TgValidation check = validate_tree_grading(tg);
    if (!check.ok())
        throw std::logic_error("compose: produced grading is invalid: " + check.detail);
    return {std::move(tg), std::move(maps)};
}

// ── Induced grading and the piece ordering ───────────────────────────

struct InducedGradingResult {
    TreeGrading grading;           // over the relabeled induced subgraph
    std::vector<int> old_of_new;   // new vertex -> host vertex
    std::vector<int> piece_origin; // new piece -> original piece index
};

/// Restriction of a grading to a connected induced subgraph on s (|s| >= 2):
/// pieces are the intersections with at least two vertices.  For a valid
/// grading the result is again a valid grading of the subgraph.
inline InducedGradingResult induced_grading(const TreeGrading& tg, const VertexSet& s) {
    VertexSet verts = vset::sorted(s);
    if (verts.size() < 2)
        throw std::invalid_argument("induced_grading: need at least 2 vertices");
    auto sub = induced_subgraph(tg.host, verts);
    if (!is_connected(sub.graph))
        throw std::invalid_argument("induced_grading: induced subgraph is disconnected; "
                                    "split into components first");
    std::vector<int> new_of_old(static_cast<std::size_t>(tg.host.vertex_count()), -1);
    for (std::size_t i = 0; i < sub.old_of_new.size(); ++i)
        new_of_old[static_cast<std::size_t>(sub.old_of_new[i])] = static_cast<int>(i);

    InducedGradingResult out;
    out.grading.host = std::move(sub.graph);
    out.old_of_new = std::move(sub.old_of_new);
    for (std::size_t i = 0; i < tg.pieces.size(); ++i) {
        VertexSet inter;
        for (int v : tg.pieces[i])
            if (new_of_old[static_cast<std::size_t>(v)] >= 0)
                inter.push_back(new_of_old[static_cast<std::size_t>(v)]);
        if (inter.size() >= 2) {
            std::sort(inter.begin(), inter.end());
            out.grading.pieces.push_back(std::move(inter));
            out.piece_origin.push_back(static_cast<int>(i));
        }
    }
    return out;
}

struct GradingOrder {
    std::vector<int> piece_order;    // indices into tg.pieces
    std::vector<int> attach_vertex;  // host vertex shared with the processed union; -1 for first
};

/// Orders the pieces so each one after the first meets the union of its
/// predecessors in exactly one vertex.  Always possible for a valid grading
/// of a connected host; a fatter meeting is reported as an inconsistency.
inline GradingOrder grading_order(const TreeGrading& tg) {
    if (!is_connected(tg.host)) throw std::invalid_argument("grading_order: host is disconnected");
    const std::size_t m = tg.pieces.size();
    if (m == 0) throw std::invalid_argument("grading_order: grading has no pieces");

    GradingOrder out;
    std::vector<char> used(m, 0);
    VertexSet covered = tg.pieces[0];
    used[0] = 1;
    out.piece_order.push_back(0);
    out.attach_vertex.push_back(-1);
    for (std::size_t step = 1; step < m; ++step) {
        int pick = -1;
        VertexSet meet;
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            VertexSet inter = vset::intersect(tg.pieces[i], covered);
            if (!inter.empty()) {
                pick = static_cast<int>(i);
                meet = std::move(inter);
                break; // lowest eligible index
            }
        }
        if (pick < 0)
            throw std::runtime_error("grading_order: no piece meets the processed union "
                                     "(inconsistent grading)");
        if (meet.size() != 1)
            throw std::runtime_error("grading_order: piece " + std::to_string(pick) +
                                     " meets the processed union in " +
                                     std::to_string(meet.size()) +
                                     " vertices (inconsistent grading)");
        used[static_cast<std::size_t>(pick)] = 1;
        out.piece_order.push_back(pick);
        out.attach_vertex.push_back(meet.front());
        covered = vset::unite(covered, tg.pieces[static_cast<std::size_t>(pick)]);
    }
    return out;
}

/// Maps a decomposition of a relabeled subgraph back into host vertex ids.
inline TreeDecomposition relabel_decomposition(const TreeDecomposition& td,
                                               const std::vector<int>& old_of_new) {
    TreeDecomposition out;
    out.tree = td.tree;
    for (const auto& bag : td.bags) {
        VertexSet mapped;
        for (int v : bag) mapped.push_back(old_of_new[static_cast<std::size_t>(v)]);
        out.bags.push_back(vset::sorted(std::move(mapped)));
    }
    return out;
}

/// Solves every piece exactly and folds the decompositions together along
/// the grading order; the result is a valid decomposition of the host whose
/// width is the maximum piece treewidth.
inline TreewidthResult tw_via_grading(const TreeGrading& tg) {
    TgValidation check = validate_tree_grading(tg);
    if (!check.ok()) throw std::invalid_argument("tw_via_grading: invalid grading: " + check.detail);
    GradingOrder order = grading_order(tg);

    TreeDecomposition acc;
    int width = 0;
    for (std::size_t step = 0; step < order.piece_order.size(); ++step) {
        const VertexSet& piece = tg.pieces[static_cast<std::size_t>(order.piece_order[step])];
        auto sub = induced_subgraph(tg.host, piece);
        TreewidthResult solved = treewidth_exact(sub.graph);
        TreeDecomposition mapped = relabel_decomposition(solved.decomposition, sub.old_of_new);
        width = std::max(width, solved.width);
        if (step == 0) {
            acc = std::move(mapped);
        } else {
            acc = join_decompositions(acc, mapped, {order.attach_vertex[step]});
        }
    }
    TdValidation td_check = validate_tree_decomposition(acc, tg.host);
    if (!td_check.ok())
        throw std::logic_error("tw_via_grading: folded decomposition invalid: " + td_check.detail);
    if (acc.width() != width)
        throw std::logic_error("tw_via_grading: folded width " + std::to_string(acc.width()) +
                               " does not match max piece width " + std::to_string(width));
    return {width, std::move(acc)};
}

/// Pointwise max over pieces of the piece treewidth profiles; equals the
/// host profile for a valid grading.
inline ProfileResult tw_profile_via_pieces(const TreeGrading& tg, int r,
                                           const ProfileOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("tw_profile_via_pieces: r must be >= 1");
    ProfileResult out;
    out.entries.resize(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        out.entries[static_cast<std::size_t>(k - 1)].k = k;
        out.entries[static_cast<std::size_t>(k - 1)].value = 0;
    }
    bool first = true;
    for (const auto& piece : tg.pieces) {
        auto sub = induced_subgraph(tg.host, piece);
        ProfileResult pr = tw_profile(sub.graph, r, opts);
        out.exact = out.exact && pr.exact;
        out.subgraphs_examined += pr.subgraphs_examined;
        for (int k = 1; k <= r; ++k) {
            auto& mine = out.entries[static_cast<std::size_t>(k - 1)];
            const auto& theirs = pr.entries[static_cast<std::size_t>(k - 1)];
            VertexSet host_witness;
            for (int v : theirs.witness)
                host_witness.push_back(sub.old_of_new[static_cast<std::size_t>(v)]);
            if (first || theirs.value > mine.value) {
                mine.value = theirs.value;
                mine.witness = vset::sorted(std::move(host_witness));
            }
        }
        first = false;
    }
    return out;
}

} // namespace sepwidth
