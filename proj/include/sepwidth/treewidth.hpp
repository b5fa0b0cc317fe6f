#pragma once

// Exact treewidth with certifying tree decompositions.
//
// The solver is a dynamic program over vertex subsets: for S the set of
// already-eliminated vertices, the elimination degree of v equals the number
// of vertices outside S+{v} adjacent to the component of v inside S+{v},
// and tw(G) = TW(V) with TW(S) = min_{v in S} max(TW(S-v), deg_elim(S-v, v)).
// The witness decomposition is rebuilt from the optimal elimination order
// and re-validated before it is returned.

#include "graph.hpp"
#include "profile.hpp"

#include <bit>
#include <cstdint>

namespace sepwidth {

struct TreeDecomposition {
    Graph tree;                  // nodes are bag indices
    std::vector<VertexSet> bags; // host vertex sets

    int width() const {
        std::size_t w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return static_cast<int>(w) - 1;
    }
};

/// Union of all bags = the vertex set the decomposition covers.
inline VertexSet covered_vertices(const TreeDecomposition& td) {
    VertexSet out;
    for (const auto& b : td.bags) out.insert(out.end(), b.begin(), b.end());
    return vset::sorted(std::move(out));
}

struct TdValidation {
    enum class Kind { Valid, Structural, Coverage, EdgeCoverage, Coherence };
    Kind kind = Kind::Valid;
    std::string detail;
    bool ok() const { return kind == Kind::Valid; }
};

/// Checks the three tree-decomposition conditions against `host`; structural
/// defects (the tree not being a tree, bag/node mismatch, bad vertex ids)
/// are reported separately from condition violations.
inline TdValidation validate_tree_decomposition(const TreeDecomposition& td, const Graph& host) {
    using Kind = TdValidation::Kind;
    const int nbags = static_cast<int>(td.bags.size());
    if (nbags == 0) return {Kind::Structural, "decomposition has no bags"};
    if (td.tree.vertex_count() != nbags)
        return {Kind::Structural, "tree has " + std::to_string(td.tree.vertex_count()) +
                                      " nodes but there are " + std::to_string(nbags) + " bags"};
    if (!is_tree(td.tree)) return {Kind::Structural, "bag graph is not a tree"};
    for (int i = 0; i < nbags; ++i)
        for (int v : td.bags[static_cast<std::size_t>(i)])
            if (v < 0 || v >= host.vertex_count())
                return {Kind::Structural,
                        "bag " + std::to_string(i) + " references vertex " + std::to_string(v)};

    // (1) every host vertex is in some bag
    std::vector<char> covered(static_cast<std::size_t>(host.vertex_count()), 0);
    for (const auto& b : td.bags)
        for (int v : b) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < host.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return {Kind::Coverage, "vertex " + std::to_string(v) + " is in no bag"};

    // (2) every host edge is inside some bag
    for (auto [u, v] : host.edges()) {
        bool found = false;
        for (const auto& b : td.bags)
            if (vset::contains(b, u) && vset::contains(b, v)) {
                found = true;
                break;
            }
        if (!found)
            return {Kind::EdgeCoverage,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag"};
    }

    // (3) for each vertex, the bags containing it induce a connected subtree
    for (int v = 0; v < host.vertex_count(); ++v) {
        std::vector<int> with_v;
        for (int i = 0; i < nbags; ++i)
            if (vset::contains(td.bags[static_cast<std::size_t>(i)], v)) with_v.push_back(i);
        if (with_v.empty()) continue;
        std::vector<char> in_trace(static_cast<std::size_t>(nbags), 0);
        for (int i : with_v) in_trace[static_cast<std::size_t>(i)] = 1;
        std::vector<int> stack{with_v.front()};
        std::vector<char> seen(static_cast<std::size_t>(nbags), 0);
        seen[static_cast<std::size_t>(with_v.front())] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : td.tree.neighbors(i))
                if (in_trace[static_cast<std::size_t>(j)] && !seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = 1;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached != with_v.size())
            return {Kind::Coherence,
                    "bags containing vertex " + std::to_string(v) + " are disconnected"};
    }
    return {};
}

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

namespace detail {

constexpr int kTreewidthMaxVertices = 25;

inline std::uint32_t component_boundary(const std::vector<std::uint32_t>& adj, std::uint32_t T,
                                        int v) {
    const std::uint32_t vbit = std::uint32_t{1} << v;
    std::uint32_t comp = vbit;
    std::uint32_t acc = adj[static_cast<std::size_t>(v)];
    std::uint32_t frontier_nbrs = acc;
    for (;;) {
        std::uint32_t grow = frontier_nbrs & T & ~comp;
        if (!grow) break;
        comp |= grow;
        std::uint32_t next = 0;
        while (grow) {
            int u = std::countr_zero(grow);
            grow &= grow - 1;
            next |= adj[static_cast<std::size_t>(u)];
        }
        acc |= next;
        frontier_nbrs = next;
    }
    return acc & ~T & ~vbit;
}

inline int elimination_degree(const std::vector<std::uint32_t>& adj, std::uint32_t T, int v) {
    return std::popcount(component_boundary(adj, T, v));
}

/// Decomposition from an elimination order: bag(v) = {v} + fill-neighborhood
/// of v among later vertices; bag(v) hangs off the bag of its earliest-later
/// neighbor, roots of separate components are chained.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    TreeDecomposition td;
    td.tree = Graph(n);
    td.bags.resize(static_cast<std::size_t>(n));
    std::uint32_t eliminated = 0;
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        std::uint32_t nbrs = adj[static_cast<std::size_t>(v)] & ~eliminated;
        VertexSet bag{v};
        int earliest_later = -1;
        std::uint32_t scan = nbrs;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            bag.push_back(u);
            if (earliest_later == -1 ||
                pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(earliest_later)])
                earliest_later = u;
        }
        std::sort(bag.begin(), bag.end());
        td.bags[static_cast<std::size_t>(i)] = std::move(bag);
        if (earliest_later >= 0)
            td.tree.add_edge(i, pos[static_cast<std::size_t>(earliest_later)]);
        else
            roots.push_back(i);
        // make the remaining neighborhood a clique (fill edges)
        std::uint32_t a = nbrs;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            adj[static_cast<std::size_t>(x)] |= nbrs & ~(std::uint32_t{1} << x);
        }
        eliminated |= std::uint32_t{1} << v;
    }
    for (std::size_t i = 1; i < roots.size(); ++i) td.tree.add_edge(roots[i - 1], roots[i]);
    return td;
}

} // namespace detail

/// Exact treewidth (subset DP, n <= 25) with a validated witness
/// decomposition of minimum width.
inline TreewidthResult treewidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("treewidth_exact: graph must have >= 1 vertex");
    if (n > detail::kTreewidthMaxVertices)
        throw limit_error("treewidth_exact: size limit n <= " +
                          std::to_string(detail::kTreewidthMaxVertices) + " exceeded (n = " +
                          std::to_string(n) + ")");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }

    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<std::int8_t> dp(static_cast<std::size_t>(full) + 1, 127);
    dp[0] = -1;
    for (std::uint32_t S = 1; S <= full; ++S) {
        int best = 127;
        std::uint32_t scan = S;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t prev = S & ~(std::uint32_t{1} << v);
            int cand = std::max<int>(dp[prev], detail::elimination_degree(adj, prev, v));
            best = std::min(best, cand);
        }
        dp[S] = static_cast<std::int8_t>(best);
    }

    // Walk back to recover an optimal elimination order (lowest vertex on ties).
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    std::uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        std::uint32_t scan = S;
        int target = dp[S];
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t prev = S & ~(std::uint32_t{1} << v);
            int cand = std::max<int>(dp[prev], detail::elimination_degree(adj, prev, v));
            if (cand == target) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("treewidth_exact: DP reconstruction failed");
        order[static_cast<std::size_t>(i)] = pick;
        S &= ~(std::uint32_t{1} << pick);
    }

    TreewidthResult res;
    res.width = dp[full];
    res.decomposition = detail::decomposition_from_order(g, order);
    if (res.decomposition.width() != res.width)
        throw std::logic_error("treewidth_exact: witness width " +
                               std::to_string(res.decomposition.width()) +
                               " does not match DP value " + std::to_string(res.width));
    TdValidation check = validate_tree_decomposition(res.decomposition, g);
    if (!check.ok())
        throw std::logic_error("treewidth_exact: witness failed validation: " + check.detail);
    return res;
}

/// Joins decompositions of two subgraphs that meet in at most one vertex
/// (given in the common vertex id space): disjoint union of the two trees
/// plus one edge between bags containing the shared vertex (lowest-index
/// bags when the intersection is empty).  Width is the max of the inputs.
inline TreeDecomposition join_decompositions(const TreeDecomposition& a,
                                             const TreeDecomposition& b,
                                             const VertexSet& shared) {
    if (shared.size() > 1)
        throw std::invalid_argument("join_decompositions: shared set must have size <= 1, got " +
                                    vset::to_string(shared));
    VertexSet ca = covered_vertices(a);
    VertexSet cb = covered_vertices(b);
    VertexSet inter = vset::intersect(ca, cb);
    if (!shared.empty() && !vset::contains(ca, shared.front()))
        throw std::invalid_argument("join_decompositions: shared vertex " +
                                    std::to_string(shared.front()) +
                                    " not covered by first decomposition");
    if (!shared.empty() && !vset::contains(cb, shared.front()))
        throw std::invalid_argument("join_decompositions: shared vertex " +
                                    std::to_string(shared.front()) +
                                    " not covered by second decomposition");
    if (inter != shared)
        throw std::invalid_argument("join_decompositions: hosts overlap in " +
                                    vset::to_string(inter) + ", expected " +
                                    vset::to_string(shared));

    const int na = static_cast<int>(a.bags.size());
    const int nb = static_cast<int>(b.bags.size());
    TreeDecomposition out;
    out.bags = a.bags;
    out.bags.insert(out.bags.end(), b.bags.begin(), b.bags.end());
    out.tree = Graph(na + nb);
    for (auto [i, j] : a.tree.edges()) out.tree.add_edge(i, j);
    for (auto [i, j] : b.tree.edges()) out.tree.add_edge(i + na, j + na);

    int ga = 0, gb = 0;
    if (!shared.empty()) {
        int v = shared.front();
        auto lowest_with = [v](const std::vector<VertexSet>& bags) {
            for (std::size_t i = 0; i < bags.size(); ++i)
                if (vset::contains(bags[i], v)) return static_cast<int>(i);
            return -1; // unreachable: coverage checked above
        };
        ga = lowest_with(a.bags);
        gb = lowest_with(b.bags);
    }
    out.tree.add_edge(ga, gb + na);
    return out;
}

/// Treewidth profile tw_X(k) for k = 1..r over induced subgraphs of x.
inline ProfileResult tw_profile(const Graph& x, int r, const ProfileOptions& opts = {}) {
    return invariant_profile(
        x, r, [](const Graph& sub) { return treewidth_exact(sub).width; }, opts);
}

} // namespace sepwidth
