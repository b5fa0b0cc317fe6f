#pragma once

// Exact linear-layout parameters: cutwidth, pathwidth (as vertex separation
// number, with a path-decomposition certificate) and sumcut.  Each is a
// dynamic program over vertex subsets interpreted as layout prefixes:
//
//   cutwidth:  f(S) = max(edge_boundary(S), min_{v in S} f(S - v))
//   pathwidth: f(S) = max(vertex_boundary(S), min_{v in S} f(S - v))
//   sumcut:    f(S) = vertex_boundary(S) + min_{v in S} f(S - v)
//
// The witness order is reconstructed by walking the DP back, breaking ties
// towards the lowest vertex, so layouts are canonical.

#include "graph.hpp"
#include "profile.hpp"
#include "treewidth.hpp"

#include <bit>
#include <cstdint>

namespace sepwidth {

struct LinearLayout {
    std::vector<int> order; // order[i] = vertex placed at position i
};

namespace detail {

constexpr int kLayoutMaxVertices = 20;
constexpr int kSumcutMaxVertices = 18;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    return adj;
}

inline int edge_boundary(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    int cut = 0;
    std::uint32_t scan = s;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        cut += std::popcount(adj[static_cast<std::size_t>(u)] & ~s);
    }
    return cut;
}

inline int vertex_boundary(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    int b = 0;
    std::uint32_t scan = s;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        if (adj[static_cast<std::size_t>(u)] & ~s) ++b;
    }
    return b;
}

enum class LayoutKind { Cutwidth, Pathwidth, Sumcut };

struct LayoutDp {
    int value = 0;
    std::vector<int> order;
};

inline LayoutDp layout_dp(const Graph& g, LayoutKind kind) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("layout solver: graph must have >= 1 vertex");
    const int limit = kind == LayoutKind::Sumcut ? kSumcutMaxVertices : kLayoutMaxVertices;
    if (n > limit)
        throw limit_error("layout solver: size limit n <= " + std::to_string(limit) +
                          " exceeded (n = " + std::to_string(n) + ")");

    auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const bool additive = kind == LayoutKind::Sumcut;
    auto boundary = [&](std::uint32_t s) {
        return kind == LayoutKind::Cutwidth ? edge_boundary(adj, s) : vertex_boundary(adj, s);
    };

    std::vector<std::int16_t> dp(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t S = 1; S <= full; ++S) {
        int sub_best = 32767;
        std::uint32_t scan = S;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            sub_best = std::min<int>(sub_best, dp[S & ~(std::uint32_t{1} << v)]);
        }
        int b = boundary(S);
        dp[S] = static_cast<std::int16_t>(additive ? b + sub_best : std::max(b, sub_best));
    }

    LayoutDp res;
    res.value = dp[full];
    res.order.assign(static_cast<std::size_t>(n), 0);
    std::uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        int b = boundary(S);
        int pick = -1;
        std::uint32_t scan = S;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int prev = dp[S & ~(std::uint32_t{1} << v)];
            int cand = additive ? b + prev : std::max(b, prev);
            if (cand == dp[S]) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("layout solver: DP reconstruction failed");
        res.order[static_cast<std::size_t>(i)] = pick;
        S &= ~(std::uint32_t{1} << pick);
    }
    return res;
}

} // namespace detail

struct CutwidthResult {
    int value = 0;
    LinearLayout layout;
};

/// Minimum over orders of the maximum number of edges crossing a prefix
/// boundary.  Exact, n <= 20.
inline CutwidthResult cutwidth_exact(const Graph& g) {
    auto dp = detail::layout_dp(g, detail::LayoutKind::Cutwidth);
    return {dp.value, LinearLayout{std::move(dp.order)}};
}

struct SumcutResult {
    int value = 0;
    LinearLayout layout;
};

/// Minimum over orders of the sum over prefixes of the number of prefix
/// vertices with a neighbour outside the prefix.  Exact, n <= 18.
inline SumcutResult sumcut_exact(const Graph& g) {
    auto dp = detail::layout_dp(g, detail::LayoutKind::Sumcut);
    return {dp.value, LinearLayout{std::move(dp.order)}};
}

struct PathwidthResult {
    int width = 0;
    LinearLayout layout;              // vertex-separation-optimal order
    TreeDecomposition decomposition;  // its tree is a path
};

/// Exact pathwidth via the vertex separation number, n <= 20.  The witness
/// is a path decomposition built from the optimal order: bag i holds v_i
/// plus every earlier vertex that still has a neighbour at position >= i.
inline PathwidthResult pathwidth_exact(const Graph& g) {
    auto dp = detail::layout_dp(g, detail::LayoutKind::Pathwidth);
    const int n = g.vertex_count();
    const auto& order = dp.order;

    TreeDecomposition td;
    td.tree = Graph(n);
    for (int i = 0; i + 1 < n; ++i) td.tree.add_edge(i, i + 1);
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        VertexSet bag{order[static_cast<std::size_t>(i)]};
        for (int j = 0; j < i; ++j) {
            int u = order[static_cast<std::size_t>(j)];
            for (int w : g.neighbors(u))
                if (pos[static_cast<std::size_t>(w)] >= i) {
                    bag.push_back(u);
                    break;
                }
        }
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
    }

    if (td.width() != dp.value)
        throw std::logic_error("pathwidth_exact: witness width " + std::to_string(td.width()) +
                               " does not match DP value " + std::to_string(dp.value));
    TdValidation check = validate_tree_decomposition(td, g);
    if (!check.ok())
        throw std::logic_error("pathwidth_exact: witness failed validation: " + check.detail);
    return {dp.value, LinearLayout{std::move(dp.order)}, std::move(td)};
}

inline ProfileResult cutwidth_profile(const Graph& x, int r, const ProfileOptions& opts = {}) {
    return invariant_profile(
        x, r, [](const Graph& sub) { return cutwidth_exact(sub).value; }, opts);
}

inline ProfileResult pathwidth_profile(const Graph& x, int r, const ProfileOptions& opts = {}) {
    return invariant_profile(
        x, r, [](const Graph& sub) { return pathwidth_exact(sub).width; }, opts);
}

inline ProfileResult sumcut_profile(const Graph& x, int r, const ProfileOptions& opts = {}) {
    return invariant_profile(
        x, r, [](const Graph& sub) { return sumcut_exact(sub).value; }, opts);
}

} // namespace sepwidth
