#pragma once

// Cutsize, the separation profile, balanced separators, the separation
// number, and the constructive conversion of a 1/2-cutset into a balanced
// separator of the same size.
//
// All balance thresholds are exact rational comparisons (2*|comp| <= n,
// 3*|side| <= 2n); no floating point.  Subset searches go by cardinality
// then lexicographic order, so every witness is canonical.

#include "graph.hpp"
#include "profile.hpp"

namespace sepwidth {

struct BalancedSeparator {
    VertexSet a;
    VertexSet b;

    int size() const { return static_cast<int>(vset::intersect(a, b).size()); }
};

struct BsepValidation {
    bool ok = true;
    std::string detail;
};

/// Defn-level check: |A\B|, |B\A| <= 2n/3, no edge between the private
/// sides, and (unless `completion` is off) A and B together cover the host.
inline BsepValidation validate_balanced_separator(const BalancedSeparator& bs, const Graph& host,
                                                  bool completion = true) {
    const int n = host.vertex_count();
    for (int v : bs.a)
        if (v < 0 || v >= n) return {false, "A references vertex " + std::to_string(v)};
    for (int v : bs.b)
        if (v < 0 || v >= n) return {false, "B references vertex " + std::to_string(v)};
    VertexSet a_only = vset::diff(bs.a, bs.b);
    VertexSet b_only = vset::diff(bs.b, bs.a);
    if (3 * static_cast<long long>(a_only.size()) > 2LL * n)
        return {false, "|A\\B| = " + std::to_string(a_only.size()) + " exceeds 2n/3"};
    if (3 * static_cast<long long>(b_only.size()) > 2LL * n)
        return {false, "|B\\A| = " + std::to_string(b_only.size()) + " exceeds 2n/3"};
    for (int u : a_only)
        for (int w : host.neighbors(u))
            if (vset::contains(b_only, w))
                return {false, "edge (" + std::to_string(u) + "," + std::to_string(w) +
                                   ") joins A\\B to B\\A"};
    if (completion) {
        VertexSet all = vset::unite(bs.a, bs.b);
        if (static_cast<int>(all.size()) != n) {
            for (int v = 0; v < n; ++v)
                if (!vset::contains(all, v))
                    return {false, "vertex " + std::to_string(v) + " covered by neither side"};
        }
    }
    return {};
}

namespace detail {

/// Components of g - removed, in the canonical order (decreasing size,
/// ties by smallest contained vertex).
inline std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<char> dead(static_cast<std::size_t>(n), 0);
    for (int v : removed) dead[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (dead[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        stack.assign(1, s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!dead[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& x, const VertexSet& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x.front() < y.front();
    });
    return comps;
}

inline bool is_half_cutset(const Graph& g, const VertexSet& s) {
    const long long n = g.vertex_count();
    for (const auto& comp : components_after_removal(g, s))
        if (2 * static_cast<long long>(comp.size()) > n) return false;
    return true;
}

/// Visits k-subsets of 0..n-1 in lexicographic order; visit returns true to
/// stop (found).  Returns true iff stopped.
inline bool for_each_subset_of_size(int n, int k, const std::function<bool(const VertexSet&)>& visit) {
    if (k > n) return false;
    VertexSet s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (visit(s)) return true;
        // next combination
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

struct CutsizeResult {
    int value = 0;
    VertexSet cutset;
};

/// Minimum |S| such that every component of g - S has at most n/2 vertices.
/// Searches by increasing cardinality, so the first hit is optimal and the
/// witness is the lexicographically least optimal cutset.
inline CutsizeResult cutsize_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("cutsize_exact: graph must have >= 1 vertex");
    for (int k = 0; k <= n; ++k) {
        CutsizeResult res;
        bool found = detail::for_each_subset_of_size(n, k, [&](const VertexSet& s) {
            if (!detail::is_half_cutset(g, s)) return false;
            res.value = k;
            res.cutset = s;
            return true;
        });
        if (found) return res;
    }
    throw std::logic_error("cutsize_exact: no cutset found"); // unreachable
}

/// Separation profile sep_X(k) for k = 1..r.
inline ProfileResult sep_profile(const Graph& x, int r, const ProfileOptions& opts = {}) {
    return invariant_profile(
        x, r, [](const Graph& sub) { return cutsize_exact(sub).value; }, opts);
}

struct BalancedSeparatorResult {
    int size = 0;
    BalancedSeparator separator;
};

namespace detail {

/// Given the components of g - s, try to split them into two sides of at
/// most 2n/3 vertices each.  On success fills `side_a` with a deterministic
/// choice (smallest feasible side sum, components picked greedily in
/// canonical order by subset-sum reconstruction).
inline bool split_components(const std::vector<VertexSet>& comps, long long n,
                             std::vector<int>& side_a) {
    const int k = static_cast<int>(comps.size());
    long long total = 0;
    for (const auto& c : comps) total += static_cast<long long>(c.size());
    // need a side sum s with 3s <= 2n and 3(total - s) <= 2n
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(k) + 1,
                                         std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
    reach[0][0] = 1;
    for (int i = 0; i < k; ++i) {
        const auto sz = static_cast<long long>(comps[static_cast<std::size_t>(i)].size());
        for (long long s = 0; s <= total; ++s) {
            if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) continue;
            reach[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(s)] = 1;
            if (s + sz <= total)
                reach[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(s + sz)] = 1;
        }
    }
    for (long long s = 0; s <= total; ++s) {
        if (3 * s > 2 * n) break;
        if (3 * (total - s) > 2 * n) continue;
        if (!reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]) continue;
        // reconstruct: prefer leaving component i out when possible
        side_a.clear();
        long long rem = s;
        for (int i = k; i >= 1; --i) {
            if (reach[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(rem)]) continue;
            side_a.push_back(i - 1);
            rem -= static_cast<long long>(comps[static_cast<std::size_t>(i) - 1].size());
        }
        std::reverse(side_a.begin(), side_a.end());
        return true;
    }
    return false;
}

} // namespace detail

/// Minimum-size balanced separator.  With `completion` (the default) A and B
/// must cover the host; without that constraint the empty pair wins
/// immediately, and the flag makes that degenerate variant observable.
inline BalancedSeparatorResult balanced_separator_min(const Graph& g, bool completion = true) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("balanced_separator_min: graph must have >= 1 vertex");
    if (!completion) return {0, BalancedSeparator{{}, {}}};

    for (int k = 0; k <= n; ++k) {
        BalancedSeparatorResult res;
        bool found = detail::for_each_subset_of_size(n, k, [&](const VertexSet& s) {
            auto comps = detail::components_after_removal(g, s);
            std::vector<int> side_a;
            if (!detail::split_components(comps, n, side_a)) return false;
            VertexSet a = s, b = s;
            std::size_t idx = 0;
            for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
                bool in_a = idx < side_a.size() && side_a[idx] == i;
                if (in_a) ++idx;
                auto& side = in_a ? a : b;
                side.insert(side.end(), comps[static_cast<std::size_t>(i)].begin(),
                            comps[static_cast<std::size_t>(i)].end());
            }
            res.size = k;
            res.separator = {vset::sorted(std::move(a)), vset::sorted(std::move(b))};
            return true;
        });
        if (found) {
            auto check = validate_balanced_separator(res.separator, g);
            if (!check.ok)
                throw std::logic_error("balanced_separator_min: witness invalid: " + check.detail);
            return res;
        }
    }
    throw std::logic_error("balanced_separator_min: no separator found"); // unreachable
}

struct SeparationNumberResult {
    int value = 0;
    VertexSet witness; // vertex set of a worst induced subgraph
};

/// Smallest s such that every subgraph admits a balanced separator of size
/// <= s; computed as the max of balanced_separator_min over induced
/// subgraphs (dropping edges only weakens the no-edge constraint).  Uses the
/// bound bsep_min <= ceil(k/3) to stop early.
inline SeparationNumberResult separation_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("separation_number: graph must have >= 1 vertex");
    if (n > 16)
        throw limit_error("separation_number: size limit n <= 16 exceeded (n = " +
                          std::to_string(n) + ")");
    SeparationNumberResult best;
    best.value = 0;
    for (int k = n; k >= 1; --k) {
        if ((k + 2) / 3 <= best.value) break; // ceil(k/3) bound
        detail::for_each_subset_of_size(n, k, [&](const VertexSet& s) {
            Graph sub = induced_subgraph(g, s).graph;
            int v = balanced_separator_min(sub).size;
            if (v > best.value) {
                best.value = v;
                best.witness = s;
            }
            return false; // keep scanning the whole size class
        });
    }
    return best;
}

/// The constructive step of the sandwich proof: order the components of
/// g - c by decreasing size, take the longest prefix A' with |A'| <= 2n/3,
/// put the rest in B', and return (A' + C, B' + C).  Requires c to be a
/// valid 1/2-cutset; the output is a balanced separator of size |c|.
inline BalancedSeparator cutset_to_balanced_separator(const Graph& g, const VertexSet& c) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("cutset_to_balanced_separator: empty host");
    VertexSet cut = vset::sorted(c);
    for (int v : cut)
        if (v < 0 || v >= n)
            throw std::invalid_argument("cutset references vertex " + std::to_string(v));

    auto comps = detail::components_after_removal(g, cut);
    for (const auto& comp : comps)
        if (2 * static_cast<long long>(comp.size()) > static_cast<long long>(n))
            throw std::invalid_argument(
                "not a 1/2-cutset: component " + vset::to_string(comp) + " has " +
                std::to_string(comp.size()) + " of " + std::to_string(n) + " vertices");

    if (comps.empty()) return {cut, cut}; // c covers every vertex

    VertexSet a_side;
    std::size_t ell = 0;
    while (ell < comps.size()) {
        if (3 * static_cast<long long>(a_side.size() + comps[ell].size()) >
            2LL * n)
            break;
        a_side.insert(a_side.end(), comps[ell].begin(), comps[ell].end());
        ++ell;
    }
    VertexSet b_side;
    for (std::size_t i = ell; i < comps.size(); ++i)
        b_side.insert(b_side.end(), comps[i].begin(), comps[i].end());

    BalancedSeparator out{vset::unite(vset::sorted(std::move(a_side)), cut),
                          vset::unite(vset::sorted(std::move(b_side)), cut)};
    auto check = validate_balanced_separator(out, g);
    if (!check.ok)
        throw std::logic_error("cutset_to_balanced_separator: construction invalid: " +
                               check.detail);
    return out;
}

} // namespace sepwidth
