#pragma once

// Cayley balls of free products G*H of finite groups (Z is special-cased so
// the free group is reachable).  Vertices are normal-form words: alternating
// syllables of nonidentity factor elements.  Right multiplication by a
// generator merges into or cancels the trailing syllable, so BFS over
// generators explores exactly the word-metric ball.
//
// Each ball carries its natural tree-grading: the pieces are the maximal
// coset subgraphs wG and wH intersected with the ball.

#include "graph.hpp"
#include "treegraded.hpp"

#include <map>
#include <set>

namespace sepwidth {

enum class GroupKind { FiniteTable, CyclicInfinite };

struct GroupSpec {
    GroupKind kind = GroupKind::FiniteTable;
    int order = 0;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    std::vector<int> gens;               // element ids, identity excluded
};

struct GroupValidation {
    bool ok = true;
    std::string detail;
};

/// Checks the group axioms on the table (associativity exhaustively up to
/// order 24, deterministically sampled above) and that the generating set
/// excludes the identity, is closed under inverses and generates.
inline GroupValidation validate_group(const GroupSpec& spec) {
    if (spec.kind == GroupKind::CyclicInfinite) return {};
    const int n = spec.order;
    if (n < 1) return {false, "order must be >= 1"};
    if (static_cast<int>(spec.table.size()) != n)
        return {false, "table has " + std::to_string(spec.table.size()) + " rows, expected " +
                           std::to_string(n)};
    for (int a = 0; a < n; ++a) {
        const auto& row = spec.table[static_cast<std::size_t>(a)];
        if (static_cast<int>(row.size()) != n)
            return {false, "table row " + std::to_string(a) + " has " +
                               std::to_string(row.size()) + " entries, expected " +
                               std::to_string(n)};
        for (int b = 0; b < n; ++b)
            if (row[static_cast<std::size_t>(b)] < 0 || row[static_cast<std::size_t>(b)] >= n)
                return {false, "table entry (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") = " + std::to_string(row[static_cast<std::size_t>(b)]) +
                                   " out of range"};
    }
    auto mul = [&](int a, int b) { return spec.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int x = 0; x < n && is_id; ++x) is_id = mul(e, x) == x && mul(x, e) == x;
        if (is_id) {
            identity = e;
            break;
        }
    }
    if (identity < 0) return {false, "no identity element"};

    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n && !has_inverse; ++y)
            has_inverse = mul(x, y) == identity && mul(y, x) == identity;
        if (!has_inverse) return {false, "element " + std::to_string(x) + " has no inverse"};
    }

    if (n <= 24) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        return {false, "associativity fails at (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")"};
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < 50000; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            int a = static_cast<int>((state >> 33) % static_cast<std::uint64_t>(n));
            int b = static_cast<int>((state >> 17) % static_cast<std::uint64_t>(n));
            int c = static_cast<int>(state % static_cast<std::uint64_t>(n));
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                return {false, "associativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")"};
        }
    }

    if (spec.gens.empty()) return {false, "generating set is empty"};
    for (int s : spec.gens) {
        if (s < 0 || s >= n) return {false, "generator " + std::to_string(s) + " out of range"};
        if (s == identity) return {false, "generator " + std::to_string(s) + " is the identity"};
    }
    for (int s : spec.gens) {
        int inv = -1;
        for (int y = 0; y < n; ++y)
            if (mul(s, y) == identity) {
                inv = y;
                break;
            }
        if (std::find(spec.gens.begin(), spec.gens.end(), inv) == spec.gens.end())
            return {false, "generators not closed under inverses: " + std::to_string(inv) +
                               " = inverse of " + std::to_string(s) + " is missing"};
    }
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    reached[static_cast<std::size_t>(identity)] = 1;
    std::vector<int> queue{identity};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int s : spec.gens) {
            int next = mul(queue[qi], s);
            if (!reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    for (int x = 0; x < n; ++x)
        if (!reached[static_cast<std::size_t>(x)])
            return {false, "generating set does not generate: element " + std::to_string(x) +
                               " unreachable"};
    return {};
}

// ── Factor operations and normal forms ───────────────────────────────

/// Multiplication oracle for one free factor: a finite table group or Z.
class FactorOps {
public:
    static FactorOps finite(const GroupSpec& spec) {
        GroupValidation check = validate_group(spec);
        if (!check.ok) throw std::invalid_argument("invalid group spec: " + check.detail);
        FactorOps f;
        f.finite_ = true;
        f.table_ = spec.table;
        for (int e = 0; e < spec.order; ++e) {
            bool is_id = true;
            for (int x = 0; x < spec.order && is_id; ++x)
                is_id = f.mul(e, x) == x && f.mul(x, e) == x;
            if (is_id) {
                f.identity_ = e;
                break;
            }
        }
        for (int s : spec.gens) f.gens_.push_back(s);
        return f;
    }

    static FactorOps integers() {
        FactorOps f;
        f.finite_ = false;
        f.gens_ = {1, -1};
        return f;
    }

    static FactorOps from_spec(const GroupSpec& spec) {
        return spec.kind == GroupKind::FiniteTable ? finite(spec) : integers();
    }

    bool is_finite() const { return finite_; }
    long long identity() const { return finite_ ? identity_ : 0; }
    bool is_identity(long long a) const { return a == identity(); }
    const std::vector<long long>& generators() const { return gens_; }

    long long mul(long long a, long long b) const {
        if (!finite_) return a + b;
        return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

private:
    bool finite_ = true;
    std::vector<std::vector<int>> table_;
    long long identity_ = 0;
    std::vector<long long> gens_;
};

struct Syllable {
    int factor = 0; // 0 = G, 1 = H
    long long elem = 0;

    bool operator==(const Syllable&) const = default;
    bool operator<(const Syllable& o) const {
        return factor != o.factor ? factor < o.factor : elem < o.elem;
    }
};

/// Normal form in G*H: alternating factor tags, no identity syllables.
struct Word {
    std::vector<Syllable> syllables;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return syllables < o.syllables; }

    std::string label() const {
        if (syllables.empty()) return "e";
        std::string out;
        for (std::size_t i = 0; i < syllables.size(); ++i) {
            if (i) out += ".";
            out += syllables[i].factor == 0 ? "g" : "h";
            out += std::to_string(syllables[i].elem);
        }
        return out;
    }
};

/// Right multiplication by a generator of one factor, renormalizing: the
/// trailing syllable of the same factor is merged and dropped if it cancels.
inline Word append_generator(Word w, int factor, long long gen, const FactorOps& ops) {
    if (!w.syllables.empty() && w.syllables.back().factor == factor) {
        long long merged = ops.mul(w.syllables.back().elem, gen);
        if (ops.is_identity(merged))
            w.syllables.pop_back();
        else
            w.syllables.back().elem = merged;
    } else if (!ops.is_identity(gen)) {
        w.syllables.push_back({factor, gen});
    }
    return w;
}

// ── Ball generators ──────────────────────────────────────────────────

struct FreeProductBall {
    Graph graph;        // labeled with normal forms
    TreeGrading grading;
    std::vector<Word> words; // vertex -> normal form
    std::vector<int> distance;
};

constexpr std::size_t kDefaultBallCap = 5000;

/// Word-metric ball of radius `radius` in Cay(G*H, S + T), with the coset
/// tree-grading.  Edges are included only when both endpoints lie in the
/// ball, so boundary pieces are truncated factor balls.
inline FreeProductBall free_product_ball(const GroupSpec& gspec, const GroupSpec& hspec,
                                         int radius, std::size_t ball_cap = kDefaultBallCap) {
    if (radius < 0) throw std::invalid_argument("free_product_ball: radius must be >= 0");
    FactorOps ops[2] = {FactorOps::from_spec(gspec), FactorOps::from_spec(hspec)};

    std::vector<Word> words{Word{}};
    std::vector<int> dist{0};
    std::map<Word, int> index{{Word{}, 0}};

    for (std::size_t qi = 0; qi < words.size(); ++qi) {
        if (dist[qi] == radius) continue;
        Word w = words[qi]; // copy: words may reallocate
        for (int f = 0; f < 2; ++f)
            for (long long s : ops[f].generators()) {
                Word next = append_generator(w, f, s, ops[f]);
                if (index.find(next) != index.end()) continue;
                if (words.size() == ball_cap)
                    throw limit_error("free_product_ball: ball cap " + std::to_string(ball_cap) +
                                      " exceeded at radius " + std::to_string(dist[qi] + 1));
                index.emplace(next, static_cast<int>(words.size()));
                words.push_back(next);
                dist.push_back(dist[qi] + 1);
            }
    }

    const int n = static_cast<int>(words.size());
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 2; ++f)
            for (long long s : ops[f].generators()) {
                Word next = append_generator(words[static_cast<std::size_t>(i)], f, s, ops[f]);
                auto it = index.find(next);
                if (it == index.end() || it->second == i) continue;
                edge_set.emplace(std::min(i, it->second), std::max(i, it->second));
            }

    FreeProductBall ball;
    ball.graph = Graph(n);
    for (auto [u, v] : edge_set) ball.graph.add_edge(u, v);
    for (int i = 0; i < n; ++i)
        ball.graph.set_label(i, words[static_cast<std::size_t>(i)].label());

    // coset pieces: strip the trailing syllable of the piece's factor
    std::map<std::pair<int, Word>, VertexSet> cosets;
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 2; ++f) {
            Word base = words[static_cast<std::size_t>(i)];
            if (!base.syllables.empty() && base.syllables.back().factor == f)
                base.syllables.pop_back();
            cosets[{f, std::move(base)}].push_back(i);
        }
    ball.grading.host = ball.graph;
    for (auto& [key, members] : cosets) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        ball.grading.pieces.push_back(members);
    }
    if (ball.grading.pieces.empty()) ball.grading.pieces.push_back({0}); // radius-0 ball

    TgValidation check = validate_tree_grading(ball.grading);
    if (!check.ok())
        throw std::logic_error("free_product_ball: coset grading invalid: " + check.detail);
    ball.words = std::move(words);
    ball.distance = std::move(dist);
    return ball;
}

/// Word-metric ball in the Cayley graph of a single factor.  For a finite
/// group any radius at least the diameter yields the full Cayley graph.
inline Graph cayley_ball(const GroupSpec& spec, int radius) {
    if (radius < 0) throw std::invalid_argument("cayley_ball: radius must be >= 0");
    FactorOps ops = FactorOps::from_spec(spec);

    std::vector<long long> elems{ops.identity()};
    std::map<long long, int> index{{ops.identity(), 0}};
    std::vector<int> dist{0};
    for (std::size_t qi = 0; qi < elems.size(); ++qi) {
        if (dist[qi] == radius) continue;
        for (long long s : ops.generators()) {
            long long next = ops.mul(elems[qi], s);
            if (index.find(next) != index.end()) continue;
            index.emplace(next, static_cast<int>(elems.size()));
            elems.push_back(next);
            dist.push_back(dist[qi] + 1);
        }
    }

    const int n = static_cast<int>(elems.size());
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i)
        for (long long s : ops.generators()) {
            auto it = index.find(ops.mul(elems[static_cast<std::size_t>(i)], s));
            if (it == index.end() || it->second == i) continue;
            edge_set.emplace(std::min(i, it->second), std::max(i, it->second));
        }
    Graph g(n);
    for (auto [u, v] : edge_set) g.add_edge(u, v);
    for (int i = 0; i < n; ++i)
        g.set_label(i, ops.is_identity(elems[static_cast<std::size_t>(i)])
                           ? "e"
                           : "g" + std::to_string(elems[static_cast<std::size_t>(i)]));
    return g;
}

} // namespace sepwidth
