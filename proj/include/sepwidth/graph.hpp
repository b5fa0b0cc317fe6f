#pragma once

// Finite simple undirected graphs and the subgraph machinery shared by the
// solvers: connectivity, biconnected blocks, connected-induced-subgraph
// enumeration and simple-cycle enumeration.
//
// Vertices are 0..n-1.  Vertex identity is positional; labels are metadata
// only and never affect any invariant computed here.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sepwidth {

/// Input error with the 1-based line it was detected on (0 = not line based).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                      : std::move(msg)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Raised when an exact solver is asked for an instance above its size limit.
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free subset of the vertices of some host graph.
using VertexSet = std::vector<int>;

namespace vset {

inline VertexSet sorted(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet diff(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string to_string(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace vset

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Rejects self-loops, parallel edges and out-of-range endpoints.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        edges_.insert(it, e);
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }

    /// Neighbours in ascending order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges as normalized (u < v) pairs in lexicographic order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void set_label(int v, std::string label) {
        check_vertex(v);
        labels_[v] = std::move(label);
    }

    const std::string* label(int v) const {
        auto it = labels_.find(v);
        return it == labels_.end() ? nullptr : &it->second;
    }

    const std::map<int, std::string>& labels() const { return labels_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    static void insert_sorted(std::vector<int>& vec, int x) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, std::string> labels_;
};

// ── Text I/O ─────────────────────────────────────────────────────────

/// Edge-list format: first line "n m", then m lines "u v", 0-based, LF.
/// Strict: rejects malformed lines, out-of-range endpoints, self-loops and
/// duplicate edges, each with its line number.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw parse_error("empty input", 0);

    auto parse_two = [&](long long& a, long long& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw parse_error("expected two integers, got \"" + line + "\"", lineno);
    };

    long long n = 0, m = 0;
    parse_two(n, m);
    if (n < 1) throw parse_error("vertex count must be >= 1", lineno);
    if (m < 0) throw parse_error("edge count must be >= 0", lineno);

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                                std::to_string(i), lineno);
        long long u = 0, v = 0;
        parse_two(u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex index out of range in \"" + line + "\"", lineno);
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    if (next_line()) throw parse_error("trailing content \"" + line + "\"", lineno);
    return g;
}

inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ── Subgraphs and connectivity ───────────────────────────────────────

struct InducedSubgraph {
    Graph graph;                 // vertices relabeled 0..|s|-1
    std::vector<int> old_of_new; // new index -> host vertex (ascending)
};

/// Induced subgraph on `s`; vertices relabeled in ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet verts = vset::sorted(s);
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in host graph");
    std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        new_of_old[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    Graph sub(static_cast<int>(verts.size()));
    for (int v : verts) {
        for (int w : g.neighbors(v)) {
            if (w > v && new_of_old[static_cast<std::size_t>(w)] >= 0)
                sub.add_edge(new_of_old[static_cast<std::size_t>(v)],
                             new_of_old[static_cast<std::size_t>(w)]);
        }
        if (const std::string* lab = g.label(v))
            sub.set_label(new_of_old[static_cast<std::size_t>(v)], *lab);
    }
    return {std::move(sub), std::move(verts)};
}

/// Maximal connected vertex sets, ordered by decreasing size, ties broken
/// by smallest contained vertex.  This ordering is fixed globally so every
/// construction built on it is deterministic.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        stack.assign(1, s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// ── Connected induced subgraph enumeration ───────────────────────────

/// Visits every connected vertex set of size <= r exactly once, in a
/// deterministic order (ESU-style extension with a fixed minimum vertex).
/// The callback returns false to stop early; the function returns false
/// iff enumeration was stopped.
inline bool for_each_connected_induced_subgraph(
    const Graph& g, int r, const std::function<bool(const VertexSet&)>& visit) {
    if (r < 1) throw std::invalid_argument("size bound r must be >= 1");
    const int n = g.vertex_count();
    std::vector<bool> blocked(static_cast<std::size_t>(n), false);
    VertexSet sub;
    std::vector<int> ext;

    // Emits sub, then branches on each extension candidate.  A popped
    // candidate stays blocked for its siblings, which is what makes each
    // set appear exactly once.
    std::function<bool(std::vector<int>)> extend = [&](std::vector<int> cand) -> bool {
        VertexSet emitted(sub.begin(), sub.end());
        std::sort(emitted.begin(), emitted.end());
        if (!visit(emitted)) return false;
        if (static_cast<int>(sub.size()) == r) return true;
        while (!cand.empty()) {
            int w = cand.back();
            cand.pop_back();
            std::vector<int> added;
            for (int u : g.neighbors(w)) {
                if (u > sub.front() && !blocked[static_cast<std::size_t>(u)]) {
                    blocked[static_cast<std::size_t>(u)] = true;
                    added.push_back(u);
                }
            }
            std::vector<int> next = cand;
            next.insert(next.end(), added.begin(), added.end());
            sub.push_back(w);
            bool keep_going = extend(std::move(next));
            sub.pop_back();
            for (int u : added) blocked[static_cast<std::size_t>(u)] = false;
            if (!keep_going) return false;
        }
        return true;
    };

    for (int root = 0; root < n; ++root) {
        blocked[static_cast<std::size_t>(root)] = true;
        std::vector<int> cand;
        for (int u : g.neighbors(root)) {
            if (u > root) {
                blocked[static_cast<std::size_t>(u)] = true;
                cand.push_back(u);
            }
        }
        sub.assign(1, root);
        bool keep_going = extend(std::move(cand));
        sub.clear();
        for (int u : g.neighbors(root))
            if (u > root) blocked[static_cast<std::size_t>(u)] = false;
        blocked[static_cast<std::size_t>(root)] = false;
        if (!keep_going) return false;
    }
    return true;
}

inline std::vector<VertexSet> connected_induced_subgraphs(const Graph& g, int r) {
    std::vector<VertexSet> out;
    for_each_connected_induced_subgraph(g, r, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

// ── Blocks (biconnected components) ──────────────────────────────────

struct BlockDecomposition {
    std::vector<VertexSet> blocks; // each a maximal 2-connected subgraph or a bridge
    VertexSet cut_vertices;
};

/// Hopcroft–Tarjan block decomposition.  Every edge lies in exactly one
/// block; isolated vertices belong to no block.
inline BlockDecomposition blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> out_blocks;
    int timer = 0;

    auto pop_block = [&](std::pair<int, int> until) {
        VertexSet verts;
        for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        out_blocks.push_back(vset::sorted(std::move(verts)));
    };

    // Iterative DFS; frame = (vertex, neighbor cursor).
    struct Frame {
        int v;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        int root_children = 0;
        stack.push_back({root});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = f.v;
                    if (f.v == root) ++root_children;
                    edge_stack.emplace_back(f.v, w);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w});
                } else if (w != parent[static_cast<std::size_t>(f.v)] &&
                           disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                    if (p != root) is_cut[static_cast<std::size_t>(p)] = true;
                    pop_block({p, v});
                }
            }
        }
        // Root cut status once its subtree count is final.
        is_cut[static_cast<std::size_t>(root)] = root_children >= 2;
    }

    std::stable_sort(out_blocks.begin(), out_blocks.end(),
                     [](const VertexSet& a, const VertexSet& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a < b;
                     });
    BlockDecomposition bd;
    bd.blocks = std::move(out_blocks);
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) bd.cut_vertices.push_back(v);
    return bd;
}

// ── Simple cycle enumeration ─────────────────────────────────────────

struct CycleEnumeration {
    std::size_t count = 0;
    bool truncated = false;
};

/// Visits every simple cycle (length >= 3) exactly once up to rotation and
/// reflection: each cycle is rooted at its minimum vertex and oriented so
/// the second vertex is smaller than the last.  Stops after `limit` cycles
/// with the truncation flag set.
inline CycleEnumeration for_each_simple_cycle(
    const Graph& g, std::size_t limit,
    const std::function<void(const std::vector<int>&)>& visit) {
    if (limit == 0) throw std::invalid_argument("cycle limit must be > 0");
    const int n = g.vertex_count();
    CycleEnumeration result;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    std::vector<int> path;

    std::function<bool(int, int)> dfs = [&](int root, int v) -> bool {
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                if (result.count == limit) {
                    result.truncated = true;
                    return false;
                }
                ++result.count;
                visit(path);
            } else if (w > root && !on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                bool keep_going = dfs(root, w);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = false;
                if (!keep_going) return false;
            }
        }
        return true;
    };

    for (int root = 0; root < n && !result.truncated; ++root) {
        on_path[static_cast<std::size_t>(root)] = true;
        path.assign(1, root);
        dfs(root, root);
        path.clear();
        on_path[static_cast<std::size_t>(root)] = false;
    }
    return result;
}

inline std::vector<std::vector<int>> simple_cycles(const Graph& g, std::size_t limit) {
    std::vector<std::vector<int>> out;
    for_each_simple_cycle(g, limit, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

// ── Standard graphs ──────────────────────────────────────────────────

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

/// Complete binary tree with 2^(height+1) - 1 vertices, root 0.
inline Graph complete_binary_tree(int height) {
    int n = (1 << (height + 1)) - 1;
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, (v - 1) / 2);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return g;
}

} // namespace sepwidth
