#pragma once

// Generic profile engine: given a graph invariant, computes
//   profile(k) = max { invariant(G[s]) : s enumerated, |s| <= k },  k = 1..r.
//
// Subgraphs are enumerated either over connected induced vertex sets (the
// default) or over all induced vertex sets.  Enumeration order is fixed, the
// max-reduction is order-independent, and witnesses are chosen by earliest
// enumeration index, so results are byte-stable for any worker count.

#include "graph.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace sepwidth {

enum class SubgraphMode { Connected, AllInduced };

inline const char* to_string(SubgraphMode m) {
    return m == SubgraphMode::Connected ? "connected" : "all-induced";
}

/// Default subgraph budget; override with SEPWIDTH_BUDGET.
inline std::size_t default_subgraph_budget() {
    if (const char* env = std::getenv("SEPWIDTH_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

struct ProfileOptions {
    SubgraphMode mode = SubgraphMode::Connected;
    std::size_t budget = default_subgraph_budget(); // max subgraphs examined
    int jobs = 1;
};

struct ProfileEntry {
    int k = 0;
    int value = 0;
    VertexSet witness; // host vertex set attaining the value
};

struct ProfileResult {
    std::vector<ProfileEntry> entries; // one per k = 1..r
    bool exact = true;                 // false: budget hit, values are lower bounds
    std::size_t subgraphs_examined = 0;

    int value_at(int k) const {
        if (k < 1 || k > static_cast<int>(entries.size()))
            throw std::out_of_range("profile index k=" + std::to_string(k));
        return entries[static_cast<std::size_t>(k - 1)].value;
    }
};

namespace detail {

struct SizeBest {
    int value = -1;
    std::size_t index = 0; // enumeration index, for deterministic witnesses
    VertexSet witness;
    bool seen = false;
};

class ProfileAccumulator {
public:
    ProfileAccumulator(const Graph& host, int r, std::function<int(const Graph&)> solver,
                       const ProfileOptions& opts)
        : host_(host), solver_(std::move(solver)),
          jobs_(std::max(opts.jobs, 1)), best_(static_cast<std::size_t>(r) + 1) {}

    void add(const VertexSet& s) {
        chunk_.push_back(s);
        if (chunk_.size() >= kChunk) flush();
    }

    void flush() {
        if (chunk_.empty()) return;
        values_.assign(chunk_.size(), 0);
        if (jobs_ == 1 || chunk_.size() < 64) {
            for (std::size_t i = 0; i < chunk_.size(); ++i) evaluate(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            std::atomic<bool> failed{false};
            std::string first_error;
            std::mutex err_mu;
            for (int t = 0; t < jobs_; ++t) {
                workers.emplace_back([&] {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= chunk_.size() || failed.load()) return;
                        try {
                            evaluate(i);
                        } catch (const std::exception& e) {
                            std::lock_guard<std::mutex> lk(err_mu);
                            if (!failed.exchange(true)) first_error = e.what();
                            return;
                        }
                    }
                });
            }
            for (auto& w : workers) w.join();
            if (failed.load()) throw limit_error(first_error);
        }
        for (std::size_t i = 0; i < chunk_.size(); ++i) {
            auto sz = chunk_[i].size();
            SizeBest& b = best_[sz];
            if (!b.seen || values_[i] > b.value) {
                b.seen = true;
                b.value = values_[i];
                b.index = base_index_ + i;
                b.witness = chunk_[i];
            }
        }
        base_index_ += chunk_.size();
        chunk_.clear();
    }

    ProfileResult finish(int r, bool exact) {
        flush();
        ProfileResult res;
        res.exact = exact;
        res.subgraphs_examined = base_index_;
        SizeBest running; // best over sizes <= k
        for (int k = 1; k <= r; ++k) {
            const SizeBest& b = best_[static_cast<std::size_t>(k)];
            if (b.seen && (!running.seen || b.value > running.value ||
                           (b.value == running.value && b.index < running.index)))
                running = b;
            ProfileEntry e;
            e.k = k;
            e.value = running.seen ? running.value : 0;
            e.witness = running.witness;
            res.entries.push_back(std::move(e));
        }
        return res;
    }

private:
    void evaluate(std::size_t i) {
        values_[i] = solver_(induced_subgraph(host_, chunk_[i]).graph);
    }

    static constexpr std::size_t kChunk = 1 << 14;

    const Graph& host_;
    std::function<int(const Graph&)> solver_;
    int jobs_;
    std::vector<SizeBest> best_;
    std::vector<VertexSet> chunk_;
    std::vector<int> values_;
    std::size_t base_index_ = 0;
};

} // namespace detail

/// Profile of `solver` over induced subgraphs of x with at most r vertices.
/// If the enumeration budget is exhausted the result is flagged inexact and
/// every value is a certified lower bound.
inline ProfileResult invariant_profile(const Graph& x, int r,
                                       const std::function<int(const Graph&)>& solver,
                                       const ProfileOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("profile bound r must be >= 1");
    if (x.vertex_count() < 1) throw std::invalid_argument("profile host must be non-empty");
    const int reach = std::min(r, x.vertex_count());

    detail::ProfileAccumulator acc(x, r, solver, opts);
    std::size_t examined = 0;
    bool exact = true;

    auto take = [&](const VertexSet& s) {
        if (examined == opts.budget) {
            exact = false;
            return false;
        }
        ++examined;
        acc.add(s);
        return true;
    };

    if (opts.mode == SubgraphMode::Connected) {
        for_each_connected_induced_subgraph(x, reach, take);
    } else {
        const int n = x.vertex_count();
        if (n > 30)
            throw limit_error("all-induced mode limited to n <= 30, got " + std::to_string(n));
        const std::uint64_t full = (n == 0) ? 0 : (std::uint64_t{1} << n);
        VertexSet s;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            if (std::popcount(mask) > reach) continue;
            s.clear();
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.push_back(v);
            if (!take(s)) break;
        }
    }
    return acc.finish(r, exact);
}

} // namespace sepwidth
