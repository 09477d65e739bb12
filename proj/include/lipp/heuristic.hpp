// Induced-path verification and the G-HLIPP warm-start heuristic: greedy
// depth-first enumeration of induced paths from every source vertex,
// sources ordered by non-increasing eccentricity (ties to smaller degree).
#ifndef LIPP_HEURISTIC_HPP
#define LIPP_HEURISTIC_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lipp {

struct PathSolution {
    std::vector<int> sequence;
    int cardinality() const { return static_cast<int>(sequence.size()); }
};

struct VerifyResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// True iff seq is a simple induced path of g: distinct vertices,
// consecutive pairs adjacent, non-consecutive pairs non-adjacent.
inline VerifyResult verify_induced_path(const std::vector<int>& seq, const Graph& g) {
    std::vector<char> seen(g.n, 0);
    for (int v : seq) {
        if (v < 0 || v >= g.n) return {false, "vertex " + std::to_string(v) + " out of range"};
        if (seen[v]) return {false, "duplicate vertex " + std::to_string(v)};
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1]))
            return {false, "missing edge " + std::to_string(seq[i]) + "-" +
                               std::to_string(seq[i + 1])};
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 2; j < seq.size(); ++j)
            if (g.has_edge(seq[i], seq[j]))
                return {false,
                        "chord " + std::to_string(seq[i]) + "-" + std::to_string(seq[j])};
    return {true, ""};
}

struct HeuristicConfig {
    long maxpaths = 5000;
    double time_limit_seconds = std::numeric_limits<double>::infinity();
    uint64_t seed = 0; // exploration is deterministic; kept for config parity
};

namespace detail {

// One source's depth-first exploration. A vertex may extend the current
// tail iff it is adjacent to the tail and non-adjacent to every earlier
// path vertex; extension order is ascending degree, then id. Each leaf of
// the search tree is one generated (maximal) path; the source is
// abandoned after maxpaths consecutive leaves that failed to improve the
// source's best.
class GhlippSource {
public:
    GhlippSource(const Graph& g, long maxpaths,
                 std::chrono::steady_clock::time_point deadline, bool timed,
                 std::vector<int>& global_best)
        : g_(g), maxpaths_(maxpaths), deadline_(deadline), timed_(timed),
          global_best_(global_best), on_path_(g.n, 0), block_count_(g.n, 0) {}

    void run(int source) {
        path_ = {source};
        on_path_[source] = 1;
        publish();
        dfs();
        on_path_[source] = 0;
    }

private:
    const Graph& g_;
    long maxpaths_;
    std::chrono::steady_clock::time_point deadline_;
    bool timed_;
    std::vector<int>& global_best_;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<int> block_count_; // # interior path vertices adjacent to w
    int source_best_ = 1;
    long stale_ = 0;
    bool abort_ = false;

    void publish() {
        if (path_.size() > global_best_.size()) global_best_ = path_;
    }

    void leaf() {
        if (static_cast<int>(path_.size()) > source_best_) {
            source_best_ = static_cast<int>(path_.size());
            stale_ = 0;
        } else if (++stale_ >= maxpaths_) {
            abort_ = true;
        }
    }

    void dfs() {
        if (abort_) return;
        if (timed_ && std::chrono::steady_clock::now() >= deadline_) {
            abort_ = true;
            return;
        }
        int tail = path_.back();
        std::vector<int> cands;
        for (int w : g_.adj[tail])
            if (!on_path_[w] && block_count_[w] == 0) cands.push_back(w);
        if (cands.empty()) {
            leaf();
            return;
        }
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) < g_.degree(b);
            return a < b;
        });
        for (int w : g_.adj[tail]) block_count_[w]++; // tail turns interior below
        for (int w : cands) {
            path_.push_back(w);
            on_path_[w] = 1;
            publish();
            dfs();
            on_path_[w] = 0;
            path_.pop_back();
            if (abort_) break;
        }
        for (int w : g_.adj[tail]) block_count_[w]--;
    }
};

} // namespace detail

// Warm-start heuristic. Deterministic; the returned path always verifies.
inline PathSolution ghlipp(const Graph& g, const HeuristicConfig& cfg = {}) {
    if (g.n == 0) throw std::invalid_argument("ghlipp: empty graph");
    if (cfg.maxpaths < 1) throw std::invalid_argument("ghlipp: maxpaths < 1");

    EccentricityResult ecc = eccentricities(g);
    std::vector<int> sources(g.n);
    for (int v = 0; v < g.n; ++v) sources[v] = v;
    std::sort(sources.begin(), sources.end(), [&](int a, int b) {
        if (ecc.ecc[a] != ecc.ecc[b]) return ecc.ecc[a] > ecc.ecc[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });

    bool timed = std::isfinite(cfg.time_limit_seconds);
    auto deadline = std::chrono::steady_clock::now();
    if (timed)
        deadline += std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(cfg.time_limit_seconds));

    std::vector<int> best;
    for (int source : sources) {
        if (timed && std::chrono::steady_clock::now() >= deadline) break;
        detail::GhlippSource run(g, cfg.maxpaths, deadline, timed, best);
        run.run(source);
        if (static_cast<int>(best.size()) == g.n) break; // cannot improve further
    }
    return PathSolution{best};
}

} // namespace lipp

#endif
