// Bron-Kerbosch maximal clique enumeration with pivoting and degeneracy
// ordering; output in canonical (lexicographic) order for determinism.
#ifndef LIPP_CLIQUES_HPP
#define LIPP_CLIQUES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace lipp {

struct CliqueSet {
    std::vector<std::vector<int>> cliques; // each sorted ascending
    size_t size() const { return cliques.size(); }
};

namespace detail {

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool any() const {
        for (uint64_t b : w)
            if (b) return true;
        return false;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    Bitset and_with(const Bitset& o) const {
        Bitset r;
        r.w.resize(w.size());
        for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t b = w[i];
            while (b) {
                int j = __builtin_ctzll(b);
                f(static_cast<int>(i * 64 + j));
                b &= b - 1;
            }
        }
    }
};

// smallest-last ordering; also the standard way to keep the recursion narrow
inline std::vector<int> degeneracy_order(const Graph& g) {
    std::vector<int> order;
    order.reserve(g.n);
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    int maxdeg = 0;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(maxdeg + 1);
    for (int v = 0; v < g.n; ++v) buckets[deg[v]].push_back(v);
    std::vector<int> pos_hint(maxdeg + 1, 0);
    for (int iter = 0; iter < g.n; ++iter) {
        int d = 0;
        while (true) {
            auto& b = buckets[d];
            while (!b.empty() && (removed[b.back()] || deg[b.back()] != d)) b.pop_back();
            if (!b.empty()) break;
            ++d;
        }
        int v = buckets[d].back();
        buckets[d].pop_back();
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.adj[v])
            if (!removed[w]) {
                deg[w]--;
                buckets[deg[w]].push_back(w);
            }
    }
    return order;
}

inline void bron_kerbosch_pivot(const std::vector<Bitset>& nbr, Bitset P, Bitset X,
                                std::vector<int>& R, int min_size,
                                std::vector<std::vector<int>>& out, size_t limit) {
    if (limit && out.size() > limit) return;
    if (!P.any() && !X.any()) {
        if (static_cast<int>(R.size()) >= min_size) out.push_back(R);
        return;
    }
    // pivot: vertex of P∪X covering the most of P; ties to the lowest id
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
        int c = P.count_and(nbr[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    };
    P.for_each(consider);
    X.for_each(consider);

    std::vector<int> candidates;
    P.for_each([&](int v) {
        if (!nbr[pivot].test(v)) candidates.push_back(v);
    });
    for (int v : candidates) {
        R.push_back(v);
        bron_kerbosch_pivot(nbr, P.and_with(nbr[v]), X.and_with(nbr[v]), R, min_size, out, limit);
        R.pop_back();
        P.clear(v);
        X.set(v);
        if (limit && out.size() > limit) return;
    }
}

} // namespace detail

// All maximal cliques with at least min_size vertices. If limit > 0 the
// enumeration aborts once more than limit cliques were found (the result
// is then truncated; callers use this only as a threshold test).
inline CliqueSet enumerate_maximal_cliques(const Graph& g, int min_size, size_t limit = 0) {
    if (min_size < 1) throw std::invalid_argument("enumerate_maximal_cliques: min_size < 1");
    std::vector<detail::Bitset> nbr(g.n, detail::Bitset(g.n));
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) nbr[v].set(w);

    std::vector<std::vector<int>> raw;
    std::vector<int> order = detail::degeneracy_order(g);
    std::vector<int> rank(g.n);
    for (int i = 0; i < g.n; ++i) rank[order[i]] = i;

    detail::Bitset done(g.n);
    std::vector<int> R;
    for (int v : order) {
        detail::Bitset P(g.n), X(g.n);
        for (int w : g.adj[v]) {
            if (rank[w] > rank[v])
                P.set(w);
            else
                X.set(w);
        }
        R.assign(1, v);
        detail::bron_kerbosch_pivot(nbr, P, X, R, min_size, raw, limit);
        if (limit && raw.size() > limit) break;
        done.set(v);
    }

    CliqueSet result;
    for (auto& c : raw) {
        std::sort(c.begin(), c.end());
        result.cliques.push_back(std::move(c));
    }
    std::sort(result.cliques.begin(), result.cliques.end());
    return result;
}

} // namespace lipp

#endif
