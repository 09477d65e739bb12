// Synthetic instance families: Barabási-Albert scale-free graphs,
// hypercubes (snake-in-the-box), and toroidal grids.
#ifndef LIPP_GENERATORS_HPP
#define LIPP_GENERATORS_HPP

#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace lipp {

// Preferential attachment starting from d isolated seed vertices; every
// arrival attaches to d distinct existing vertices with probability
// proportional to degree (uniform while all degrees are zero). Yields a
// connected graph with exactly (n-d)*d edges.
inline Graph generate_barabasi_albert(int n, int d, uint64_t seed) {
    if (d < 1 || d >= n)
        throw std::invalid_argument("generate_barabasi_albert: need 1 <= d < n");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<uint64_t> degree(n, 0);
    std::vector<char> picked(n, 0);
    edges.reserve(static_cast<size_t>(n - d) * d);

    for (int v = d; v < n; ++v) {
        uint64_t total = 0;
        for (int u = 0; u < v; ++u) total += degree[u];
        std::vector<int> targets;
        targets.reserve(d);
        while (static_cast<int>(targets.size()) < d) {
            int t;
            if (total == 0) {
                t = static_cast<int>(rng.next_below(v));
            } else {
                uint64_t r = rng.next_below(total);
                t = 0;
                while (r >= degree[t]) {
                    r -= degree[t];
                    ++t;
                }
            }
            if (picked[t]) continue; // redraw on duplicates
            picked[t] = 1;
            targets.push_back(t);
        }
        for (int t : targets) {
            picked[t] = 0;
            edges.emplace_back(t, v);
            degree[t]++;
            degree[v]++;
        }
    }
    return Graph::from_edges(n, edges);
}

// k-dimensional hypercube: 2^k vertices, ids adjacent iff they differ in
// exactly one bit; k*2^(k-1) edges.
inline Graph generate_hypercube(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("generate_hypercube: need 1 <= k <= 16");
    int n = 1 << k;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(k) << (k - 1));
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph::from_edges(n, edges);
}

// side x side wrap-around grid: side^2 vertices, 2*side^2 edges, 4-regular.
inline Graph generate_torus(int side) {
    if (side < 3) throw std::invalid_argument("generate_torus: need side >= 3");
    auto id = [side](int i, int j) { return i * side + j; };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(side) * side * 2);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            edges.emplace_back(id(i, j), id(i, (j + 1) % side));
            edges.emplace_back(id(i, j), id((i + 1) % side, j));
        }
    return Graph::from_edges(side * side, edges);
}

} // namespace lipp

#endif
