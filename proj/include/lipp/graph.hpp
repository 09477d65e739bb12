// Simple undirected graph, the dummy-vertex transformed graph, and the
// traversals every other module consumes.
#ifndef LIPP_GRAPH_HPP
#define LIPP_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lipp {

struct GraphBuildStats {
    int duplicate_edges = 0;
    int self_loops = 0;
};

// Simple undirected graph. Vertex ids are dense 0..n-1, edges stored as
// sorted (u,v) pairs with u < v, adjacency lists sorted ascending.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    Graph() = default;

    // Collapses duplicate edges and drops self-loops, counting them in stats.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> raw,
                            GraphBuildStats* stats = nullptr) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        GraphBuildStats local;
        std::vector<std::pair<int, int>> clean;
        clean.reserve(raw.size());
        for (auto [u, v] : raw) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: vertex id out of range");
            if (u == v) {
                local.self_loops++;
                continue;
            }
            if (u > v) std::swap(u, v);
            clean.emplace_back(u, v);
        }
        std::sort(clean.begin(), clean.end());
        auto last = std::unique(clean.begin(), clean.end());
        local.duplicate_edges = static_cast<int>(clean.end() - last);
        clean.erase(last, clean.end());

        Graph g;
        g.n = n;
        g.edges = std::move(clean);
        g.adj.assign(n, {});
        for (auto [u, v] : g.edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
        if (stats) *stats = local;
        return g;
    }

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    // index into edges, or -1
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }
};

// G_s: the input graph plus a dummy vertex s (= n) adjacent to every
// original vertex. Edges of E_s are indexed: 0..m-1 the base edges in
// canonical order, m+v the dummy edge {v,s}.
struct TransformedGraph {
    Graph base;
    int s = 0;

    int num_vertices_s() const { return base.n + 1; }
    int num_edges_s() const { return base.m() + base.n; }

    int dummy_edge(int v) const { return base.m() + v; }

    // endpoints of an E_s edge; second may be s
    std::pair<int, int> edge_s(int idx) const {
        if (idx < base.m()) return base.edges[idx];
        return {idx - base.m(), s};
    }
};

inline TransformedGraph transform(const Graph& g) {
    TransformedGraph gs;
    gs.base = g;
    gs.s = g.n;
    return gs;
}

// A cycle of G: closed vertex sequence, length >= 3, all distinct.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

// Vertices connected to root within the given edge support (adjacency
// lists over any vertex universe).
inline std::vector<int> bfs_reachable(const std::vector<std::vector<int>>& adj, int root) {
    if (root < 0 || root >= static_cast<int>(adj.size()))
        throw std::invalid_argument("bfs_reachable: root out of range");
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> order;
    std::queue<int> q;
    seen[root] = 1;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    std::sort(order.begin(), order.end());
    return order;
}

inline std::vector<int> bfs_reachable(const Graph& g, int root) {
    return bfs_reachable(g.adj, root);
}

// One cycle per back edge of a DFS forest (roots and neighbors visited in
// ascending id order). Empty iff the graph is acyclic; the number of
// cycles equals |E| - |V| + #components.
inline std::vector<Cycle> dfs_cycles(const Graph& g) {
    std::vector<Cycle> cycles;
    std::vector<int> disc(g.n, -1), parent(g.n, -1);
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack; // (vertex, next neighbor slot)
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [u, it] = stack.back();
            if (it == g.adj[u].size()) {
                stack.pop_back();
                continue;
            }
            int w = g.adj[u][it++];
            if (disc[w] < 0) {
                parent[w] = u;
                disc[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[u] && disc[w] < disc[u]) {
                // back edge u -> ancestor w: walk the tree path back to w
                Cycle c;
                for (int x = u; x != w; x = parent[x]) c.vertices.push_back(x);
                c.vertices.push_back(w);
                std::reverse(c.vertices.begin(), c.vertices.end());
                cycles.push_back(std::move(c));
            }
        }
    }
    return cycles;
}

struct EccentricityResult {
    std::vector<int> ecc; // max BFS distance within the vertex's component
    bool connected = true;
};

inline EccentricityResult eccentricities(const Graph& g) {
    EccentricityResult r;
    r.ecc.assign(g.n, 0);
    std::vector<int> dist(g.n);
    for (int src = 0; src < g.n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        int reached = 1, far = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            far = std::max(far, dist[u]);
            for (int w : g.adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    reached++;
                    q.push(w);
                }
        }
        r.ecc[src] = far;
        if (reached != g.n) r.connected = false;
    }
    return r;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return static_cast<int>(bfs_reachable(g, 0).size()) == g.n;
}

} // namespace lipp

#endif
