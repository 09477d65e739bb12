// Edmonds-Karp max flow / min cut on a directed network with real-valued
// capacities. Shortest augmenting paths keep the pivot sequence (and thus
// the certifying cut) deterministic.
#ifndef LIPP_MAXFLOW_HPP
#define LIPP_MAXFLOW_HPP

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lipp {

inline constexpr double kFlowEps = 1e-9;

struct FlowNetwork {
    struct Arc {
        int to;
        double cap;
        double flow;
    };

    int n = 0;
    std::vector<Arc> arcs;               // forward arc at i, reverse at i^1
    std::vector<std::vector<int>> out;   // arc indices leaving each vertex

    explicit FlowNetwork(int n) : n(n), out(n) {}

    int add_arc(int from, int to, double capacity) {
        if (capacity < 0) throw std::invalid_argument("max_flow: negative capacity");
        int idx = static_cast<int>(arcs.size());
        arcs.push_back({to, capacity, 0.0});
        out[from].push_back(idx);
        arcs.push_back({from, 0.0, 0.0});
        out[to].push_back(idx + 1);
        return idx;
    }

    double residual(int idx) const { return arcs[idx].cap - arcs[idx].flow; }

    void reset_flow() {
        for (auto& a : arcs) a.flow = 0.0;
    }
};

struct MaxFlowResult {
    double value = 0.0;
    std::vector<char> source_side; // residual-reachable from the source
};

inline MaxFlowResult max_flow(FlowNetwork& net, int source, int sink) {
    if (source == sink) throw std::invalid_argument("max_flow: source equals sink");
    std::vector<int> parent_arc(net.n);
    MaxFlowResult result;

    auto bfs = [&]() -> bool {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[source] = -2;
        std::queue<int> q;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int idx : net.out[u]) {
                int w = net.arcs[idx].to;
                if (parent_arc[w] == -1 && net.residual(idx) > kFlowEps) {
                    parent_arc[w] = idx;
                    if (w == sink) return true;
                    q.push(w);
                }
            }
        }
        return false;
    };

    while (bfs()) {
        double bottleneck = std::numeric_limits<double>::infinity();
        for (int v = sink; v != source;) {
            int idx = parent_arc[v];
            bottleneck = std::min(bottleneck, net.residual(idx));
            v = net.arcs[idx ^ 1].to;
        }
        for (int v = sink; v != source;) {
            int idx = parent_arc[v];
            net.arcs[idx].flow += bottleneck;
            net.arcs[idx ^ 1].flow -= bottleneck;
            v = net.arcs[idx ^ 1].to;
        }
        result.value += bottleneck;
    }

    // the final BFS marks exactly the residual-reachable side
    result.source_side.assign(net.n, 0);
    for (int v = 0; v < net.n; ++v)
        if (parent_arc[v] != -1) result.source_side[v] = 1;
    result.source_side[source] = 1;
    return result;
}

} // namespace lipp

#endif
