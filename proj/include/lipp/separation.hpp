// Separation oracles: cycle rows from DFS back edges, cutset rows from a
// support BFS (integer points) or exact max-flow (fractional points), and
// the greedy lifted clique heuristic. Every oracle re-checks that an
// emitted row is violated by more than the separation tolerance.
#ifndef LIPP_SEPARATION_HPP
#define LIPP_SEPARATION_HPP

#include <algorithm>
#include <functional>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "maxflow.hpp"
#include "model.hpp"

namespace lipp {

inline constexpr double kSepTol = 1e-6;
inline constexpr double kSupportTol = 1e-6; // "nonzero value" threshold for V_sep

// Fractional assignment to (y, x): y over V, x over E_s.
struct Point {
    std::vector<double> y;
    std::vector<double> x;

    static Point from_column_values(const VariableSpace& vars, const std::vector<double>& v) {
        Point p;
        p.y.assign(v.begin(), v.begin() + vars.n);
        p.x.assign(v.begin() + vars.n, v.begin() + vars.num_cols());
        return p;
    }

    std::vector<double> to_column_values(const VariableSpace& vars) const {
        std::vector<double> v(vars.num_cols());
        for (int i = 0; i < vars.n; ++i) v[vars.y_col(i)] = y[i];
        for (size_t e = 0; e < x.size(); ++e) v[vars.x_col(static_cast<int>(e))] = x[e];
        return v;
    }

    bool is_integral(double tol = 1e-6) const {
        auto near_int = [tol](double v) { return std::abs(v - std::round(v)) <= tol; };
        for (double v : y)
            if (!near_int(v)) return false;
        for (double v : x)
            if (!near_int(v)) return false;
        return true;
    }
};

// Witness of a cut: the set S (subset of V) together with the vertex v
// whose connectivity requirement it certifies.
struct CutCertificate {
    std::vector<int> S;
    int v = -1;
};

using Certificate = std::variant<Cycle, CutCertificate, std::vector<int>>;

struct SeparationResult {
    std::vector<LinearRow> rows;
    std::vector<Certificate> certificates;
    bool empty() const { return rows.empty(); }
    size_t size() const { return rows.size(); }
};

// hook for tests and the polyhedra lab: sees every optimal LP point
using LpPointObserver = std::function<void(const Point&, const Model&)>;

// ---- row builders for the dynamic families -------------------------------

inline LinearRow cycle_row(const VariableSpace& vars, const Cycle& c) {
    std::vector<std::pair<int, double>> coeffs;
    for (int v : c.vertices) coeffs.emplace_back(vars.y_col(v), 1.0);
    return make_row(std::move(coeffs), Sense::LE, c.length() - 1.0, RowFamily::Cycle);
}

inline LinearRow cutset_row(const TransformedGraph& gs, const VariableSpace& vars,
                            const std::vector<int>& S, int v) {
    const Graph& g = gs.base;
    std::vector<char> in_s(g.n, 0);
    for (int u : S) in_s[u] = 1;
    std::vector<std::pair<int, double>> coeffs;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges[e];
        if (in_s[a] != in_s[b]) coeffs.emplace_back(vars.x_col(e), 1.0);
    }
    for (int u : S) coeffs.emplace_back(vars.x_col_dummy(u), 1.0);
    coeffs.emplace_back(vars.y_col(v), -2.0);
    return make_row(std::move(coeffs), Sense::GE, 0.0, RowFamily::Cutset);
}

// generalized subtour form of the same certificate
inline LinearRow subtour_row(const Graph& g, const VariableSpace& vars,
                             const std::vector<int>& S, int v) {
    std::vector<char> in_s(g.n, 0);
    for (int u : S) in_s[u] = 1;
    std::vector<std::pair<int, double>> coeffs;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges[e];
        if (in_s[a] && in_s[b]) coeffs.emplace_back(vars.x_col(e), 1.0);
    }
    for (int u : S)
        if (u != v) coeffs.emplace_back(vars.y_col(u), -1.0);
    return make_row(std::move(coeffs), Sense::LE, 0.0, RowFamily::Subtour);
}

// x-only form used by the baseline formulation (the y-free cutset row)
inline LinearRow ger03_row(const TransformedGraph& gs, const VariableSpace& vars,
                           const std::vector<int>& S, int v) {
    const Graph& g = gs.base;
    std::vector<char> in_s(g.n, 0);
    for (int u : S) in_s[u] = 1;
    std::vector<std::pair<int, double>> coeffs;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges[e];
        if (in_s[a] != in_s[b]) coeffs.emplace_back(vars.x_col(e), 1.0);
    }
    for (int u : S) coeffs.emplace_back(vars.x_col_dummy(u), 1.0);
    for (int w : g.adj[v]) coeffs.emplace_back(vars.x_col(g.edge_id(v, w)), -1.0);
    coeffs.emplace_back(vars.x_col_dummy(v), -1.0);
    return make_row(std::move(coeffs), Sense::GE, 0.0, RowFamily::Cutset);
}

inline LinearRow cliquey_row(const VariableSpace& vars, const std::vector<int>& K) {
    std::vector<std::pair<int, double>> coeffs;
    for (int v : K) coeffs.emplace_back(vars.y_col(v), 1.0);
    return make_row(std::move(coeffs), Sense::LE, 2.0, RowFamily::CliqueY);
}

// ---- oracles ---------------------------------------------------------------

namespace detail {

// induced subgraph on the separation support, with an id map back to G
struct SupportGraph {
    Graph sub;
    std::vector<int> to_orig;
    std::vector<int> to_sub; // -1 outside the support
};

inline SupportGraph support_graph(const Graph& g, const std::vector<double>& y_hat) {
    SupportGraph s;
    s.to_sub.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (y_hat[v] > kSupportTol) {
            s.to_sub[v] = static_cast<int>(s.to_orig.size());
            s.to_orig.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (s.to_sub[u] >= 0 && s.to_sub[v] >= 0) edges.emplace_back(s.to_sub[u], s.to_sub[v]);
    s.sub = Graph::from_edges(static_cast<int>(s.to_orig.size()), edges);
    return s;
}

} // namespace detail

// DFS on G_sep, one row per back-edge cycle; exact for integral points
// (nonempty iff the selected vertices induce a cycle).
inline SeparationResult separate_cycles_integer(const Point& p, const Graph& g,
                                                const VariableSpace& vars) {
    SeparationResult result;
    detail::SupportGraph s = detail::support_graph(g, p.y);
    std::vector<double> colvals = p.to_column_values(vars);
    for (const Cycle& c : dfs_cycles(s.sub)) {
        Cycle orig;
        orig.vertices.reserve(c.vertices.size());
        for (int v : c.vertices) orig.vertices.push_back(s.to_orig[v]);
        LinearRow row = cycle_row(vars, orig);
        if (row.violation(colvals) > kSepTol) {
            result.rows.push_back(std::move(row));
            result.certificates.emplace_back(std::move(orig));
        }
    }
    return result;
}

// Greedy DFS in non-increasing y-hat order; keeps back-edge cycles whose
// rows the point violates. Heuristic: may miss violated rows.
inline SeparationResult separate_cycles_fractional(const Point& p, const Graph& g,
                                                   const VariableSpace& vars) {
    SeparationResult result;
    std::vector<double> colvals = p.to_column_values(vars);

    std::vector<int> order;
    for (int v = 0; v < g.n; ++v)
        if (p.y[v] > kSupportTol) order.push_back(v);
    auto prefer = [&](int a, int b) {
        if (p.y[a] != p.y[b]) return p.y[a] > p.y[b];
        return a < b;
    };
    std::sort(order.begin(), order.end(), prefer);

    std::vector<int> disc(g.n, -1), parent(g.n, -1);
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack;
    std::vector<std::vector<int>> nbrs(g.n);
    for (int v : order) {
        for (int w : g.adj[v])
            if (p.y[w] > kSupportTol) nbrs[v].push_back(w);
        std::sort(nbrs[v].begin(), nbrs[v].end(), prefer);
    }

    for (int root : order) {
        if (disc[root] >= 0) continue;
        disc[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [u, it] = stack.back();
            if (it == nbrs[u].size()) {
                stack.pop_back();
                continue;
            }
            int w = nbrs[u][it++];
            if (disc[w] < 0) {
                parent[w] = u;
                disc[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[u] && disc[w] < disc[u]) {
                Cycle c;
                for (int x = u; x != w; x = parent[x]) c.vertices.push_back(x);
                c.vertices.push_back(w);
                std::reverse(c.vertices.begin(), c.vertices.end());
                LinearRow row = cycle_row(vars, c);
                if (row.violation(colvals) > kSepTol) {
                    result.rows.push_back(std::move(row));
                    result.certificates.emplace_back(std::move(c));
                }
            }
        }
    }
    return result;
}

// BFS from the dummy vertex over the selected-edge support; every selected
// vertex left unreached certifies a cutset row, with S taken as its whole
// unreached selected component (the strongest such row).
inline SeparationResult separate_cutset_integer(const Point& p, const TransformedGraph& gs,
                                                const VariableSpace& vars) {
    SeparationResult result;
    const Graph& g = gs.base;
    std::vector<double> colvals = p.to_column_values(vars);

    // BFS over E_s edges with x-hat ~ 1, universe V + s
    std::vector<std::vector<int>> support(g.n + 1);
    for (int e = 0; e < gs.num_edges_s(); ++e) {
        if (p.x[e] < 1.0 - kIntegralityTol) continue;
        auto [u, v] = gs.edge_s(e);
        support[u].push_back(v);
        support[v].push_back(u);
    }
    std::vector<char> reached(g.n + 1, 0);
    for (int v : bfs_reachable(support, gs.s)) reached[v] = 1;

    std::vector<char> selected(g.n, 0);
    for (int v = 0; v < g.n; ++v) selected[v] = p.y[v] >= 0.5 ? 1 : 0;

    // components of the unreached selected vertices within G
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < g.n; ++v) {
        if (!selected[v] || reached[v] || comp[v] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.push_back({});
        std::vector<int> queue = {v};
        comp[v] = id;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            members[id].push_back(u);
            for (int w : g.adj[u])
                if (selected[w] && !reached[w] && comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(members[id].begin(), members[id].end());
    }
    for (int v = 0; v < g.n; ++v) {
        if (!selected[v] || reached[v]) continue;
        LinearRow row = cutset_row(gs, vars, members[comp[v]], v);
        if (row.violation(colvals) > kSepTol) {
            result.rows.push_back(std::move(row));
            result.certificates.emplace_back(CutCertificate{members[comp[v]], v});
        }
    }
    return result;
}

// Exact separation via max flows: for each v in the support, if the
// minimum s-v cut carries less than 2*y_v the certifying cut is emitted,
// shrunk to v's support component on the far side.
inline SeparationResult separate_cutset_fractional(const Point& p, const TransformedGraph& gs,
                                                   const VariableSpace& vars) {
    SeparationResult result;
    const Graph& g = gs.base;
    std::vector<double> colvals = p.to_column_values(vars);

    FlowNetwork net(g.n + 1);
    for (int e = 0; e < gs.num_edges_s(); ++e) {
        if (p.x[e] <= kFlowEps) continue;
        auto [u, v] = gs.edge_s(e);
        net.add_arc(u, v, p.x[e]);
        net.add_arc(v, u, p.x[e]);
    }

    for (int v = 0; v < g.n; ++v) {
        if (p.y[v] <= kSupportTol) continue;
        net.reset_flow();
        MaxFlowResult flow = max_flow(net, gs.s, v);
        if (flow.value >= 2.0 * p.y[v] - kSepTol) continue;

        // far side of the cut, then shrink to v's component in the x support
        std::vector<char> far(g.n, 0);
        for (int u = 0; u < g.n; ++u) far[u] = flow.source_side[u] ? 0 : 1;
        std::vector<int> S;
        std::vector<char> seen(g.n, 0);
        std::vector<int> queue = {v};
        seen[v] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            S.push_back(u);
            for (int w : g.adj[u]) {
                int e = g.edge_id(u, w);
                if (!seen[w] && far[w] && p.x[e] > kFlowEps) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(S.begin(), S.end());
        LinearRow row = cutset_row(gs, vars, S, v);
        if (row.violation(colvals) > kSepTol) {
            result.rows.push_back(std::move(row));
            result.certificates.emplace_back(CutCertificate{std::move(S), v});
        }
    }
    return result;
}

// Greedy maximal clique of G_sep in non-increasing y-hat order (degree,
// then id, break ties); a violated row is lifted to a maximal clique of G
// by degree order. At most one row per call.
inline SeparationResult separate_cliques(const Point& p, const Graph& g,
                                         const VariableSpace& vars) {
    SeparationResult result;
    detail::SupportGraph s = detail::support_graph(g, p.y);
    if (s.sub.n == 0) return result;

    std::vector<int> order(s.sub.n);
    for (int i = 0; i < s.sub.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ya = p.y[s.to_orig[a]], yb = p.y[s.to_orig[b]];
        if (ya != yb) return ya > yb;
        if (s.sub.degree(a) != s.sub.degree(b)) return s.sub.degree(a) > s.sub.degree(b);
        return s.to_orig[a] < s.to_orig[b];
    });

    std::vector<int> clique; // sub ids
    for (int cand : order) {
        bool adjacent_to_all = true;
        for (int c : clique)
            if (!s.sub.has_edge(cand, c)) {
                adjacent_to_all = false;
                break;
            }
        if (adjacent_to_all) clique.push_back(cand);
    }

    std::vector<int> K;
    double sum = 0.0;
    for (int c : clique) {
        K.push_back(s.to_orig[c]);
        sum += p.y[s.to_orig[c]];
    }
    if (sum <= 2.0 + kSepTol) return result;

    // lift to a maximal clique of G, preferring high degree
    std::vector<int> lift_order(g.n);
    for (int v = 0; v < g.n; ++v) lift_order[v] = v;
    std::sort(lift_order.begin(), lift_order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<char> in_k(g.n, 0);
    for (int v : K) in_k[v] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int cand : lift_order) {
            if (in_k[cand]) continue;
            bool ok = true;
            for (int v : K)
                if (!g.has_edge(cand, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                K.push_back(cand);
                in_k[cand] = 1;
                grew = true;
                break;
            }
        }
    }
    std::sort(K.begin(), K.end());

    std::vector<double> colvals = p.to_column_values(vars);
    LinearRow row = cliquey_row(vars, K);
    if (row.violation(colvals) > kSepTol) {
        result.rows.push_back(std::move(row));
        result.certificates.emplace_back(K);
    }
    return result;
}

// ---- a-priori clique policy ------------------------------------------------

enum class CliquePolicy { AddAll, SeparateInstead };

struct CliquePolicyResult {
    CliquePolicy policy = CliquePolicy::SeparateInstead;
    CliqueSet cliques; // populated only for AddAll
};

// All maximal cliques with >= 3 vertices go in a priori when there are at
// most max_cl of them; otherwise the cutting-plane heuristic is used.
inline CliquePolicyResult apriori_clique_policy(const Graph& g, int max_cl) {
    if (max_cl < 0) throw std::invalid_argument("apriori_clique_policy: max_cl < 0");
    CliquePolicyResult r;
    CliqueSet cs = enumerate_maximal_cliques(g, 3, static_cast<size_t>(max_cl) + 1);
    if (cs.size() <= static_cast<size_t>(max_cl)) {
        r.policy = CliquePolicy::AddAll;
        r.cliques = std::move(cs);
    }
    return r;
}

} // namespace lipp

#endif
