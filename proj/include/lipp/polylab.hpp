// Empirical polyhedral checks: exact membership in the three relaxation
// polyhedra, clique-inequality strength probes, root-bound comparison over
// the fully closed relaxations, and the exhaustive induced-path oracle.
#ifndef LIPP_POLYLAB_HPP
#define LIPP_POLYLAB_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "lp.hpp"
#include "heuristic.hpp"
#include "model.hpp"
#include "separation.hpp"

namespace lipp {

inline constexpr double kMembershipTol = 1e-6;

// All simple cycles, each reported once with its minimum vertex first.
// Throws once more than max_count cycles were found.
inline std::vector<Cycle> enumerate_all_cycles(const Graph& g, size_t max_count = 1000000) {
    std::vector<Cycle> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);

    // paths anchored at their minimum vertex; direction fixed by requiring
    // the second vertex to be smaller than the last
    std::function<void(int, int)> extend = [&](int anchor, int u) {
        for (int w : g.adj[u]) {
            if (w == anchor && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (cycles.size() >= max_count)
                        throw std::runtime_error(
                            "enumerate_all_cycles: cycle count exceeds budget, use a smaller "
                            "instance");
                    Cycle c;
                    c.vertices = path;
                    cycles.push_back(std::move(c));
                }
                continue;
            }
            if (w <= anchor || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            extend(anchor, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int a = 0; a < g.n; ++a) {
        path = {a};
        on_path[a] = 1;
        extend(a, a);
        on_path[a] = 0;
    }
    return cycles;
}

enum class Polyhedron { Qcec, Qcut, Qbcwwy };

struct ViolationRecord {
    RowFamily family;
    double amount;
    Certificate certificate;
};

struct MembershipVerdict {
    bool feasible = true;
    std::vector<ViolationRecord> violated;
};

// Exact membership: static rows checked directly, dynamic rows checked by
// exhaustive cycle enumeration (Qcec) or max-flow min-cuts (Qcut; Qbcwwy
// through the cutset equivalence on the x variables).
inline MembershipVerdict check_membership(const Point& p, const Graph& g, Polyhedron which) {
    TransformedGraph gs = transform(g);
    Model model = build_model(gs, which == Polyhedron::Qcec   ? Formulation::cec
                                  : which == Polyhedron::Qcut ? Formulation::cut
                                                              : Formulation::bcwwy);
    if (static_cast<int>(p.y.size()) != g.n ||
        static_cast<int>(p.x.size()) != gs.num_edges_s())
        throw std::invalid_argument("check_membership: point dimension mismatch");

    MembershipVerdict verdict;
    std::vector<double> vals = p.to_column_values(model.vars);

    for (int c = 0; c < model.vars.num_cols(); ++c)
        if (vals[c] < -kMembershipTol || vals[c] > 1.0 + kMembershipTol) {
            verdict.feasible = false;
            verdict.violated.push_back({RowFamily::Degree,
                                        std::max(-vals[c], vals[c] - 1.0),
                                        std::vector<int>{c}});
        }
    for (const LinearRow& row : model.static_rows) {
        double v = row.violation(vals);
        if (v > kMembershipTol) {
            verdict.feasible = false;
            verdict.violated.push_back({row.family, v, std::vector<int>{}});
        }
    }

    if (which == Polyhedron::Qcec) {
        if (g.n > 20)
            throw std::runtime_error("check_membership: cycle enumeration needs n <= 20");
        for (const Cycle& c : enumerate_all_cycles(g)) {
            LinearRow row = cycle_row(model.vars, c);
            double v = row.violation(vals);
            if (v > kMembershipTol) {
                verdict.feasible = false;
                verdict.violated.push_back({RowFamily::Cycle, v, c});
            }
        }
    } else {
        // min cut over every (S, v) family member at once
        FlowNetwork net(g.n + 1);
        for (int e = 0; e < gs.num_edges_s(); ++e) {
            if (p.x[e] <= kFlowEps) continue;
            auto [u, v] = gs.edge_s(e);
            net.add_arc(u, v, p.x[e]);
            net.add_arc(v, u, p.x[e]);
        }
        for (int v = 0; v < g.n; ++v) {
            double requirement =
                which == Polyhedron::Qcut
                    ? 2.0 * p.y[v]
                    : [&] { // sum of x over edges incident to v in G_s
                          double s = p.x[gs.dummy_edge(v)];
                          for (int w : g.adj[v]) s += p.x[g.edge_id(v, w)];
                          return s;
                      }();
            if (requirement <= kMembershipTol) continue;
            net.reset_flow();
            MaxFlowResult flow = max_flow(net, gs.s, v);
            if (flow.value >= requirement - kMembershipTol) continue;
            verdict.feasible = false;
            // shrink to v's support component on the far side of the cut
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
                for (int w : g.adj[u])
                    if (!seen[w] && far[w] && p.x[g.edge_id(u, w)] > kFlowEps) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
            std::sort(S.begin(), S.end());
            double cut_value = cutset_row(gs, model.vars, S, v).lhs_value(vals) + 2.0 * p.y[v];
            verdict.violated.push_back(
                {RowFamily::Cutset, requirement - cut_value, CutCertificate{std::move(S), v}});
        }
    }
    return verdict;
}

struct CliquePointCheck {
    bool satisfies_x = true;
    bool satisfies_y = true;
    double edge_sum = 0.0;   // sum of x over E(K)
    double vertex_sum = 0.0; // sum of y over K
};

// Reports both clique-inequality forms at the given point.
inline CliquePointCheck check_clique_point(const Point& p, const Graph& g,
                                           const std::vector<int>& clique) {
    CliquePointCheck r;
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j) {
            int e = g.edge_id(clique[i], clique[j]);
            if (e < 0) throw std::invalid_argument("check_clique_point: set is not a clique");
            r.edge_sum += p.x[e];
        }
    for (int v : clique) r.vertex_sum += p.y[v];
    r.satisfies_x = r.edge_sum <= 1.0 + 1e-9;
    r.satisfies_y = r.vertex_sum <= 2.0 + 1e-9;
    return r;
}

struct RootBounds {
    double z_cec = 0.0;
    double z_cut = 0.0;
    double z_bcwwy = 0.0; // reported with the +1 vertex-unit offset
};

namespace detail {

inline double closed_cut_bound(const TransformedGraph& gs, Formulation f,
                               const LpPointObserver& observer) {
    Model model = build_model(gs, f);
    LpProblem lp = LpProblem::from_model(model);
    LpBasis basis;
    for (int round = 0; round < 1000; ++round) {
        LpSolution sol = lp_solve(lp, &basis);
        if (sol.status != LpStatus::Optimal)
            throw std::runtime_error("compare_root_bounds: relaxation not solved");
        Point p = Point::from_column_values(model.vars, sol.values);
        if (observer) observer(p, model);
        SeparationResult sep = separate_cutset_fractional(p, gs, model.vars);
        if (sep.empty()) return sol.objective + model.objective_offset;
        if (f == Formulation::bcwwy) {
            std::vector<LinearRow> rows;
            for (const Certificate& c : sep.certificates) {
                const auto& cut = std::get<CutCertificate>(c);
                rows.push_back(ger03_row(gs, model.vars, cut.S, cut.v));
            }
            add_rows(lp, rows);
        } else {
            add_rows(lp, sep.rows);
        }
    }
    throw std::runtime_error("compare_root_bounds: cutset closure did not converge");
}

} // namespace detail

// LP optima over the fully closed relaxations, in vertex units. Guarantees
// under the containments: z_cut <= z_cec and z_cut == z_bcwwy.
inline RootBounds compare_root_bounds(const Graph& g, const LpPointObserver& observer = {}) {
    if (g.n > 20)
        throw std::runtime_error("compare_root_bounds: cycle enumeration needs n <= 20");
    TransformedGraph gs = transform(g);
    RootBounds out;
    {
        Model model = build_cec(gs);
        LpProblem lp = LpProblem::from_model(model);
        std::vector<LinearRow> rows;
        for (const Cycle& c : enumerate_all_cycles(g)) rows.push_back(cycle_row(model.vars, c));
        add_rows(lp, rows);
        LpSolution sol = lp_solve(lp);
        if (sol.status != LpStatus::Optimal)
            throw std::runtime_error("compare_root_bounds: cec relaxation not solved");
        if (observer) observer(Point::from_column_values(model.vars, sol.values), model);
        out.z_cec = sol.objective;
    }
    out.z_cut = detail::closed_cut_bound(gs, Formulation::cut, observer);
    out.z_bcwwy = detail::closed_cut_bound(gs, Formulation::bcwwy, observer);
    return out;
}

// Exhaustive induced-path search over bitmask adjacency; the verification
// oracle for everything else. Budgeted at n <= 16.
inline PathSolution brute_force_lipp(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("brute_force_lipp: n > 16");
    if (g.n == 0) return {};

    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    std::vector<int> path, best;
    // forbidden: neighbors of interior (non-tail) path vertices
    std::function<void(int, uint32_t, uint32_t)> extend = [&](int tail, uint32_t used,
                                                              uint32_t forbidden) {
        if (path.size() > best.size()) best = path;
        uint32_t cands = adj[tail] & ~used & ~forbidden;
        while (cands) {
            int w = __builtin_ctz(cands);
            cands &= cands - 1;
            path.push_back(w);
            extend(w, used | (1u << w), forbidden | adj[tail]);
            path.pop_back();
        }
    };

    for (int v = 0; v < g.n; ++v) {
        path = {v};
        extend(v, 1u << v, 0);
    }
    return PathSolution{best};
}

} // namespace lipp

#endif
