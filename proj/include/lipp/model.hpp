// Variable space and constraint rows for the three formulations:
// cec (explicit cycle elimination), cut (cutset constraints), and the
// baseline bcwwy. Dynamic families are registered here and produced by
// the separation module during the solve.
#ifndef LIPP_MODEL_HPP
#define LIPP_MODEL_HPP

#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliques.hpp"
#include "graph.hpp"

namespace lipp {

enum class Sense { LE, EQ, GE };

enum class RowFamily {
    Degree,
    DummyDegree,
    EdgeImpliesVertex,
    InducedLower,
    Cycle,
    Cutset,
    Subtour,
    CliqueX,
    CliqueY,
    BcwwPairLower,
    BcwwPairUpper,
};

inline const char* row_family_name(RowFamily f) {
    switch (f) {
        case RowFamily::Degree: return "degree";
        case RowFamily::DummyDegree: return "dummyDegree";
        case RowFamily::EdgeImpliesVertex: return "edgeImpliesVertex";
        case RowFamily::InducedLower: return "inducedLower";
        case RowFamily::Cycle: return "cycle";
        case RowFamily::Cutset: return "cutset";
        case RowFamily::Subtour: return "subtour";
        case RowFamily::CliqueX: return "cliqueX";
        case RowFamily::CliqueY: return "cliqueY";
        case RowFamily::BcwwPairLower: return "bcwwPairLower";
        case RowFamily::BcwwPairUpper: return "bcwwPairUpper";
    }
    return "?";
}

struct LinearRow {
    std::vector<std::pair<int, double>> coeffs; // sorted by column, nonzero
    Sense sense = Sense::LE;
    double rhs = 0.0;
    RowFamily family = RowFamily::Degree;

    double lhs_value(const std::vector<double>& values) const {
        double s = 0.0;
        for (auto [col, a] : coeffs) s += a * values[col];
        return s;
    }

    // positive = violated by that amount
    double violation(const std::vector<double>& values) const {
        double lhs = lhs_value(values);
        switch (sense) {
            case Sense::LE: return lhs - rhs;
            case Sense::GE: return rhs - lhs;
            case Sense::EQ: return std::abs(lhs - rhs);
        }
        return 0.0;
    }
};

inline LinearRow make_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs,
                          RowFamily family) {
    std::sort(coeffs.begin(), coeffs.end());
    // merge duplicates, drop zeros
    std::vector<std::pair<int, double>> merged;
    for (auto [c, a] : coeffs) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += a;
        else
            merged.emplace_back(c, a);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0.0; });
    return LinearRow{std::move(merged), sense, rhs, family};
}

// Columns: y_v for v in V first, then x_e for every e in E_s (base edges
// in canonical order, then dummy edges). No column for y_s.
struct VariableSpace {
    int n = 0;        // vertices
    int m = 0;        // base edges
    std::vector<bool> integral;

    int y_col(int v) const { return v; }
    int x_col(int edge_s_index) const { return n + edge_s_index; }
    int x_col_dummy(int v) const { return n + m + v; }
    int num_cols() const { return n + m + n; }
    bool is_y(int col) const { return col < n; }
    int col_vertex(int col) const { return col; }               // for y columns
    int col_edge_s(int col) const { return col - n; }           // for x columns
};

enum class Formulation { cec, cut, bcwwy };

inline const char* formulation_name(Formulation f) {
    switch (f) {
        case Formulation::cec: return "cec";
        case Formulation::cut: return "cut";
        case Formulation::bcwwy: return "bcwwy";
    }
    return "?";
}

struct Model {
    VariableSpace vars;
    std::vector<LinearRow> static_rows;
    std::vector<double> objective;       // per column, maximize
    double objective_offset = 0.0;       // added when reporting in vertex units
    std::set<RowFamily> dynamic_families;
    Formulation tag = Formulation::cec;
    std::vector<int> vertex_degrees;     // base-graph degrees, for branching ties
};

namespace detail {

inline VariableSpace make_vars(const TransformedGraph& gs, bool x_integral) {
    VariableSpace vars;
    vars.n = gs.base.n;
    vars.m = gs.base.m();
    vars.integral.assign(vars.num_cols(), true);
    if (!x_integral)
        for (int c = vars.n; c < vars.num_cols(); ++c) vars.integral[c] = false;
    return vars;
}

// degree equations (one per vertex) and the dummy-degree equation; shared
// by all three formulations
inline void add_degree_rows(const TransformedGraph& gs, const VariableSpace& vars,
                            std::vector<LinearRow>& rows) {
    const Graph& g = gs.base;
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<int, double>> c;
        for (int w : g.adj[v]) c.emplace_back(vars.x_col(g.edge_id(v, w)), 1.0);
        c.emplace_back(vars.x_col_dummy(v), 1.0);
        c.emplace_back(vars.y_col(v), -2.0);
        rows.push_back(make_row(std::move(c), Sense::EQ, 0.0, RowFamily::Degree));
    }
    std::vector<std::pair<int, double>> c;
    for (int v = 0; v < g.n; ++v) c.emplace_back(vars.x_col_dummy(v), 1.0);
    rows.push_back(make_row(std::move(c), Sense::EQ, 2.0, RowFamily::DummyDegree));
}

// x_e <= y_v for every v and every E_s edge incident to v
inline void add_edge_implies_vertex_rows(const TransformedGraph& gs, const VariableSpace& vars,
                                         std::vector<LinearRow>& rows) {
    const Graph& g = gs.base;
    for (int v = 0; v < g.n; ++v) {
        for (int w : g.adj[v])
            rows.push_back(make_row({{vars.x_col(g.edge_id(v, w)), 1.0}, {vars.y_col(v), -1.0}},
                                    Sense::LE, 0.0, RowFamily::EdgeImpliesVertex));
        rows.push_back(make_row({{vars.x_col_dummy(v), 1.0}, {vars.y_col(v), -1.0}}, Sense::LE,
                                0.0, RowFamily::EdgeImpliesVertex));
    }
}

// x_e >= y_u + y_v - 1 for every base edge (path must be induced)
inline void add_induced_lower_rows(const TransformedGraph& gs, const VariableSpace& vars,
                                   std::vector<LinearRow>& rows) {
    const Graph& g = gs.base;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        rows.push_back(make_row(
            {{vars.y_col(u), 1.0}, {vars.y_col(v), 1.0}, {vars.x_col(e), -1.0}}, Sense::LE, 1.0,
            RowFamily::InducedLower));
    }
}

inline std::vector<int> base_degrees(const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    return d;
}

} // namespace detail

inline Model build_cec(const TransformedGraph& gs) {
    Model model;
    model.tag = Formulation::cec;
    model.vars = detail::make_vars(gs, /*x_integral=*/true);
    detail::add_degree_rows(gs, model.vars, model.static_rows);
    detail::add_edge_implies_vertex_rows(gs, model.vars, model.static_rows);
    detail::add_induced_lower_rows(gs, model.vars, model.static_rows);
    model.objective.assign(model.vars.num_cols(), 0.0);
    for (int v = 0; v < gs.base.n; ++v) model.objective[model.vars.y_col(v)] = 1.0;
    model.dynamic_families = {RowFamily::Cycle};
    model.vertex_degrees = detail::base_degrees(gs.base);
    return model;
}

enum class CutVariant { Cutset, Subtour };

inline Model build_cut(const TransformedGraph& gs, CutVariant variant = CutVariant::Cutset) {
    Model model = build_cec(gs);
    model.tag = Formulation::cut;
    model.dynamic_families = {variant == CutVariant::Cutset ? RowFamily::Cutset
                                                            : RowFamily::Subtour};
    return model;
}

inline Model build_bcwwy(const TransformedGraph& gs) {
    const Graph& g = gs.base;
    Model model;
    model.tag = Formulation::bcwwy;
    model.vars = detail::make_vars(gs, /*x_integral=*/false);

    // dummy-degree equation, then the paired rows 2x_e <= sum <= 2 per edge
    {
        std::vector<std::pair<int, double>> c;
        for (int v = 0; v < g.n; ++v) c.emplace_back(model.vars.x_col_dummy(v), 1.0);
        model.static_rows.push_back(make_row(std::move(c), Sense::EQ, 2.0, RowFamily::DummyDegree));
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        std::vector<std::pair<int, double>> boundary; // delta_Gs({u,v}): one endpoint inside
        for (int w : g.adj[u])
            if (w != v) boundary.emplace_back(model.vars.x_col(g.edge_id(u, w)), 1.0);
        for (int w : g.adj[v])
            if (w != u) boundary.emplace_back(model.vars.x_col(g.edge_id(v, w)), 1.0);
        boundary.emplace_back(model.vars.x_col_dummy(u), 1.0);
        boundary.emplace_back(model.vars.x_col_dummy(v), 1.0);

        std::vector<std::pair<int, double>> lower = boundary;
        for (auto& p : lower) p.second = -p.second;
        lower.emplace_back(model.vars.x_col(e), 2.0);
        model.static_rows.push_back(
            make_row(std::move(lower), Sense::LE, 0.0, RowFamily::BcwwPairLower));
        model.static_rows.push_back(
            make_row(std::move(boundary), Sense::LE, 2.0, RowFamily::BcwwPairUpper));
    }
    // linking equalities y_v = (1/2) sum of incident x
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<int, double>> c;
        for (int w : g.adj[v]) c.emplace_back(model.vars.x_col(g.edge_id(v, w)), 1.0);
        c.emplace_back(model.vars.x_col_dummy(v), 1.0);
        c.emplace_back(model.vars.y_col(v), -2.0);
        model.static_rows.push_back(make_row(std::move(c), Sense::EQ, 0.0, RowFamily::Degree));
    }

    model.objective.assign(model.vars.num_cols(), 0.0);
    for (int e = 0; e < g.m(); ++e) model.objective[model.vars.x_col(e)] = 1.0;
    model.objective_offset = 1.0; // vertex-count reporting units
    model.dynamic_families = {RowFamily::Cutset};
    model.vertex_degrees = detail::base_degrees(g);
    return model;
}

inline Model build_model(const TransformedGraph& gs, Formulation f,
                         CutVariant variant = CutVariant::Cutset) {
    switch (f) {
        case Formulation::cec: return build_cec(gs);
        case Formulation::cut: return build_cut(gs, variant);
        case Formulation::bcwwy: return build_bcwwy(gs);
    }
    throw std::logic_error("build_model: bad formulation");
}

enum class CliqueVariant { OnX, OnY };

// One row per clique: sum of internal edges <= 1 (x-form) or sum of
// vertices <= 2 (y-form). Size-2 cliques are rejected; their rows are
// dominated by the static rows.
inline std::vector<LinearRow> make_clique_rows(const TransformedGraph& gs,
                                               const CliqueSet& cliques, CliqueVariant variant) {
    const Graph& g = gs.base;
    std::vector<LinearRow> rows;
    rows.reserve(cliques.size());
    VariableSpace vars;
    vars.n = g.n;
    vars.m = g.m();
    for (const auto& K : cliques.cliques) {
        if (K.size() < 3) throw std::invalid_argument("make_clique_rows: clique smaller than 3");
        std::vector<std::pair<int, double>> c;
        if (variant == CliqueVariant::OnY) {
            for (int v : K) c.emplace_back(vars.y_col(v), 1.0);
            rows.push_back(make_row(std::move(c), Sense::LE, 2.0, RowFamily::CliqueY));
        } else {
            for (size_t i = 0; i < K.size(); ++i)
                for (size_t j = i + 1; j < K.size(); ++j) {
                    int e = g.edge_id(K[i], K[j]);
                    if (e < 0)
                        throw std::invalid_argument("make_clique_rows: set is not a clique");
                    c.emplace_back(vars.x_col(e), 1.0);
                }
            rows.push_back(make_row(std::move(c), Sense::LE, 1.0, RowFamily::CliqueX));
        }
    }
    return rows;
}

// Column names used by the LP exporter and diagnostics.
inline std::string column_name(const VariableSpace& vars, const TransformedGraph& gs, int col) {
    if (vars.is_y(col)) return "y" + std::to_string(col);
    auto [u, v] = gs.edge_s(vars.col_edge_s(col));
    if (v == gs.s) return "x_s" + std::to_string(u);
    return "x_" + std::to_string(u) + "_" + std::to_string(v);
}

// Static model in CPLEX LP interchange format; dynamic families appear as
// comments so external solvers see exactly the rows the solve starts from.
inline void write_lp_format(std::ostream& out, const Model& model, const TransformedGraph& gs) {
    out << "\\ longest-induced-path model, formulation " << formulation_name(model.tag) << "\n";
    out << "\\ n=" << gs.base.n << " m=" << gs.base.m() << "\n";
    for (RowFamily f : model.dynamic_families)
        out << "\\ dynamic row family separated lazily: " << row_family_name(f) << "\n";
    out << "Maximize\n obj:";
    bool first = true;
    for (int c = 0; c < model.vars.num_cols(); ++c) {
        if (model.objective[c] == 0.0) continue;
        double a = model.objective[c];
        out << (a < 0 ? " - " : (first ? " " : " + "));
        if (std::abs(a) != 1.0) out << std::abs(a) << " ";
        out << column_name(model.vars, gs, c);
        first = false;
    }
    out << "\nSubject To\n";
    for (size_t i = 0; i < model.static_rows.size(); ++i) {
        const LinearRow& r = model.static_rows[i];
        out << " " << row_family_name(r.family) << i << ":";
        bool f2 = true;
        for (auto [col, a] : r.coeffs) {
            out << (a < 0 ? " - " : (f2 ? " " : " + "));
            if (std::abs(a) != 1.0) out << std::abs(a) << " ";
            out << column_name(model.vars, gs, col);
            f2 = false;
        }
        out << (r.sense == Sense::LE ? " <= " : r.sense == Sense::GE ? " >= " : " = ") << r.rhs
            << "\n";
    }
    out << "Bounds\n";
    for (int c = 0; c < model.vars.num_cols(); ++c)
        out << " 0 <= " << column_name(model.vars, gs, c) << " <= 1\n";
    out << "Binaries\n";
    for (int c = 0; c < model.vars.num_cols(); ++c)
        if (model.vars.integral[c]) out << " " << column_name(model.vars, gs, c) << "\n";
    out << "End\n";
}

} // namespace lipp

#endif
