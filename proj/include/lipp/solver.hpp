// Branch-and-cut driver: LP bounding over the growing cut pool, lazy
// separation (integer candidates always, fractional points at the root),
// best-bound node selection, most-fractional branching on the y columns,
// warm starts, and path decoding.
#ifndef LIPP_SOLVER_HPP
#define LIPP_SOLVER_HPP

#include <chrono>
#include <cmath>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "heuristic.hpp"
#include "lp.hpp"
#include "model.hpp"
#include "separation.hpp"

namespace lipp {

enum class CliqueMode { Apriori, Separate, Off };
enum class SolveStatus { Optimal, TimeLimit, Infeasible };

inline const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::TimeLimit: return "TimeLimit";
        case SolveStatus::Infeasible: return "Infeasible";
    }
    return "?";
}

inline const char* clique_mode_name(CliqueMode m) {
    switch (m) {
        case CliqueMode::Apriori: return "apriori";
        case CliqueMode::Separate: return "separate";
        case CliqueMode::Off: return "off";
    }
    return "?";
}

struct SolverConfig {
    Formulation formulation = Formulation::cec;
    CliqueMode clique_mode = CliqueMode::Apriori;
    int max_cl = 500;
    CutVariant cut_variant = CutVariant::Cutset;
    double time_limit_seconds = 1200.0;
    double gap_tol = 1e-6;
    bool root_only_fractional_separation = true;
    std::optional<PathSolution> warm_start;
    uint64_t seed = 0;
    int threads = 1; // fixed to one; kept for config parity with the runs
    LpPointObserver lp_observer;
    // (best_bound, incumbent) in vertex units, called once per processed node
    std::function<void(double, double)> node_observer;
};

struct CutCounts {
    long cycle = 0;
    long cutset = 0; // includes the subtour-form rows
    long clique = 0;
};

struct SolveTimings {
    double total = 0.0;
    double heuristic = 0.0;
    double lp = 0.0;
    double separation = 0.0;
};

struct SolveReport {
    SolveStatus status = SolveStatus::Optimal;
    std::optional<PathSolution> incumbent;
    double objective = 0.0;   // vertex units
    double best_bound = 0.0;  // vertex units
    double gap_percent = std::numeric_limits<double>::infinity();
    long nodes = 0;
    CutCounts cuts_added;
    double root_bound = 0.0;  // vertex units, after the root cut rounds
    SolveTimings timings;
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Walks the selected edges from one dummy neighbor to the other; the
// result excludes the dummy vertex and must verify as an induced path.
// Throws DecodeError when the selection is not a single s-cycle (a
// violated dynamic row is still missing in that case).
inline PathSolution decode_path(const Point& p, const TransformedGraph& gs) {
    const Graph& g = gs.base;
    std::vector<int> selected;
    for (int v = 0; v < g.n; ++v)
        if (p.y[v] >= 0.5) selected.push_back(v);

    std::vector<int> ends;
    for (int v = 0; v < g.n; ++v)
        if (p.x[gs.dummy_edge(v)] >= 1.0 - kIntegralityTol) ends.push_back(v);
    if (ends.size() != 2)
        throw DecodeError("decode_path: dummy vertex has " + std::to_string(ends.size()) +
                          " selected edges");

    std::vector<std::vector<int>> support(g.n);
    for (int e = 0; e < g.m(); ++e)
        if (p.x[e] >= 1.0 - kIntegralityTol) {
            auto [u, v] = g.edges[e];
            support[u].push_back(v);
            support[v].push_back(u);
        }

    std::vector<int> seq = {ends[0]};
    int prev = -1, cur = ends[0];
    while (true) {
        int next = -1;
        for (int w : support[cur]) {
            if (w == prev) continue;
            if (next >= 0) throw DecodeError("decode_path: branching vertex in selection");
            next = w;
        }
        if (next < 0) break;
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    if (cur != ends[1] && ends[0] != ends[1])
        throw DecodeError("decode_path: walk did not end at the second extremity");
    if (seq.size() != selected.size())
        throw DecodeError("decode_path: walk consumed " + std::to_string(seq.size()) + " of " +
                          std::to_string(selected.size()) + " selected vertices");
    VerifyResult ok = verify_induced_path(seq, g);
    if (!ok) throw DecodeError("decode_path: " + ok.reason);
    return PathSolution{seq};
}

// Most-fractional y column; ties by higher vertex degree, then lower id.
// x columns are considered only when every y is integral.
inline int choose_branch(const Point& p, const Model& model) {
    const VariableSpace& vars = model.vars;
    int best = -1;
    double best_score = 2.0;
    for (int v = 0; v < vars.n; ++v) {
        double val = p.y[v];
        if (std::abs(val - std::round(val)) <= kIntegralityTol) continue;
        double score = std::abs(val - 0.5);
        int col = vars.y_col(v);
        if (score < best_score - 1e-12) {
            best = col;
            best_score = score;
        } else if (best >= 0 && score <= best_score + 1e-12) {
            int bv = vars.col_vertex(best);
            if (model.vertex_degrees[v] > model.vertex_degrees[bv]) best = col;
        }
    }
    if (best >= 0) return best;
    for (size_t e = 0; e < p.x.size(); ++e) {
        double val = p.x[e];
        if (std::abs(val - std::round(val)) <= kIntegralityTol) continue;
        double score = std::abs(val - 0.5);
        if (score < best_score - 1e-12) {
            best = vars.x_col(static_cast<int>(e));
            best_score = score;
        }
    }
    if (best < 0) throw std::logic_error("choose_branch: point is integral");
    return best;
}

namespace detail {

class BranchAndCut {
public:
    BranchAndCut(const Graph& g, const SolverConfig& cfg)
        : g_(g), cfg_(cfg), gs_(transform(g)),
          model_(build_model(gs_, cfg.formulation, cfg.cut_variant)) {}

    SolveReport run() {
        auto t0 = std::chrono::steady_clock::now();
        deadline_ = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(cfg_.time_limit_seconds));
        SolveReport report;

        lp_ = LpProblem::from_model(model_);
        setup_cliques();
        if (cfg_.warm_start) {
            VerifyResult ok = verify_induced_path(cfg_.warm_start->sequence, g_);
            if (!ok) throw std::invalid_argument("solve: warm start is not an induced path");
            install_incumbent(*cfg_.warm_start);
        }

        double trivial = model_.tag == Formulation::bcwwy ? g_.n - 1.0 : g_.n;
        open_.push(Node{0, trivial, 0, {}});
        last_popped_bound_ = trivial;
        long next_id = 1;
        bool hit_limit = false;

        while (!open_.empty()) {
            if (out_of_time()) {
                hit_limit = true;
                break;
            }
            Node node = open_.top();
            open_.pop();
            if (prunable(node.bound_raw)) continue;
            report.nodes++;
            publish_node(node.bound_raw);

            NodeOutcome outcome = process_node(node);
            if (node.id == 0) root_bound_raw_ = outcome.last_bound_raw;
            if (outcome.timed_out) {
                hit_limit = true;
                break;
            }
            if (outcome.branch_column >= 0) {
                for (int fix : {0, 1}) {
                    Node child{next_id++, outcome.last_bound_raw, node.depth + 1, node.fixings};
                    child.fixings.emplace_back(outcome.branch_column, fix);
                    if (!prunable(child.bound_raw)) open_.push(child);
                }
            }
        }

        bool timed_out = hit_limit;
        report.status = timed_out ? SolveStatus::TimeLimit
                        : have_incumbent_ ? SolveStatus::Optimal
                                          : SolveStatus::Infeasible;
        if (have_incumbent_) {
            report.incumbent = incumbent_path_;
            report.objective = incumbent_path_.cardinality();
        }
        double bound_raw = have_incumbent_ ? incumbent_raw_ : -1.0;
        if (timed_out) {
            bound_raw = last_popped_bound_;
            if (!open_.empty()) bound_raw = std::max(bound_raw, open_.top().bound_raw);
        }
        double bound_vertex = bound_raw + model_.objective_offset;
        // feasible objectives are integral, so the bound can be floored
        bound_vertex = std::floor(bound_vertex + 1e-6);
        if (report.status == SolveStatus::Optimal)
            bound_vertex = report.objective;
        report.best_bound = std::max(bound_vertex, report.objective);
        report.gap_percent =
            report.objective > 0
                ? 100.0 * (report.best_bound - report.objective) / report.objective
                : std::numeric_limits<double>::infinity();
        report.root_bound = root_bound_raw_ + model_.objective_offset;
        report.cuts_added = cuts_;
        report.timings = timings_;
        report.timings.total =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }

private:
    struct Node {
        long id;
        double bound_raw;
        int depth;
        std::vector<std::pair<int, int>> fixings; // (column, 0/1)
    };
    struct NodeCompare {
        bool operator()(const Node& a, const Node& b) const {
            if (a.bound_raw != b.bound_raw) return a.bound_raw < b.bound_raw; // max-heap
            if (a.depth != b.depth) return a.depth < b.depth;
            return a.id > b.id;
        }
    };
    struct NodeOutcome {
        double last_bound_raw = 0.0;
        int branch_column = -1;
        bool timed_out = false;
    };

    const Graph& g_;
    SolverConfig cfg_;
    TransformedGraph gs_;
    Model model_;
    LpProblem lp_;
    LpBasis basis_;
    std::priority_queue<Node, std::vector<Node>, NodeCompare> open_;

    bool clique_separation_ = false;
    bool have_incumbent_ = false;
    double incumbent_raw_ = -1.0;
    PathSolution incumbent_path_;
    double root_bound_raw_ = 0.0;
    double last_popped_bound_ = 0.0;
    CutCounts cuts_;
    SolveTimings timings_;
    std::chrono::steady_clock::time_point deadline_;

    bool out_of_time() const { return std::chrono::steady_clock::now() >= deadline_; }

    void setup_cliques() {
        if (cfg_.clique_mode == CliqueMode::Off) return;
        bool can_separate = model_.tag != Formulation::bcwwy; // baseline: a-priori only
        if (cfg_.clique_mode == CliqueMode::Separate) {
            clique_separation_ = can_separate;
            return;
        }
        CliquePolicyResult policy = apriori_clique_policy(g_, cfg_.max_cl);
        if (policy.policy == CliquePolicy::AddAll) {
            CliqueVariant variant = model_.tag == Formulation::bcwwy ? CliqueVariant::OnX
                                                                     : CliqueVariant::OnY;
            add_rows(lp_, make_clique_rows(gs_, policy.cliques, variant));
        } else {
            clique_separation_ = can_separate;
        }
    }

    void install_incumbent(const PathSolution& path) {
        double raw = path.cardinality() - model_.objective_offset;
        if (!have_incumbent_ || raw > incumbent_raw_) {
            have_incumbent_ = true;
            incumbent_raw_ = raw;
            incumbent_path_ = path;
        }
    }

    bool prunable(double bound_raw) const {
        if (!have_incumbent_) return false;
        if (bound_raw <= incumbent_raw_ + cfg_.gap_tol * std::max(1.0, std::abs(incumbent_raw_)))
            return true;
        // no integer value in (incumbent, bound]
        return std::floor(bound_raw + 1e-6) <= incumbent_raw_ + 1e-9;
    }

    void publish_node(double bound_raw) {
        last_popped_bound_ = bound_raw;
        if (cfg_.node_observer)
            cfg_.node_observer(bound_raw + model_.objective_offset,
                               have_incumbent_ ? incumbent_raw_ + model_.objective_offset : 0.0);
    }

    void apply_bounds(const Node& node) {
        std::fill(lp_.lower.begin(), lp_.lower.end(), 0.0);
        std::fill(lp_.upper.begin(), lp_.upper.end(), 1.0);
        for (auto [col, fix] : node.fixings) {
            if (fix == 0)
                lp_.upper[col] = 0.0;
            else
                lp_.lower[col] = 1.0;
        }
    }

    bool point_integral(const std::vector<double>& values) const {
        for (int c = 0; c < model_.vars.num_cols(); ++c) {
            if (!model_.vars.integral[c]) continue;
            if (std::abs(values[c] - std::round(values[c])) > kIntegralityTol) return false;
        }
        return true;
    }

    // converts cut certificates into the rows of the active family
    std::vector<LinearRow> cut_rows(const SeparationResult& sep,
                                    const std::vector<double>& values) {
        std::vector<LinearRow> rows;
        for (const Certificate& cert : sep.certificates) {
            const auto& cut = std::get<CutCertificate>(cert);
            LinearRow row;
            if (model_.tag == Formulation::bcwwy)
                row = ger03_row(gs_, model_.vars, cut.S, cut.v);
            else if (cfg_.cut_variant == CutVariant::Subtour)
                row = subtour_row(g_, model_.vars, cut.S, cut.v);
            else
                row = cutset_row(gs_, model_.vars, cut.S, cut.v);
            if (row.violation(values) > kSepTol) rows.push_back(std::move(row));
        }
        return rows;
    }

    // all integer-candidate separators of the active formulation
    std::vector<LinearRow> separate_integer(const Point& p, const std::vector<double>& values) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<LinearRow> rows;
        if (model_.tag == Formulation::cec) {
            SeparationResult sep = separate_cycles_integer(p, g_, model_.vars);
            cuts_.cycle += static_cast<long>(sep.size());
            rows = std::move(sep.rows);
        } else {
            SeparationResult sep = separate_cutset_integer(p, gs_, model_.vars);
            std::vector<LinearRow> converted = cut_rows(sep, values);
            cuts_.cutset += static_cast<long>(converted.size());
            rows = std::move(converted);
        }
        if (clique_separation_) {
            SeparationResult sep = separate_cliques(p, g_, model_.vars);
            cuts_.clique += static_cast<long>(sep.size());
            for (LinearRow& r : sep.rows) rows.push_back(std::move(r));
        }
        timings_.separation +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rows;
    }

    std::vector<LinearRow> separate_fractional(const Point& p,
                                               const std::vector<double>& values) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<LinearRow> rows;
        if (model_.tag == Formulation::cec) {
            SeparationResult sep = separate_cycles_fractional(p, g_, model_.vars);
            cuts_.cycle += static_cast<long>(sep.size());
            rows = std::move(sep.rows);
        } else {
            SeparationResult sep = separate_cutset_fractional(p, gs_, model_.vars);
            std::vector<LinearRow> converted = cut_rows(sep, values);
            cuts_.cutset += static_cast<long>(converted.size());
            rows = std::move(converted);
        }
        if (clique_separation_) {
            SeparationResult sep = separate_cliques(p, g_, model_.vars);
            cuts_.clique += static_cast<long>(sep.size());
            for (LinearRow& r : sep.rows) rows.push_back(std::move(r));
        }
        timings_.separation +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rows;
    }

    NodeOutcome process_node(const Node& node) {
        NodeOutcome out;
        out.last_bound_raw = node.bound_raw;
        apply_bounds(node);
        bool at_root = node.id == 0;
        int fractional_rounds = 0;
        const int kFractionalRoundCap = 50;

        for (int round = 0;; ++round) {
            if (round > 2000)
                throw std::runtime_error("solve: node cut loop failed to converge");
            if (out_of_time()) {
                out.timed_out = true;
                return out;
            }
            auto t0 = std::chrono::steady_clock::now();
            LpSolution sol = lp_solve(lp_, &basis_);
            timings_.lp +=
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (sol.status == LpStatus::Infeasible) return out;
            if (sol.status != LpStatus::Optimal)
                throw std::runtime_error("solve: LP bounding failed (iteration limit)");
            out.last_bound_raw = std::min(out.last_bound_raw, sol.objective);
            if (prunable(sol.objective)) return out;

            Point p = Point::from_column_values(model_.vars, sol.values);
            if (cfg_.lp_observer) cfg_.lp_observer(p, model_);

            if (point_integral(sol.values)) {
                std::vector<LinearRow> rows = separate_integer(p, sol.values);
                if (!rows.empty()) {
                    add_rows(lp_, rows);
                    continue;
                }
                install_incumbent(decode_path(p, gs_));
                return out;
            }

            bool fractional_allowed =
                (at_root || !cfg_.root_only_fractional_separation) &&
                fractional_rounds < kFractionalRoundCap;
            if (fractional_allowed) {
                std::vector<LinearRow> rows = separate_fractional(p, sol.values);
                if (!rows.empty()) {
                    add_rows(lp_, rows);
                    fractional_rounds++;
                    continue;
                }
            }
            out.branch_column = choose_branch(p, model_);
            return out;
        }
    }
};

} // namespace detail

// Entry point. Inputs with |E| <= 1 bypass the model entirely: an
// edgeless graph admits a single vertex, one edge admits its endpoints.
inline SolveReport solve(const Graph& g, const SolverConfig& cfg = {}) {
    if (g.m() <= 1) {
        SolveReport report;
        report.status = SolveStatus::Optimal;
        PathSolution path;
        if (g.m() == 1)
            path.sequence = {g.edges[0].first, g.edges[0].second};
        else if (g.n >= 1)
            path.sequence = {0};
        report.incumbent = path;
        report.objective = path.cardinality();
        report.best_bound = report.objective;
        report.root_bound = report.objective;
        report.gap_percent = report.objective > 0 ? 0.0
                                                  : std::numeric_limits<double>::infinity();
        return report;
    }
    detail::BranchAndCut bc(g, cfg);
    return bc.run();
}

} // namespace lipp

#endif
