// Self-contained bounded-variable primal simplex over [l,u] columns with
// incremental row addition. Two phases: a composite phase 1 drives the
// total bound violation of the basic variables to zero, phase 2 maximizes
// the objective. Dense explicit basis inverse with periodic
// refactorization; Dantzig pricing with a Bland fallback after degenerate
// stalls. Deterministic for identical input.
#ifndef LIPP_LP_HPP
#define LIPP_LP_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace lipp {

inline constexpr double kLpFeasTol = 1e-7;
inline constexpr double kLpPivotTol = 1e-9;
inline constexpr double kIntegralityTol = 1e-6;

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    std::vector<double> values; // structural columns only
    double objective = 0.0;
};

enum class ColState : uint8_t { AtLower, AtUpper, Basic };

// Column states for structural columns followed by one slack per row;
// reusable across solves after rows are appended (new slacks start basic).
struct LpBasis {
    std::vector<ColState> state;
    bool empty() const { return state.empty(); }
};

struct LpProblem {
    int num_cols = 0;
    std::vector<double> lower, upper; // structural bounds
    std::vector<double> objective;    // maximize
    std::vector<LinearRow> rows;

    static LpProblem from_model(const Model& model) {
        LpProblem p;
        p.num_cols = model.vars.num_cols();
        p.lower.assign(p.num_cols, 0.0);
        p.upper.assign(p.num_cols, 1.0);
        p.objective = model.objective;
        p.rows = model.static_rows;
        return p;
    }
};

// Appends rows; objective of the tightened relaxation can only decrease.
inline void add_rows(LpProblem& p, const std::vector<LinearRow>& rows) {
    for (const LinearRow& r : rows)
        for (auto [col, a] : r.coeffs) {
            (void)a;
            if (col < 0 || col >= p.num_cols)
                throw std::invalid_argument("add_rows: row references unknown column");
        }
    p.rows.insert(p.rows.end(), rows.begin(), rows.end());
}

namespace detail {

class SimplexSolver {
public:
    explicit SimplexSolver(const LpProblem& p) : p_(p) {
        n_ = p.num_cols;
        m_ = static_cast<int>(p.rows.size());
        total_ = n_ + m_;
        build_columns();
    }

    LpSolution solve(LpBasis* warm) {
        install_basis(warm);
        if (!factorize()) {
            reset_to_slack_basis();
            if (!factorize()) throw std::runtime_error("lp: slack basis singular");
        }
        compute_basic_values();

        const long iter_cap = 2000 + 50L * total_;
        long iters = 0;
        int degenerate_run = 0;
        bool bland = false;
        int refine_rounds = 0;
        LpStatus status = LpStatus::IterationLimit;

        bool phase1 = max_infeasibility() > kLpFeasTol;
        while (true) {
            if (++iters > iter_cap) {
                status = LpStatus::IterationLimit;
                break;
            }
            if (iters % 100 == 0) {
                factorize();
                compute_basic_values();
            }
            if (phase1 && max_infeasibility() <= kLpFeasTol) phase1 = false;

            int enter = price(phase1, bland);
            if (enter < 0) {
                if (phase1) {
                    status = LpStatus::Infeasible;
                    break;
                }
                // candidate optimum: refactorize once and re-verify
                factorize();
                compute_basic_values();
                if (max_infeasibility() > kLpFeasTol) {
                    if (++refine_rounds > 5) {
                        status = LpStatus::IterationLimit;
                        break;
                    }
                    phase1 = true;
                    continue;
                }
                if (price(false, bland) >= 0) {
                    if (++refine_rounds > 5) {
                        status = LpStatus::IterationLimit;
                        break;
                    }
                    continue;
                }
                status = LpStatus::Optimal;
                break;
            }

            double step = 0.0;
            bool progressed = pivot_step(enter, phase1, bland, &step);
            if (!progressed) {
                // unbounded ray; cannot occur for the bounded models built
                // here, treat as a numerical failure
                status = LpStatus::IterationLimit;
                break;
            }
            if (step <= 1e-10) {
                if (++degenerate_run > 60) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }
        }

        LpSolution out;
        out.status = status;
        out.values.assign(n_, 0.0);
        for (int j = 0; j < n_; ++j) out.values[j] = column_value(j);
        out.objective = 0.0;
        for (int j = 0; j < n_; ++j) out.objective += p_.objective[j] * out.values[j];
        if (warm) warm->state = state_;
        return out;
    }

private:
    const LpProblem& p_;
    int n_ = 0, m_ = 0, total_ = 0;

    // sparse columns over the row space (slack j>=n_ has a single unit entry)
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<double> lo_, up_, obj_;
    std::vector<double> rhs_;

    std::vector<ColState> state_;
    std::vector<int> basic_;     // column per basis position
    std::vector<int> basic_pos_; // column -> basis position or -1
    std::vector<double> binv_;   // m x m row-major
    std::vector<double> xb_;     // basic values
    std::vector<double> work_y_, work_alpha_, work_g_;

    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

    void build_columns() {
        cols_.assign(total_, {});
        lo_.assign(total_, 0.0);
        up_.assign(total_, 0.0);
        obj_.assign(total_, 0.0);
        rhs_.assign(m_, 0.0);
        for (int j = 0; j < n_; ++j) {
            lo_[j] = p_.lower[j];
            up_[j] = p_.upper[j];
            obj_[j] = p_.objective[j];
        }
        for (int i = 0; i < m_; ++i) {
            const LinearRow& r = p_.rows[i];
            for (auto [col, a] : r.coeffs) cols_[col].emplace_back(i, a);
            int s = n_ + i;
            cols_[s].emplace_back(i, 1.0);
            rhs_[i] = r.rhs;
            switch (r.sense) {
                case Sense::LE: lo_[s] = 0.0;    up_[s] = inf(); break;
                case Sense::GE: lo_[s] = -inf(); up_[s] = 0.0;   break;
                case Sense::EQ: lo_[s] = 0.0;    up_[s] = 0.0;   break;
            }
        }
    }

    void reset_to_slack_basis() {
        state_.assign(total_, ColState::AtLower);
        for (int j = 0; j < n_; ++j)
            state_[j] = std::isfinite(lo_[j]) ? ColState::AtLower : ColState::AtUpper;
        for (int i = 0; i < m_; ++i) state_[n_ + i] = ColState::Basic;
        rebuild_basic_list();
    }

    void install_basis(LpBasis* warm) {
        if (warm && !warm->empty() && static_cast<int>(warm->state.size()) <= total_) {
            state_ = warm->state;
            state_.resize(total_, ColState::Basic); // slacks of appended rows
            int basics = 0;
            for (ColState s : state_)
                if (s == ColState::Basic) basics++;
            if (basics == m_) {
                rebuild_basic_list();
                return;
            }
        }
        reset_to_slack_basis();
    }

    void rebuild_basic_list() {
        basic_.clear();
        basic_pos_.assign(total_, -1);
        for (int j = 0; j < total_; ++j)
            if (state_[j] == ColState::Basic) {
                basic_pos_[j] = static_cast<int>(basic_.size());
                basic_.push_back(j);
            }
    }

    // dense Gauss-Jordan inversion of the basis matrix with partial pivoting
    bool factorize() {
        std::vector<double> a(static_cast<size_t>(m_) * m_, 0.0);
        for (int pos = 0; pos < m_; ++pos)
            for (auto [row, v] : cols_[basic_[pos]]) a[static_cast<size_t>(row) * m_ + pos] = v;
        binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
        for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = 1.0;

        for (int k = 0; k < m_; ++k) {
            int piv_row = -1;
            double best = 1e-11;
            for (int r = k; r < m_; ++r) {
                double v = std::abs(a[static_cast<size_t>(r) * m_ + k]);
                if (v > best) {
                    best = v;
                    piv_row = r;
                }
            }
            if (piv_row < 0) return false;
            if (piv_row != k) {
                for (int c = 0; c < m_; ++c) {
                    std::swap(a[static_cast<size_t>(k) * m_ + c],
                              a[static_cast<size_t>(piv_row) * m_ + c]);
                    std::swap(binv_[static_cast<size_t>(k) * m_ + c],
                              binv_[static_cast<size_t>(piv_row) * m_ + c]);
                }
            }
            double piv = a[static_cast<size_t>(k) * m_ + k];
            for (int c = 0; c < m_; ++c) {
                a[static_cast<size_t>(k) * m_ + c] /= piv;
                binv_[static_cast<size_t>(k) * m_ + c] /= piv;
            }
            for (int r = 0; r < m_; ++r) {
                if (r == k) continue;
                double f = a[static_cast<size_t>(r) * m_ + k];
                if (f == 0.0) continue;
                for (int c = 0; c < m_; ++c) {
                    a[static_cast<size_t>(r) * m_ + c] -= f * a[static_cast<size_t>(k) * m_ + c];
                    binv_[static_cast<size_t>(r) * m_ + c] -=
                        f * binv_[static_cast<size_t>(k) * m_ + c];
                }
            }
        }
        return true;
    }

    double nonbasic_value(int j) const {
        return state_[j] == ColState::AtUpper ? up_[j] : lo_[j];
    }

    double column_value(int j) const {
        if (state_[j] == ColState::Basic) return xb_[basic_pos_[j]];
        return nonbasic_value(j);
    }

    void compute_basic_values() {
        std::vector<double> r = rhs_;
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == ColState::Basic) continue;
            double v = nonbasic_value(j);
            if (v == 0.0) continue;
            for (auto [row, a] : cols_[j]) r[row] -= a * v;
        }
        xb_.assign(m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            double s = 0.0;
            const double* row = &binv_[static_cast<size_t>(i) * m_];
            for (int k = 0; k < m_; ++k) s += row[k] * r[k];
            xb_[i] = s;
        }
    }

    double max_infeasibility() const {
        double worst = 0.0;
        for (int pos = 0; pos < m_; ++pos) {
            int j = basic_[pos];
            worst = std::max(worst, lo_[j] - xb_[pos]);
            worst = std::max(worst, xb_[pos] - up_[j]);
        }
        return worst;
    }

    // reduced-cost vector shared by both phases; returns entering column
    // or -1 (Dantzig by default, lowest eligible index under Bland)
    int price(bool phase1, bool bland) {
        work_y_.assign(m_, 0.0);
        if (phase1) {
            work_g_.assign(m_, 0.0);
            for (int pos = 0; pos < m_; ++pos) {
                int j = basic_[pos];
                if (xb_[pos] < lo_[j] - kLpFeasTol)
                    work_g_[pos] = -1.0;
                else if (xb_[pos] > up_[j] + kLpFeasTol)
                    work_g_[pos] = 1.0;
            }
            for (int c = 0; c < m_; ++c) {
                double s = 0.0;
                for (int r = 0; r < m_; ++r) s += work_g_[r] * binv_[static_cast<size_t>(r) * m_ + c];
                work_y_[c] = s;
            }
        } else {
            std::vector<double> cb(m_);
            for (int pos = 0; pos < m_; ++pos) cb[pos] = obj_[basic_[pos]];
            for (int c = 0; c < m_; ++c) {
                double s = 0.0;
                for (int r = 0; r < m_; ++r) s += cb[r] * binv_[static_cast<size_t>(r) * m_ + c];
                work_y_[c] = s;
            }
        }

        int best_col = -1;
        double best_rate = kLpPivotTol * 10; // entering threshold 1e-8
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == ColState::Basic) continue;
            if (up_[j] - lo_[j] <= 0.0) continue; // fixed column never enters
            double dot = 0.0;
            for (auto [row, a] : cols_[j]) dot += work_y_[row] * a;
            double rate; // improvement per unit move in the allowed direction
            if (phase1) {
                double dfdx = -dot; // derivative of total infeasibility
                rate = state_[j] == ColState::AtLower ? -dfdx : dfdx;
            } else {
                double rc = obj_[j] - dot;
                rate = state_[j] == ColState::AtLower ? rc : -rc;
            }
            if (rate > best_rate) {
                if (bland) return j;
                best_rate = rate;
                best_col = j;
            }
        }
        return best_col;
    }

    // Performs the ratio test and applies the step (bound flip or basis
    // change). Returns false when the ray is unblocked.
    bool pivot_step(int enter, bool phase1, bool bland, double* step_out) {
        double sigma = state_[enter] == ColState::AtLower ? 1.0 : -1.0;

        work_alpha_.assign(m_, 0.0);
        for (auto [row, a] : cols_[enter])
            for (int r = 0; r < m_; ++r) work_alpha_[r] += binv_[static_cast<size_t>(r) * m_ + row] * a;

        double best_t = up_[enter] - lo_[enter]; // own bound flip distance
        int leave_pos = -1;
        double leave_piv = 0.0;
        ColState leave_state = ColState::AtLower;

        for (int pos = 0; pos < m_; ++pos) {
            double d = -sigma * work_alpha_[pos];
            if (std::abs(d) <= kLpPivotTol) continue;
            int j = basic_[pos];
            double xv = xb_[pos];
            double t;
            ColState hit;
            if (phase1 && xv < lo_[j] - kLpFeasTol) {
                if (d <= 0) continue; // moving further below: no block
                t = (lo_[j] - xv) / d;
                hit = ColState::AtLower;
            } else if (phase1 && xv > up_[j] + kLpFeasTol) {
                if (d >= 0) continue;
                t = (up_[j] - xv) / d;
                hit = ColState::AtUpper;
            } else if (d > 0) {
                if (!std::isfinite(up_[j])) continue;
                t = (up_[j] - xv) / d;
                hit = ColState::AtUpper;
            } else {
                if (!std::isfinite(lo_[j])) continue;
                t = (lo_[j] - xv) / d;
                hit = ColState::AtLower;
            }
            if (t < 0) t = 0;
            bool take;
            if (leave_pos < 0)
                take = t < best_t; // strictly before the bound flip
            else if (t < best_t - 1e-12)
                take = true;
            else if (t > best_t + 1e-12)
                take = false;
            else
                take = bland ? j < basic_[leave_pos] : std::abs(d) > std::abs(leave_piv);
            if (take) {
                best_t = std::min(best_t, t);
                leave_pos = pos;
                leave_piv = d;
                leave_state = hit;
            }
        }

        if (leave_pos < 0) {
            if (!std::isfinite(best_t)) return false; // unblocked ray
            // bound flip
            for (int pos = 0; pos < m_; ++pos) xb_[pos] += best_t * (-sigma * work_alpha_[pos]);
            state_[enter] = state_[enter] == ColState::AtLower ? ColState::AtUpper
                                                               : ColState::AtLower;
            *step_out = best_t;
            return true;
        }

        double t = best_t;
        double enter_value = nonbasic_value(enter) + sigma * t;
        for (int pos = 0; pos < m_; ++pos) xb_[pos] += t * (-sigma * work_alpha_[pos]);
        int leave_col = basic_[leave_pos];
        state_[leave_col] = leave_state;
        state_[enter] = ColState::Basic;
        basic_[leave_pos] = enter;
        basic_pos_[leave_col] = -1;
        basic_pos_[enter] = leave_pos;
        xb_[leave_pos] = enter_value;

        // explicit inverse update, pivot element alpha[leave_pos]
        double piv = work_alpha_[leave_pos];
        double* prow = &binv_[static_cast<size_t>(leave_pos) * m_];
        for (int c = 0; c < m_; ++c) prow[c] /= piv;
        for (int r = 0; r < m_; ++r) {
            if (r == leave_pos) continue;
            double f = work_alpha_[r];
            if (f == 0.0) continue;
            double* row = &binv_[static_cast<size_t>(r) * m_];
            for (int c = 0; c < m_; ++c) row[c] -= f * prow[c];
        }
        *step_out = t;
        return true;
    }
};

} // namespace detail

// Solves the relaxation; optional warm basis is updated in place so the
// caller can chain re-solves after add_rows or bound changes.
inline LpSolution lp_solve(const LpProblem& p, LpBasis* warm_basis = nullptr) {
    detail::SimplexSolver solver(p);
    return solver.solve(warm_basis);
}

inline double max_row_violation(const LpProblem& p, const std::vector<double>& values) {
    double worst = 0.0;
    for (const LinearRow& r : p.rows) worst = std::max(worst, r.violation(values));
    for (int j = 0; j < p.num_cols; ++j) {
        worst = std::max(worst, p.lower[j] - values[j]);
        worst = std::max(worst, values[j] - p.upper[j]);
    }
    return worst;
}

} // namespace lipp

#endif
