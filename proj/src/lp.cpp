#include "preriesz/lp.hpp"

#include <atomic>
#include <cstddef>

#include "preriesz/errors.hpp"

namespace preriesz {

bool LinSystem::satisfied_by(const QVector& x) const {
    if (x.size() != vars) return false;
    for (const auto& row : rows) {
        const Rat lhs = dot(row.a, x);
        if (row.rel == Rel::GE ? lhs < row.b : lhs != row.b) return false;
    }
    return true;
}

namespace {

std::atomic<std::int64_t> g_solve_count{0};

// Dense tableau for the standard-form system
//     [A' | -A' | S | I] (u, v, s, art) = beta,   beta ≥ 0,
// where A' carries the original rows scaled by sigma = ±1 so the right-hand
// side is nonnegative, and S holds one -sigma_i e_i slack column per GE row.
// Artificial columns form an identity block, which makes the simplex
// multipliers readable off the objective row at any time.
class Tableau {
public:
    Tableau(const LinSystem& sys, const QVector& min_objective)
        : m_(sys.rows.size()), n_(sys.vars) {
        slack_of_.assign(m_, SIZE_MAX);
        sigma_.resize(m_);
        std::size_t slacks = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (sys.rows[i].rel == Rel::GE) ++slacks;
        cols_ = 2 * n_ + slacks + m_;
        art0_ = 2 * n_ + slacks;
        t_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
        basis_.resize(m_);

        std::size_t s = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = sys.rows[i];
            sigma_[i] = row.b < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                const Rat v = Rat(sigma_[i]) * row.a[j];
                t_[i][j] = v;
                t_[i][n_ + j] = -v;
            }
            if (row.rel == Rel::GE) {
                slack_of_[i] = 2 * n_ + s;
                t_[i][2 * n_ + s] = Rat(-sigma_[i]);
                ++s;
            }
            t_[i][art0_ + i] = 1;
            t_[i][cols_] = Rat(sigma_[i]) * row.b;
            basis_[i] = art0_ + i;
        }
        cost_.assign(cols_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost_[j] = min_objective[j];
            cost_[n_ + j] = -min_objective[j];
        }
    }

    // Minimize Σ artificials.  Returns the phase-one optimum.
    Rat phase_one() {
        QVector pcost(cols_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) pcost[art0_ + i] = 1;
        load_objective(pcost);
        run(/*allow_artificials=*/true);
        return -z_[cols_];
    }

    // Row multipliers of the current objective row, mapped back to the
    // original row signs.
    QVector multipliers(bool phase_one_costs) const {
        QVector y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat rc = z_[art0_ + i];
            const Rat yi = phase_one_costs ? Rat(1) - rc : -rc;
            y[i] = Rat(sigma_[i]) * yi;
        }
        return y;
    }

    // Drives basic artificials out of the basis where possible.  Rows that
    // cannot pivot are redundant and stay inert (all non-artificial entries
    // zero), so phase two never touches them.
    void purge_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < art0_) continue;
            for (std::size_t j = 0; j < art0_; ++j) {
                if (t_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    // Minimize the constructor objective from the current basis.  Returns
    // false when unbounded, in which case ray_col_ marks the entering column.
    bool phase_two() {
        load_objective(cost_);
        return run(/*allow_artificials=*/false);
    }

    Rat objective_value() const { return -z_[cols_]; }

    QVector primal() const {
        QVector val(cols_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) val[basis_[i]] = t_[i][cols_];
        QVector x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = val[j] - val[n_ + j];
        return x;
    }

    QVector unbounded_ray() const {
        QVector dir(cols_, Rat(0));
        dir[ray_col_] = 1;
        for (std::size_t i = 0; i < m_; ++i) dir[basis_[i]] = -t_[i][ray_col_];
        QVector r(n_);
        for (std::size_t j = 0; j < n_; ++j) r[j] = dir[j] - dir[n_ + j];
        return r;
    }

private:
    void load_objective(const QVector& cost) {
        z_.assign(cols_ + 1, Rat(0));
        for (std::size_t j = 0; j < cols_; ++j) z_[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= cb * t_[i][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = t_[row][col];
        for (std::size_t j = 0; j <= cols_; ++j) t_[row][j] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            const Rat f = t_[i][col];
            for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[row][j];
        }
        if (z_[col] != 0) {
            const Rat f = z_[col];
            for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost, leaving = lowest basis index among the minimum-ratio rows.
    bool run(bool allow_artificials) {
        const std::size_t limit = allow_artificials ? cols_ : art0_;
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (z_[j] < 0) { enter = j; break; }
            }
            if (enter == limit) return true;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                const Rat ratio = t_[i][cols_] / t_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                ray_col_ = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }

    std::size_t m_, n_, cols_ = 0, art0_ = 0;
    std::vector<std::vector<Rat>> t_;
    QVector z_;
    QVector cost_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> slack_of_;
    std::vector<int> sigma_;
    std::size_t ray_col_ = 0;
};

void validate(const LinearProgram& lp) {
    if (lp.objective.size() != lp.system.vars)
        throw ArgumentError("objective dimension does not match variable count");
    for (const auto& row : lp.system.rows)
        if (row.a.size() != lp.system.vars)
            throw ArgumentError("constraint dimension does not match variable count");
}

} // namespace

LPOutcome solve(const LinearProgram& lp) {
    validate(lp);
    g_solve_count.fetch_add(1, std::memory_order_relaxed);

    const bool maximize = lp.sense == Sense::Maximize;
    QVector min_obj = maximize ? negate(lp.objective) : lp.objective;

    LPOutcome out;
    if (lp.system.rows.empty()) {
        // Whole space: feasible at the origin; optimal iff the objective is 0.
        for (std::size_t j = 0; j < lp.system.vars; ++j) {
            if (min_obj[j] != 0) {
                out.status = LPStatus::Unbounded;
                out.primal = QVector(lp.system.vars, Rat(0));
                QVector r(lp.system.vars, Rat(0));
                r[j] = min_obj[j] > 0 ? Rat(-1) : Rat(1);
                out.ray = r;
                return out;
            }
        }
        out.status = LPStatus::Optimal;
        out.primal = QVector(lp.system.vars, Rat(0));
        out.value = Rat(0);
        out.dual = QVector{};
        return out;
    }

    Tableau tab(lp.system, min_obj);
    const Rat phase1 = tab.phase_one();
    if (phase1 > 0) {
        out.status = LPStatus::Infeasible;
        out.farkas = tab.multipliers(/*phase_one_costs=*/true);
        return out;
    }
    tab.purge_artificials();
    if (!tab.phase_two()) {
        out.status = LPStatus::Unbounded;
        out.primal = tab.primal();
        out.ray = tab.unbounded_ray();
        return out;
    }
    out.status = LPStatus::Optimal;
    out.primal = tab.primal();
    const Rat v = tab.objective_value();
    out.value = maximize ? -v : v;
    out.dual = tab.multipliers(/*phase_one_costs=*/false);
    return out;
}

LPOutcome find_feasible(const LinSystem& system) {
    LinearProgram lp;
    lp.system = system;
    lp.objective = QVector(system.vars, Rat(0));
    lp.sense = Sense::Minimize;
    return solve(lp);
}

bool check_outcome(const LinearProgram& lp, const LPOutcome& out, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto& rows = lp.system.rows;
    const bool maximize = lp.sense == Sense::Maximize;
    const QVector cmin = maximize ? negate(lp.objective) : lp.objective;

    auto check_multiplier_signs = [&](const QVector& y) {
        if (y.size() != rows.size()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].rel == Rel::GE && y[i] < 0) return false;
        return true;
    };
    auto combine = [&](const QVector& y) {
        QVector lhs(lp.system.vars, Rat(0));
        Rat rhs(0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            lhs = add(lhs, scale(y[i], rows[i].a));
            rhs += y[i] * rows[i].b;
        }
        return std::make_pair(lhs, rhs);
    };

    switch (out.status) {
    case LPStatus::Optimal: {
        if (!out.primal || !out.value || !out.dual) return fail("optimal outcome missing fields");
        if (!lp.system.satisfied_by(*out.primal)) return fail("primal point infeasible");
        if (dot(lp.objective, *out.primal) != *out.value) return fail("objective value mismatch");
        if (!check_multiplier_signs(*out.dual)) return fail("dual sign violation");
        auto [lhs, rhs] = combine(*out.dual);
        if (lhs != cmin) return fail("dual does not reproduce the objective");
        const Rat vmin = maximize ? -*out.value : *out.value;
        if (rhs != vmin) return fail("strong duality violated");
        return true;
    }
    case LPStatus::Infeasible: {
        if (!out.farkas) return fail("infeasible outcome missing certificate");
        if (!check_multiplier_signs(*out.farkas)) return fail("farkas sign violation");
        auto [lhs, rhs] = combine(*out.farkas);
        if (!is_zero(lhs)) return fail("farkas combination is not zero");
        if (rhs <= 0) return fail("farkas right-hand side not positive");
        return true;
    }
    case LPStatus::Unbounded: {
        if (!out.primal || !out.ray) return fail("unbounded outcome missing fields");
        if (!lp.system.satisfied_by(*out.primal)) return fail("primal point infeasible");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat d = dot(rows[i].a, *out.ray);
            if (rows[i].rel == Rel::GE ? d < 0 : d != 0) return fail("ray leaves the feasible set");
        }
        if (dot(cmin, *out.ray) >= 0) return fail("ray does not improve the objective");
        return true;
    }
    }
    return fail("unknown status");
}

std::int64_t solve_count() {
    return g_solve_count.load(std::memory_order_relaxed);
}

} // namespace preriesz
