#ifndef PRERIESZ_LP_HPP
#define PRERIESZ_LP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preriesz/rational.hpp"

namespace preriesz {

enum class Rel { GE, EQ }; // ⟨a,x⟩ ≥ b  /  ⟨a,x⟩ = b

struct LinearConstraint {
    QVector a;
    Rel rel = Rel::GE;
    Rat b = Rat(0);

    bool operator==(const LinearConstraint&) const = default;
};

struct LinSystem {
    std::size_t vars = 0;
    std::vector<LinearConstraint> rows;

    bool satisfied_by(const QVector& x) const;
};

enum class Sense { Minimize, Maximize };

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Certificate conventions, with c' := c for Minimize and c' := -c for
// Maximize and v' likewise:
//   Optimal:    primal feasible; dual y has y_i ≥ 0 on GE rows, free on EQ
//               rows, Σ y_i a_i = c' and Σ y_i b_i = v'.
//   Infeasible: farkas y with the same sign rules, Σ y_i a_i = 0 and
//               Σ y_i b_i > 0.
//   Unbounded:  primal feasible and ray r with ⟨a_i,r⟩ ≥ 0 on GE rows,
//               = 0 on EQ rows, ⟨c',r⟩ < 0.
struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    std::optional<QVector> primal;
    std::optional<Rat> value;
    std::optional<QVector> dual;
    std::optional<QVector> farkas;
    std::optional<QVector> ray;
};

struct LinearProgram {
    LinSystem system;
    QVector objective;
    Sense sense = Sense::Minimize;
};

// Exact two-phase simplex with Bland's anti-cycling rule and a fixed column
// order, so outcomes are deterministic for fixed input.
LPOutcome solve(const LinearProgram& lp);

// Feasibility-only solve (zero objective): Optimal with a feasible point, or
// Infeasible with a Farkas certificate.
LPOutcome find_feasible(const LinSystem& system);

// Re-derives every claim in `out` from `lp` by plain rational arithmetic.
// Used by tests and by the standalone report verifier.
bool check_outcome(const LinearProgram& lp, const LPOutcome& out, std::string* why = nullptr);

// Total solver invocations in this process; deciders report deltas.
std::int64_t solve_count();

} // namespace preriesz

#endif
