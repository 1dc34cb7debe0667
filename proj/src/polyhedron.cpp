#include "preriesz/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "preriesz/errors.hpp"

namespace preriesz {

Polyhedron::Polyhedron(std::size_t ambient_dim, std::vector<Inequality> inequalities)
    : ambient_(ambient_dim), ineqs_(std::move(inequalities)) {
    for (const auto& q : ineqs_)
        if (q.normal.size() != ambient_)
            throw ArgumentError("inequality dimension does not match ambient dimension");
    std::sort(ineqs_.begin(), ineqs_.end(), [](const Inequality& x, const Inequality& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.offset < y.offset;
    });
    ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
}

bool Polyhedron::contains(const QVector& point) const {
    if (point.size() != ambient_)
        throw ArgumentError("point dimension does not match ambient dimension");
    for (const auto& q : ineqs_)
        if (dot(q.normal, point) < q.offset) return false;
    return true;
}

Polyhedron Polyhedron::translated(const QVector& shift) const {
    if (shift.size() != ambient_)
        throw ArgumentError("shift dimension does not match ambient dimension");
    std::vector<Inequality> rows;
    rows.reserve(ineqs_.size());
    for (const auto& q : ineqs_)
        rows.push_back({q.normal, q.offset + dot(q.normal, shift)});
    return Polyhedron(ambient_, std::move(rows));
}

std::vector<Inequality> Polyhedron::merged_inequalities() const {
    std::map<QVector, Rat, bool (*)(const QVector&, const QVector&)> best(lex_less);
    for (const auto& q : ineqs_) {
        auto it = best.find(q.normal);
        if (it == best.end())
            best.emplace(q.normal, q.offset);
        else if (q.offset > it->second)
            it->second = q.offset;
    }
    std::vector<Inequality> rows;
    rows.reserve(best.size());
    for (const auto& [normal, offset] : best) rows.push_back({normal, offset});
    return rows;
}

LinSystem Polyhedron::as_system() const {
    LinSystem sys;
    sys.vars = ambient_;
    for (const auto& q : merged_inequalities())
        sys.rows.push_back({q.normal, Rel::GE, q.offset});
    return sys;
}

const EmptinessInfo& Polyhedron::emptiness() const {
    std::call_once(lazy_->once, [this] {
        const LPOutcome out = find_feasible(as_system());
        EmptinessInfo info;
        if (out.status == LPStatus::Infeasible) {
            info.empty = true;
            info.certificate = *out.farkas;
        } else {
            info.empty = false;
            info.certificate = *out.primal;
        }
        lazy_->info = std::move(info);
    });
    return *lazy_->info;
}

std::optional<QVector> inclusion_counterexample(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw ArgumentError("polyhedra of different ambient dimension");
    if (p.is_empty()) return std::nullopt;
    for (const auto& ineq : q.merged_inequalities()) {
        LinearProgram lp;
        lp.system = p.as_system();
        lp.objective = ineq.normal;
        lp.sense = Sense::Minimize;
        const LPOutcome out = solve(lp);
        if (out.status == LPStatus::Optimal) {
            if (*out.value < ineq.offset) return out.primal;
            continue;
        }
        // Unbounded: march along the improving ray until the inequality fails.
        const QVector& x0 = *out.primal;
        const QVector& r = *out.ray;
        const Rat drop = dot(ineq.normal, r); // < 0
        if (dot(ineq.normal, x0) < ineq.offset) return x0;
        Rat t = (ineq.offset - 1 - dot(ineq.normal, x0)) / drop;
        if (t < 0) t = 0;
        return add(x0, scale(t, r));
    }
    return std::nullopt;
}

PolyRelationReport polyhedron_relation(const Polyhedron& p, const Polyhedron& q) {
    PolyRelationReport rep;
    // A point of P violating Q shows P ⊄ Q, and conversely.
    rep.in_p_not_q = inclusion_counterexample(p, q);
    rep.in_q_not_p = inclusion_counterexample(q, p);
    const bool p_in_q = !rep.in_p_not_q.has_value();
    const bool q_in_p = !rep.in_q_not_p.has_value();
    if (p_in_q && q_in_p) rep.relation = PolyRelation::Equal;
    else if (p_in_q) rep.relation = PolyRelation::ProperSubset;
    else if (q_in_p) rep.relation = PolyRelation::ProperSuperset;
    else rep.relation = PolyRelation::Incomparable;
    return rep;
}

} // namespace preriesz
