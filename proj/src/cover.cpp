#include "preriesz/cover.hpp"

#include <sstream>

#include "preriesz/errors.hpp"

namespace preriesz {

FunctionalRepresentation functional_representation(const PreRieszModel& model, const Caps& caps) {
    const auto& normals = model.cone.normals();
    if (normals.size() > caps.max_functionals)
        throw CapacityError("functional count exceeds configured cap");
    if (normals.empty())
        throw StructuralError("cone has no functionals; model cannot be embedded");
    FunctionalRepresentation rep;
    rep.model = model;
    rep.f = QMatrix::from_rows(normals);
    rep.m = normals.size();
    return rep;
}

namespace {

// min (Fd)_j subject to F d ≥ target.
std::optional<Rat> coordinate_min(const FunctionalRepresentation& rep, std::size_t j,
                                  const QVector& target) {
    LinearProgram lp;
    lp.system.vars = rep.model.dim;
    for (std::size_t i = 0; i < rep.m; ++i)
        lp.system.rows.push_back({rep.f.row(i), Rel::GE, target[i]});
    lp.objective = rep.f.row(j);
    lp.sense = Sense::Minimize;
    const LPOutcome out = solve(lp);
    if (out.status != LPStatus::Optimal) return std::nullopt;
    return out.value;
}

} // namespace

CoverVerification verify_cover(const FunctionalRepresentation& rep) {
    CoverVerification v;

    // Bipositivity: every ray embeds nonnegatively, and the cone carved out
    // by F is generated by exactly the model's rays (round trip through the
    // polar).
    v.bipositive = true;
    for (const auto& r : rep.model.cone.rays()) {
        const QVector image = rep.embed(r);
        for (const auto& c : image)
            if (c < 0) v.bipositive = false;
    }
    if (v.bipositive) {
        const PolarGenerators back =
            polar_generators(rep.model.cone.normals(), rep.model.dim, Caps::wide());
        v.bipositive = back.lineality.empty() && back.rays == rep.model.cone.rays();
        if (!v.bipositive) v.failure = "H-representation round trip changed the ray set";
    } else {
        v.failure = "a ray embeds with a negative coordinate";
    }

    // Majorizing: one LP for d with F d ≥ 1.
    {
        LinSystem sys;
        sys.vars = rep.model.dim;
        for (std::size_t i = 0; i < rep.m; ++i)
            sys.rows.push_back({rep.f.row(i), Rel::GE, Rat(1)});
        const LPOutcome out = find_feasible(sys);
        v.majorizing = out.status == LPStatus::Optimal;
        if (v.majorizing) v.majorant = out.primal;
        else if (v.failure.empty()) v.failure = "no element embeds above the all-ones vector";
    }

    // Order density via the gap function on ±unit vectors: 2m² LPs.
    v.order_dense = true;
    for (std::size_t k = 0; k < rep.m && v.order_dense; ++k) {
        for (int sign = +1; sign >= -1; sign -= 2) {
            QVector target(rep.m, Rat(0));
            target[k] = sign;
            for (std::size_t j = 0; j < rep.m; ++j) {
                const auto got = coordinate_min(rep, j, target);
                if (!got || *got != target[j]) {
                    v.order_dense = false;
                    std::ostringstream msg;
                    msg << "order density gap at (j=" << j << ", k=" << k
                        << ", sign=" << sign << ")";
                    if (got) msg << ": infimum coordinate " << rat_str(*got) << " instead of "
                                 << rat_str(target[j]);
                    if (v.failure.empty()) v.failure = msg.str();
                    break;
                }
            }
            if (!v.order_dense) break;
        }
    }
    return v;
}

namespace {

QVector coordinate_max(const QMatrix& f, const std::vector<QVector>& elements) {
    QVector best = f.apply(elements.front());
    for (std::size_t i = 1; i < elements.size(); ++i) {
        const QVector cur = f.apply(elements[i]);
        for (std::size_t j = 0; j < best.size(); ++j)
            if (cur[j] > best[j]) best[j] = cur[j];
    }
    return best;
}

} // namespace

QVector riesz_element(const FunctionalRepresentation& rep, const std::vector<QVector>& a,
                      const std::vector<QVector>& b) {
    if (a.empty() || b.empty()) throw ArgumentError("riesz element of an empty set");
    return sub(coordinate_max(rep.f, a), coordinate_max(rep.f, b));
}

NormalizedPair normalize_representation(const FunctionalRepresentation& rep,
                                        const std::vector<QVector>& a_tilde,
                                        const std::vector<QVector>& b_tilde) {
    if (a_tilde.empty() || b_tilde.empty())
        throw ArgumentError("normalize_representation with an empty set");
    // x ∈ X₊ dominating everything: minimize Σ(Fx) over the upper set of
    // Ã ∪ B̃ ∪ {0} for a deterministic vertex.
    std::vector<QVector> all = a_tilde;
    all.insert(all.end(), b_tilde.begin(), b_tilde.end());
    all.push_back(QVector(rep.model.dim, Rat(0)));
    const UpperSet ub = upper_set(rep.model, all);
    LinearProgram lp;
    lp.system = ub.region.as_system();
    lp.objective = QVector(rep.model.dim, Rat(0));
    for (std::size_t i = 0; i < rep.m; ++i) lp.objective = add(lp.objective, rep.f.row(i));
    lp.sense = Sense::Minimize;
    const LPOutcome out = solve(lp);
    if (out.status != LPStatus::Optimal)
        throw InvariantViolation("directed model has no dominating element");

    NormalizedPair pair;
    pair.dominator = *out.primal;
    for (const auto& bt : b_tilde) pair.a.push_back(sub(pair.dominator, bt));
    for (const auto& at : a_tilde) pair.b.push_back(sub(pair.dominator, at));
    return pair;
}

std::string positivity_name(PositivityVerdict v) {
    switch (v) {
    case PositivityVerdict::Zero: return "zero";
    case PositivityVerdict::StrictlyPositive: return "strictly_positive";
    case PositivityVerdict::Nonnegative: return "nonnegative";
    case PositivityVerdict::NotNonnegative: return "not_nonnegative";
    }
    return "?";
}

PositivityVerdict positivity_oracle(const FunctionalRepresentation& rep,
                                    const std::vector<QVector>& a,
                                    const std::vector<QVector>& b) {
    if (a.empty() || b.empty()) throw ArgumentError("positivity oracle with an empty set");
    for (const auto& v : a)
        if (!rep.model.cone.contains(v)) throw ArgumentError("A is not contained in the cone");
    for (const auto& v : b)
        if (!rep.model.cone.contains(v)) throw ArgumentError("B is not contained in the cone");

    // Way 1: coordinatewise sign of the cover element.
    const QVector y = riesz_element(rep, a, b);
    bool any_neg = false, any_pos = false;
    for (const auto& c : y) {
        if (c < 0) any_neg = true;
        if (c > 0) any_pos = true;
    }
    PositivityVerdict cover_verdict =
        any_neg ? PositivityVerdict::NotNonnegative
                : (any_pos ? PositivityVerdict::StrictlyPositive : PositivityVerdict::Zero);

    // Way 2: intrinsic comparison of the upper sets.
    const UpperSet ua = upper_set(rep.model, a);
    const UpperSet ub = upper_set(rep.model, b);
    const PolyRelationReport rel = polyhedron_relation(ua.region, ub.region);
    PositivityVerdict intrinsic_verdict;
    switch (rel.relation) {
    case PolyRelation::Equal: intrinsic_verdict = PositivityVerdict::Zero; break;
    case PolyRelation::ProperSubset: intrinsic_verdict = PositivityVerdict::StrictlyPositive; break;
    default: intrinsic_verdict = PositivityVerdict::NotNonnegative; break;
    }

    if (cover_verdict != intrinsic_verdict)
        throw InvariantViolation("positivity routes disagree: cover says " +
                                 positivity_name(cover_verdict) + ", upper sets say " +
                                 positivity_name(intrinsic_verdict));
    return cover_verdict;
}

QVector sup_over_interval(const FunctionalRepresentation& rep, const QVector& y) {
    if (y.size() != rep.m) throw ArgumentError("cover element dimension mismatch");
    bool any_pos = false;
    for (const auto& c : y) {
        if (c < 0) throw ArgumentError("sup_over_interval needs y ≥ 0");
        if (c > 0) any_pos = true;
    }
    if (!any_pos) throw ArgumentError("sup_over_interval needs y ≠ 0");

    LinSystem sys;
    sys.vars = rep.model.dim;
    for (std::size_t i = 0; i < rep.m; ++i) {
        sys.rows.push_back({rep.f.row(i), Rel::GE, Rat(0)});
        sys.rows.push_back({negate(rep.f.row(i)), Rel::GE, -y[i]});
    }
    QVector s(rep.m);
    for (std::size_t j = 0; j < rep.m; ++j) {
        LinearProgram lp;
        lp.system = sys;
        lp.objective = rep.f.row(j);
        lp.sense = Sense::Maximize;
        const LPOutcome out = solve(lp);
        if (out.status != LPStatus::Optimal)
            throw InvariantViolation("bounded interval produced an unbounded coordinate");
        s[j] = *out.value;
    }
    return s;
}

} // namespace preriesz
