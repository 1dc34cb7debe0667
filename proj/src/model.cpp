#include "preriesz/model.hpp"

#include <algorithm>
#include <chrono>

#include "preriesz/errors.hpp"
#include "preriesz/linalg.hpp"
#include "preriesz/rng.hpp"

namespace preriesz {

namespace {

int description_count(const ModelSpec& spec) {
    return int(spec.cone_rays.has_value()) + int(spec.cone_inequalities.has_value()) +
           int(spec.subspace.has_value());
}

} // namespace

PreRieszModel build_model(const ModelSpec& spec, const Caps& caps) {
    if (description_count(spec) != 1)
        throw ArgumentError("model needs exactly one of cone_rays, cone_inequalities, subspace");
    PreRieszModel model;
    model.name = spec.name;

    if (spec.subspace) {
        const auto& sub = *spec.subspace;
        if (sub.basis.empty()) throw ArgumentError("subspace basis is empty");
        for (const auto& v : sub.basis)
            if (v.size() != sub.ambient)
                throw ArgumentError("subspace basis vector has wrong ambient dimension");
        if (spec.dimension != sub.basis.size())
            throw ArgumentError("dimension does not match subspace basis size");
        QMatrix evaluation(sub.ambient, sub.basis.size());
        for (std::size_t j = 0; j < sub.basis.size(); ++j)
            for (std::size_t i = 0; i < sub.ambient; ++i)
                evaluation.at(i, j) = sub.basis[j][i];
        if (rank(evaluation) != sub.basis.size())
            throw StructuralError("subspace basis is linearly dependent on the ambient grid");
        std::vector<QVector> rows;
        for (std::size_t i = 0; i < sub.ambient; ++i) {
            QVector row = evaluation.row(i);
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
        model.dim = sub.basis.size();
        model.cone = Cone::from_inequalities(std::move(rows), model.dim, caps);
        model.provenance = SubspaceProvenance{sub.ambient, std::move(evaluation), {}};
    } else if (spec.cone_rays) {
        model.dim = spec.dimension;
        model.cone = Cone::from_rays(*spec.cone_rays, model.dim, caps);
    } else {
        model.dim = spec.dimension;
        model.cone = Cone::from_inequalities(*spec.cone_inequalities, model.dim, caps);
    }

    if (!model.cone.pointed())
        throw ModelRejected(Property::Pointed, *model.cone.line_witness(),
                            "cone is not pointed: contains the line through " +
                                vec_str(*model.cone.line_witness()));
    if (!model.cone.generating())
        throw ModelRejected(Property::Directed, *model.cone.hyperplane_witness(),
                            "cone is not generating: all rays satisfy ⟨" +
                                vec_str(*model.cone.hyperplane_witness()) + ", x⟩ = 0");
    return model;
}

UpperSet upper_set(const PreRieszModel& model, const std::vector<QVector>& elements) {
    if (elements.empty()) throw ArgumentError("upper set of the empty set");
    std::vector<Inequality> rows;
    for (const auto& f : model.cone.normals()) {
        for (const auto& a : elements) {
            if (a.size() != model.dim) throw ArgumentError("element dimension mismatch");
            rows.push_back({f, dot(f, a)});
        }
    }
    return UpperSet{elements, Polyhedron(model.dim, std::move(rows))};
}

Comparison compare(const PreRieszModel& model, const QVector& x, const QVector& y) {
    if (x.size() != model.dim || y.size() != model.dim)
        throw ArgumentError("compare: dimension mismatch");
    const QVector d = sub(y, x);
    if (is_zero(d)) return Comparison::Equal;
    const bool up = model.cone.contains(d);
    const bool down = model.cone.contains(negate(d));
    if (up && down) throw InvariantViolation("pointed cone contains a line");
    if (up) return Comparison::Less;
    if (down) return Comparison::Greater;
    return Comparison::Incomparable;
}

QMatrix functional_matrix(const PreRieszModel& model) {
    return QMatrix::from_rows(model.cone.normals());
}

namespace {

std::vector<std::size_t> support(const QVector& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

} // namespace

DisjointnessReport disjoint(const PreRieszModel& model, const QVector& x, const QVector& y) {
    if (x.size() != model.dim || y.size() != model.dim)
        throw ArgumentError("disjoint: dimension mismatch");
    DisjointnessReport rep;
    const QMatrix f = functional_matrix(model);
    rep.support_x = support(f.apply(x));
    rep.support_y = support(f.apply(y));
    std::vector<std::size_t> common;
    std::set_intersection(rep.support_x.begin(), rep.support_x.end(), rep.support_y.begin(),
                          rep.support_y.end(), std::back_inserter(common));
    const bool cover_disjoint = common.empty();

    const UpperSet u1 = upper_set(model, {add(x, y), negate(add(x, y))});
    const UpperSet u2 = upper_set(model, {sub(x, y), sub(y, x)});
    rep.upper_sets = polyhedron_relation(u1.region, u2.region);
    const bool intrinsic = rep.upper_sets.relation == PolyRelation::Equal;

    if (intrinsic != cover_disjoint)
        throw InvariantViolation("disjointness routes disagree on " + vec_str(x) + " vs " +
                                 vec_str(y));
    rep.disjoint = intrinsic;
    return rep;
}

namespace {

QVector random_vector(Rng& rng, std::size_t n, long bound) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(rng.int_in(-bound, bound));
    return v;
}

// A random element of the dual cone: nonnegative integer combination of the
// normals.  Bounded below on every upper set.
QVector random_dual_objective(Rng& rng, const PreRieszModel& model) {
    QVector c(model.dim, Rat(0));
    for (const auto& f : model.cone.normals()) {
        const long w = rng.int_in(0, 5);
        if (w) c = add(c, scale(Rat(w), f));
    }
    return c;
}

} // namespace

DecisionReport decide_rdp(const PreRieszModel& model, std::size_t search_budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t lp0 = solve_count();
    DecisionReport rep;
    rep.property = Property::Rdp;

    RdpWitness w;
    w.ray_count = model.cone.rays().size();
    w.dim = model.dim;
    const bool simplicial = model.cone.rays().size() == model.dim &&
                            linearly_independent(model.cone.rays());
    rep.verdict = simplicial;

    if (!simplicial) {
        // Hunt for a concrete interpolation failure: pick x1 = 0 and a random
        // x2, take two vertices of the common upper set as x3, x4, and test
        // the order interval in between for emptiness.
        Rng rng(0x52445021ULL);
        const QMatrix f = functional_matrix(model);
        for (std::size_t attempt = 0; attempt < search_budget && !w.quadruple_found; ++attempt) {
            const QVector x2 = random_vector(rng, model.dim, 3);
            if (is_zero(x2)) continue;
            const UpperSet ub = upper_set(model, {QVector(model.dim, Rat(0)), x2});
            LinearProgram lp;
            lp.system = ub.region.as_system();
            lp.sense = Sense::Minimize;
            lp.objective = random_dual_objective(rng, model);
            const LPOutcome o1 = solve(lp);
            lp.objective = random_dual_objective(rng, model);
            const LPOutcome o2 = solve(lp);
            if (o1.status != LPStatus::Optimal || o2.status != LPStatus::Optimal) continue;
            const QVector x3 = *o1.primal;
            const QVector x4 = *o2.primal;
            if (x3 == x4) continue;

            LinSystem interval;
            interval.vars = model.dim;
            auto bound = [&](const QVector& low_high, bool lower) {
                for (std::size_t j = 0; j < f.rows(); ++j) {
                    const QVector row = f.row(j);
                    const Rat rhs = dot(row, low_high);
                    if (lower) interval.rows.push_back({row, Rel::GE, rhs});
                    else interval.rows.push_back({negate(row), Rel::GE, -rhs});
                }
            };
            bound(QVector(model.dim, Rat(0)), true);
            bound(x2, true);
            bound(x3, false);
            bound(x4, false);
            const LPOutcome probe = find_feasible(interval);
            if (probe.status == LPStatus::Infeasible) {
                w.quadruple_found = true;
                w.quadruple = {QVector(model.dim, Rat(0)), x2, x3, x4};
                w.interpolation_infeasible = FarkasCertificate{interval, *probe.farkas};
            }
        }
    }
    rep.witness = w;
    rep.stats.lp_count = solve_count() - lp0;
    rep.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return rep;
}

} // namespace preriesz
