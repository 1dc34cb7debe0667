#include "preriesz/deciders.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "preriesz/errors.hpp"

namespace preriesz {

namespace {

IndexSet support_of(const QVector& v) {
    IndexSet s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

bool subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet u;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

struct StatsScope {
    explicit StatsScope(DecisionReport& rep) : rep_(rep), lp0_(solve_count()),
        t0_(std::chrono::steady_clock::now()) {}
    ~StatsScope() {
        rep_.stats.lp_count = solve_count() - lp0_;
        rep_.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0_)
                                 .count();
    }
    DecisionReport& rep_;
    std::int64_t lp0_;
    std::chrono::steady_clock::time_point t0_;
};

} // namespace

SupportFamily support_family(const FunctionalRepresentation& rep, const Caps& caps) {
    SupportFamily fam;
    // Deduplicated ray supports with a realizing ray each.
    std::map<IndexSet, QVector> by_support;
    for (const auto& r : rep.model.cone.rays()) {
        IndexSet s = support_of(rep.embed(r));
        by_support.emplace(std::move(s), r);
    }
    for (auto& [s, r] : by_support) {
        fam.ray_supports.push_back(s);
        fam.ray_realizers.push_back(r);
    }

    // Union closure by fixpoint; realizer of T ∪ S is realizer(T) + ray(S),
    // which works because embedded cone elements never cancel coordinatewise.
    std::map<IndexSet, QVector> unions = by_support;
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::pair<IndexSet, QVector>> fresh;
        for (const auto& [t, x] : unions) {
            for (std::size_t i = 0; i < fam.ray_supports.size(); ++i) {
                IndexSet u = set_union(t, fam.ray_supports[i]);
                if (unions.count(u)) continue;
                fresh.emplace_back(std::move(u), add(x, fam.ray_realizers[i]));
            }
        }
        for (auto& [u, x] : fresh) {
            if (unions.emplace(std::move(u), std::move(x)).second) grew = true;
            if (unions.size() > caps.max_closure)
                throw CapacityError("union closure exceeds configured cap");
        }
    }
    for (auto& [t, x] : unions) {
        fam.union_closure.push_back(t);
        fam.union_realizers.push_back(x);
    }

    std::set<IndexSet> inters(fam.union_closure.begin(), fam.union_closure.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<IndexSet> fresh;
        for (const auto& a : inters)
            for (const auto& b : fam.union_closure) {
                IndexSet t = set_intersection(a, b);
                if (!inters.count(t)) fresh.push_back(std::move(t));
            }
        for (auto& t : fresh) {
            if (inters.insert(std::move(t)).second) grew = true;
            if (inters.size() > caps.max_closure)
                throw CapacityError("intersection closure exceeds configured cap");
        }
    }
    fam.intersection_closure_of_unions.assign(inters.begin(), inters.end());
    return fam;
}

LinSystem support_system(const QMatrix& f, const IndexSet& positive_support) {
    LinSystem sys;
    sys.vars = f.cols();
    QVector total(f.cols(), Rat(0));
    for (std::size_t j = 0; j < f.rows(); ++j) {
        const QVector row = f.row(j);
        if (std::binary_search(positive_support.begin(), positive_support.end(), j)) {
            sys.rows.push_back({row, Rel::GE, Rat(0)});
            total = add(total, row);
        } else {
            sys.rows.push_back({row, Rel::EQ, Rat(0)});
        }
    }
    sys.rows.push_back({total, Rel::GE, Rat(1)});
    return sys;
}

namespace {

// Positive-support search shared by decide_pervasive: depth-first over the
// rows, branching "in the support" before "excluded", pruning a subtree as
// soon as the forced-in set swallows some ray support (every completion is
// then realized by a scaled ray) and pruning unrealizable prefixes by LP.
struct PositiveSupportSearch {
    const FunctionalRepresentation& rep;
    const std::vector<IndexSet>& ray_supports;
    std::size_t budget;

    LinSystem prefix;
    IndexSet in;
    std::optional<PervasivenessWitness> bad;

    bool forced_good() const {
        for (const auto& s : ray_supports)
            if (subset(s, in)) return true;
        return false;
    }

    // Returns true when the subtree is fully explored without a bad support.
    bool explore(std::size_t depth) {
        if (budget-- == 0) throw CapacityError("pervasiveness search exceeded node budget");
        if (forced_good()) return true;
        std::optional<LPOutcome> probe;
        if (!in.empty()) {
            probe = find_feasible(prefix);
            if (probe->status == LPStatus::Infeasible) return true; // unrealizable prefix
        }
        if (depth == rep.m) {
            if (in.empty()) return true;
            // Realizable positive support with no ray support inside: the
            // element system is infeasible and this witnesses the failure.
            const LinSystem sys = support_system(rep.f, in);
            const LPOutcome xsys = find_feasible(sys);
            if (xsys.status != LPStatus::Infeasible)
                throw InvariantViolation("support avoided every ray support yet is feasible");
            PervasivenessWitness w;
            w.b = *probe->primal;
            w.positive_support = in;
            w.sign_system = SolutionCertificate{prefix, w.b};
            w.infeasibility = FarkasCertificate{sys, *xsys.farkas};
            bad = std::move(w);
            return false;
        }
        const QVector row = rep.f.row(depth);
        in.push_back(depth);
        prefix.rows.push_back({row, Rel::GE, Rat(1)});
        const bool ok_in = explore(depth + 1);
        prefix.rows.pop_back();
        in.pop_back();
        if (!ok_in) return false;
        prefix.rows.push_back({negate(row), Rel::GE, Rat(0)});
        const bool ok_out = explore(depth + 1);
        prefix.rows.pop_back();
        return ok_out;
    }
};

} // namespace

DecisionReport decide_pervasive(const FunctionalRepresentation& rep, const Caps& caps) {
    DecisionReport report;
    report.property = Property::Pervasive;
    StatsScope scope(report);

    std::map<IndexSet, QVector> by_support;
    for (const auto& r : rep.model.cone.rays())
        by_support.emplace(support_of(rep.embed(r)), r);
    std::vector<IndexSet> supports;
    for (const auto& [s, r] : by_support) supports.push_back(s);

    PositiveSupportSearch search{rep, supports, caps.max_search_nodes,
                                 LinSystem{rep.model.dim, {}}, {}, std::nullopt};
    report.verdict = search.explore(0);
    if (!report.verdict) report.witness = std::move(*search.bad);
    return report;
}

namespace {

std::optional<QVector> scaled_support_solution(const FunctionalRepresentation& rep,
                                               const IndexSet& support, const QVector& bound,
                                               FarkasCertificate* failure) {
    const LinSystem sys = support_system(rep.f, support);
    const LPOutcome out = find_feasible(sys);
    if (out.status == LPStatus::Infeasible) {
        if (failure) *failure = FarkasCertificate{sys, *out.farkas};
        return std::nullopt;
    }
    // Scale so F x fits under `bound`; strict positivity of the bound on the
    // support makes this possible.
    const QVector image = rep.embed(*out.primal);
    std::optional<Rat> lambda;
    for (std::size_t j : support) {
        if (image[j] <= 0) continue;
        const Rat r = bound[j] / image[j];
        if (!lambda || r < *lambda) lambda = r;
    }
    return scale(*lambda, *out.primal);
}

} // namespace

WitnessOrFailure thm7_witness_check(const FunctionalRepresentation& rep, const QVector& b) {
    const Comparison cmp = compare(rep.model, b, QVector(rep.model.dim, Rat(0)));
    if (cmp == Comparison::Less || cmp == Comparison::Equal)
        throw ArgumentError("thm7_witness_check requires b ≰ 0");
    const QVector image = rep.embed(b);
    QVector plus(rep.m, Rat(0));
    IndexSet support;
    for (std::size_t j = 0; j < rep.m; ++j) {
        if (image[j] > 0) {
            plus[j] = image[j];
            support.push_back(j);
        }
    }
    WitnessOrFailure res;
    FarkasCertificate failure;
    auto x = scaled_support_solution(rep, support, plus, &failure);
    if (x) res.x = std::move(*x);
    else res.failure = std::move(failure);
    return res;
}

WitnessOrFailure theorem5_check(const FunctionalRepresentation& rep,
                                const std::vector<QVector>& a, const std::vector<QVector>& b) {
    const PositivityVerdict verdict = positivity_oracle(rep, a, b);
    if (verdict != PositivityVerdict::StrictlyPositive)
        throw ArgumentError("theorem5_check requires a strictly positive pair; oracle said " +
                            positivity_name(verdict));
    const QVector g = riesz_element(rep, a, b);
    IndexSet support;
    for (std::size_t j = 0; j < rep.m; ++j)
        if (g[j] > 0) support.push_back(j);
    WitnessOrFailure res;
    FarkasCertificate failure;
    auto x = scaled_support_solution(rep, support, g, &failure);
    if (x) res.x = std::move(*x);
    else res.failure = std::move(failure);
    return res;
}

Lemma9Result lemma9_witness_check(const FunctionalRepresentation& rep, const QVector& b1,
                                  const QVector& b2) {
    const QVector zero(rep.model.dim, Rat(0));
    if (compare(rep.model, b1, zero) != Comparison::Greater)
        throw ArgumentError("lemma9_witness_check requires b1 > 0");
    if (compare(rep.model, b2, zero) != Comparison::Greater)
        throw ArgumentError("lemma9_witness_check requires b2 > 0");
    const QVector i1 = rep.embed(b1);
    const QVector i2 = rep.embed(b2);
    QVector meet(rep.m);
    for (std::size_t j = 0; j < rep.m; ++j) meet[j] = std::min(i1[j], i2[j]);

    Lemma9Result res;
    if (is_zero(meet)) {
        res.kind = Lemma9Kind::NotApplicable;
        return res;
    }
    IndexSet support;
    for (std::size_t j = 0; j < rep.m; ++j)
        if (meet[j] > 0) support.push_back(j);
    FarkasCertificate failure;
    auto x = scaled_support_solution(rep, support, meet, &failure);
    if (x) {
        res.kind = Lemma9Kind::Witness;
        res.x = std::move(*x);
    } else {
        res.kind = Lemma9Kind::Failure;
        res.failure = std::move(failure);
    }
    return res;
}

DecisionReport decide_weakly_pervasive(const FunctionalRepresentation& rep, const Caps& caps) {
    DecisionReport report;
    report.property = Property::WeaklyPervasive;
    StatsScope scope(report);

    // supp(i(b1) ∧ i(b2)) = supp(F b1) ∩ supp(F b2), and positive-cone
    // supports are unions of ray supports, so a failing pair of closure
    // members shrinks to a failing pair of ray supports.  Testing ray-support
    // pairs is therefore exhaustive.
    std::map<IndexSet, QVector> by_support;
    for (const auto& r : rep.model.cone.rays())
        by_support.emplace(support_of(rep.embed(r)), r);
    std::vector<IndexSet> supports;
    std::vector<QVector> realizers;
    for (const auto& [s, r] : by_support) {
        supports.push_back(s);
        realizers.push_back(r);
    }
    (void)caps;

    // Distinct intersections in canonical order, smallest witnesses first.
    std::map<IndexSet, std::pair<std::size_t, std::size_t>> tests;
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (std::size_t j = i; j < supports.size(); ++j) {
            IndexSet t = set_intersection(supports[i], supports[j]);
            if (t.empty()) continue;
            tests.emplace(std::move(t), std::make_pair(i, j));
        }

    report.verdict = true;
    for (const auto& [t, pair] : tests) {
        const bool good = std::any_of(supports.begin(), supports.end(),
                                      [&](const IndexSet& s) { return subset(s, t); });
        if (good) continue;
        const LinSystem sys = support_system(rep.f, t);
        const LPOutcome out = find_feasible(sys);
        if (out.status != LPStatus::Infeasible)
            throw InvariantViolation("meet support avoided every ray support yet is feasible");
        WeakPervasivenessWitness w;
        w.b1 = realizers[pair.first];
        w.b2 = realizers[pair.second];
        w.support1 = supports[pair.first];
        w.support2 = supports[pair.second];
        w.intersection = t;
        w.infeasibility = FarkasCertificate{sys, *out.farkas};
        report.verdict = false;
        report.witness = std::move(w);
        break;
    }
    return report;
}

DecisionReport decide_fordable(const FunctionalRepresentation& rep) {
    DecisionReport report;
    report.property = Property::Fordable;
    StatsScope scope(report);

    // Fordable iff every singleton {j} is the support of some embedded
    // element: disjoint complements in the cover depend only on supports,
    // realizable supports of arbitrary S ⊆ X are the unions of single-element
    // supports, and a union-closed family contains every subset iff it
    // contains every singleton.  One LP per coordinate; the mirrored system
    // (f_j s ≤ -1) is infeasible exactly when this one is, by s ↦ -s.
    FordabilityRealizers realizers;
    FordabilityWitness witness;
    for (std::size_t j = 0; j < rep.m; ++j) {
        LinSystem sys;
        sys.vars = rep.model.dim;
        for (std::size_t k = 0; k < rep.m; ++k)
            sys.rows.push_back({rep.f.row(k), k == j ? Rel::GE : Rel::EQ, k == j ? Rat(1) : Rat(0)});
        const LPOutcome out = find_feasible(sys);
        if (out.status == LPStatus::Optimal) {
            realizers.per_coordinate.push_back(*out.primal);
        } else {
            if (witness.failing_coordinates.empty()) {
                witness.coordinate = j;
                witness.ambient_row = ambient_row_of_functional(rep, j);
                witness.infeasibility = FarkasCertificate{sys, *out.farkas};
            }
            witness.failing_coordinates.push_back(j);
        }
    }
    report.verdict = witness.failing_coordinates.empty();
    if (report.verdict) report.witness = std::move(realizers);
    else report.witness = std::move(witness);
    return report;
}

DecisionReport decide_property_p(const FunctionalRepresentation& rep, const Caps& caps) {
    DecisionReport report;
    report.property = Property::PropertyP;
    StatsScope scope(report);

    std::map<IndexSet, QVector> by_support;
    for (const auto& r : rep.model.cone.rays())
        by_support.emplace(support_of(rep.embed(r)), r);
    std::vector<IndexSet> supports;
    std::vector<QVector> realizers;
    for (const auto& [s, r] : by_support) {
        supports.push_back(s);
        realizers.push_back(r);
    }

    // Intersection closure of the ray supports, each member remembering a
    // generating tuple.  Intersections of closure-of-union members reduce to
    // these: any point of ∩ T_l picks one generator support per T_l, and the
    // corresponding intersection sits inside ∩ T_l.
    std::map<IndexSet, std::vector<std::size_t>> closure;
    for (std::size_t i = 0; i < supports.size(); ++i)
        closure.emplace(supports[i], std::vector<std::size_t>{i});
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::pair<IndexSet, std::vector<std::size_t>>> fresh;
        for (const auto& [t, tuple] : closure) {
            for (std::size_t i = 0; i < supports.size(); ++i) {
                IndexSet u = set_intersection(t, supports[i]);
                if (u.empty() || closure.count(u)) continue;
                auto extended = tuple;
                extended.push_back(i);
                fresh.emplace_back(std::move(u), std::move(extended));
            }
        }
        for (auto& [u, tuple] : fresh) {
            if (closure.emplace(std::move(u), std::move(tuple)).second) grew = true;
            if (closure.size() > caps.max_closure)
                throw CapacityError("meet closure exceeds configured cap");
        }
    }

    report.verdict = true;
    for (const auto& [t, tuple] : closure) {
        const bool good = std::any_of(supports.begin(), supports.end(),
                                      [&](const IndexSet& s) { return subset(s, t); });
        if (good) continue;
        const LinSystem sys = support_system(rep.f, t);
        const LPOutcome out = find_feasible(sys);
        if (out.status != LPStatus::Infeasible)
            throw InvariantViolation("meet support avoided every ray support yet is feasible");
        MeetTupleWitness w;
        for (std::size_t i : tuple) {
            w.realizers.push_back(realizers[i]);
            w.supports.push_back(supports[i]);
        }
        w.intersection = t;
        w.infeasibility = FarkasCertificate{sys, *out.farkas};
        report.verdict = false;
        report.witness = std::move(w);
        break;
    }
    return report;
}

std::optional<std::size_t> ambient_row_of_functional(const FunctionalRepresentation& rep,
                                                     std::size_t coordinate) {
    if (!rep.model.provenance) return std::nullopt;
    const auto& prov = *rep.model.provenance;
    const QVector f = rep.f.row(coordinate);
    for (std::size_t i = 0; i < prov.ambient; ++i) {
        const QVector row = prov.evaluation.row(i);
        if (is_zero(row)) continue;
        if (primitive(row) == f) return i;
    }
    return std::nullopt;
}

} // namespace preriesz
