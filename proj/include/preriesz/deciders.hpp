#ifndef PRERIESZ_DECIDERS_HPP
#define PRERIESZ_DECIDERS_HPP

#include <optional>
#include <vector>

#include "preriesz/cover.hpp"
#include "preriesz/decision.hpp"
#include "preriesz/model.hpp"

namespace preriesz {

using IndexSet = std::vector<std::size_t>; // sorted, unique

// Supports of the embedded extreme rays and their closures.  F maps the cone
// into the nonnegative orthant, so supp(F b) for b in the cone is exactly a
// union of ray supports: the family finitizes every "for all positive b"
// quantifier the deciders face.
struct SupportFamily {
    std::vector<IndexSet> ray_supports;        // deduplicated, sorted
    std::vector<QVector> ray_realizers;        // one cone element per support
    std::vector<IndexSet> union_closure;       // nonempty unions, sorted
    std::vector<QVector> union_realizers;      // positive combination per union
    std::vector<IndexSet> intersection_closure_of_unions;
};

SupportFamily support_family(const FunctionalRepresentation& rep, const Caps& caps = Caps{});

// {F x ≥ 0, (F x)_j = 0 for j outside the support, Σ_{j in support} (Fx)_j ≥ 1}.
LinSystem support_system(const QMatrix& f, const IndexSet& positive_support);

DecisionReport decide_pervasive(const FunctionalRepresentation& rep, const Caps& caps = Caps{});
DecisionReport decide_weakly_pervasive(const FunctionalRepresentation& rep,
                                       const Caps& caps = Caps{});
DecisionReport decide_fordable(const FunctionalRepresentation& rep);
DecisionReport decide_property_p(const FunctionalRepresentation& rep, const Caps& caps = Caps{});

struct WitnessOrFailure {
    std::optional<QVector> x;                    // witness element when found
    std::optional<FarkasCertificate> failure;    // otherwise the infeasibility proof

    bool found() const { return x.has_value(); }
};

// For b with b ≰ 0: finds x with 0 < F x ≤ (F b)⁺ — equivalently, 0 < x ≤ u
// for every upper bound u of {b, 0} — or proves none exists (which certifies
// non-pervasiveness).
WitnessOrFailure thm7_witness_check(const FunctionalRepresentation& rep, const QVector& b);

// For A, B ⊆ X₊ with strictly positive oracle verdict: finds x > 0 with
// Aᵘ ⊆ (x+B)ᵘ, i.e. 0 < F x ≤ ⋁FA − ⋁FB, or proves none exists.
WitnessOrFailure theorem5_check(const FunctionalRepresentation& rep,
                                const std::vector<QVector>& a, const std::vector<QVector>& b);

enum class Lemma9Kind { Witness, Failure, NotApplicable };

struct Lemma9Result {
    Lemma9Kind kind = Lemma9Kind::NotApplicable;
    std::optional<QVector> x;
    std::optional<FarkasCertificate> failure;
};

// For b1, b2 > 0: not-applicable when i(b1) ∧ i(b2) = 0 (disjoint pair),
// otherwise a witness 0 < x ≤ b1, b2 or the infeasibility certificate.
Lemma9Result lemma9_witness_check(const FunctionalRepresentation& rep, const QVector& b1,
                                  const QVector& b2);

// Provenance helper: the ambient row (if any) whose evaluation functional is
// the given cover coordinate, up to positive scaling.
std::optional<std::size_t> ambient_row_of_functional(const FunctionalRepresentation& rep,
                                                     std::size_t coordinate);

} // namespace preriesz

#endif
