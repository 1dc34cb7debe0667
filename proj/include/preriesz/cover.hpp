#ifndef PRERIESZ_COVER_HPP
#define PRERIESZ_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "preriesz/model.hpp"

namespace preriesz {

// Canonical vector lattice cover of a model: Y = ℝᵐ with coordinatewise
// order, embedding x ↦ F x where the rows of F are the extreme rays of the
// dual cone.  Bipositivity is structural (the rows are exactly the facet
// normals); majorization and order density are verified, not assumed.
struct FunctionalRepresentation {
    PreRieszModel model;
    QMatrix f; // m × n
    std::size_t m = 0;

    QVector embed(const QVector& x) const { return f.apply(x); }
};

FunctionalRepresentation functional_representation(const PreRieszModel& model,
                                                   const Caps& caps = Caps{});

struct CoverVerification {
    bool bipositive = false;
    bool majorizing = false;
    bool order_dense = false;
    // Majorization evidence: d with F d ≥ 1 componentwise.
    std::optional<QVector> majorant;
    // First failing order-density probe, if any: coordinates (j, k), the
    // probed unit direction sign, and the achieved minimum.
    std::string failure;

    bool all() const { return bipositive && majorizing && order_dense; }
};

// Order density reduces to 2m² LPs: the gap γ_j(y) = min{(Fd)_j : Fd ≥ y} − y_j
// is nonnegative, positively homogeneous and subadditive in y, so it vanishes
// for every y iff it vanishes at y = ±e_k for all k.
CoverVerification verify_cover(const FunctionalRepresentation& rep);

// ⋁ i(A) − ⋁ i(B), coordinatewise in the cover.
QVector riesz_element(const FunctionalRepresentation& rep, const std::vector<QVector>& a,
                      const std::vector<QVector>& b);

// Rewrites (Ã, B̃) as sets inside X₊ without changing the represented cover
// element: picks x ∈ X₊ dominating Ã ∪ B̃ ∪ {0} and returns (x − B̃, x − Ã).
struct NormalizedPair {
    std::vector<QVector> a, b;
    QVector dominator;
};

NormalizedPair normalize_representation(const FunctionalRepresentation& rep,
                                        const std::vector<QVector>& a_tilde,
                                        const std::vector<QVector>& b_tilde);

enum class PositivityVerdict { Zero, StrictlyPositive, Nonnegative, NotNonnegative };

std::string positivity_name(PositivityVerdict v);

// Sign of ⋁i(A) − ⋁i(B) for A, B ⊆ X₊, computed two independent ways — in
// the cover coordinatewise and intrinsically through upper-set inclusion —
// with the agreement asserted.
PositivityVerdict positivity_oracle(const FunctionalRepresentation& rep,
                                    const std::vector<QVector>& a, const std::vector<QVector>& b);

// s with s_j = max{(Fx)_j : 0 ≤ F x ≤ y}; equals y for every y iff the model
// is pervasive (used as a decider cross-check).
QVector sup_over_interval(const FunctionalRepresentation& rep, const QVector& y);

} // namespace preriesz

#endif
