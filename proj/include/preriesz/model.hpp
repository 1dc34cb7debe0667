#ifndef PRERIESZ_MODEL_HPP
#define PRERIESZ_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "preriesz/cone.hpp"
#include "preriesz/decision.hpp"
#include "preriesz/polyhedron.hpp"
#include "preriesz/rational.hpp"

namespace preriesz {

// A subspace-induced model remembers where it came from: D ⊆ ℝ^ambient with
// coordinatewise order, presented by a basis.  evaluation.at(i, j) is the
// i-th ambient coordinate of the j-th basis vector, so a basis-coordinate
// vector c describes the ambient element evaluation · c.
struct SubspaceProvenance {
    std::size_t ambient = 0;
    QMatrix evaluation;                         // ambient × dim
    std::vector<std::string> coordinate_labels; // optional, one per ambient row
};

// Finite-dimensional ordered vector space (ℝⁿ, K) with K pointed and
// generating; Archimedean because K is closed, hence a pre-Riesz space.
struct PreRieszModel {
    std::size_t dim = 0;
    Cone cone;
    std::string name;
    std::optional<SubspaceProvenance> provenance;
};

struct SubspaceSpec {
    std::size_t ambient = 0;
    std::vector<QVector> basis; // each of length ambient
};

// Exactly one of the three descriptions must be present.
struct ModelSpec {
    std::size_t dimension = 0;
    std::optional<std::vector<QVector>> cone_rays;
    std::optional<std::vector<QVector>> cone_inequalities;
    std::optional<SubspaceSpec> subspace;
    std::string name;
};

// Raised when the described cone is not pointed or not generating; carries
// the offending direction.
class ModelRejected : public StructuralError {
public:
    ModelRejected(Property failed, QVector witness, const std::string& what)
        : StructuralError(what), failed_property(failed), witness(std::move(witness)) {}

    Property failed_property;
    QVector witness;
};

PreRieszModel build_model(const ModelSpec& spec, const Caps& caps = Caps{});

// Aᵘ as a polyhedron: one inequality ⟨f,x⟩ ≥ ⟨f,a⟩ per cone normal f and
// element a, deduplicated.
struct UpperSet {
    std::vector<QVector> base;
    Polyhedron region;
};

UpperSet upper_set(const PreRieszModel& model, const std::vector<QVector>& elements);

enum class Comparison { Less, Equal, Greater, Incomparable };

Comparison compare(const PreRieszModel& model, const QVector& x, const QVector& y);

// F x for the canonical functional matrix (rows = cone normals).
QMatrix functional_matrix(const PreRieszModel& model);

struct DisjointnessReport {
    bool disjoint = false;
    std::vector<std::size_t> support_x, support_y; // cover-side supports
    PolyRelationReport upper_sets;                 // the intrinsic route
};

// Intrinsic definition ({x+y,−x−y}ᵘ = {x−y,−x+y}ᵘ) cross-checked against
// disjoint cover supports; the routes agree for every valid model, so a
// mismatch raises InvariantViolation rather than returning anything.
DisjointnessReport disjoint(const PreRieszModel& model, const QVector& x, const QVector& y);

// RDP ⟺ the cone is simplicial.  A negative verdict additionally searches
// (seeded, deterministic) for a concrete interpolation failure
// x1, x2 ≤ x3, x4 with empty order interval, certified by Farkas multipliers.
DecisionReport decide_rdp(const PreRieszModel& model, std::size_t search_budget = 200);

} // namespace preriesz

#endif
