#ifndef PRERIESZ_POLYHEDRON_HPP
#define PRERIESZ_POLYHEDRON_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "preriesz/lp.hpp"
#include "preriesz/rational.hpp"

namespace preriesz {

struct Inequality {
    QVector normal;
    Rat offset; // ⟨normal, x⟩ ≥ offset

    bool operator==(const Inequality&) const = default;
};

struct EmptinessInfo {
    bool empty = false;
    QVector certificate; // Farkas multipliers if empty, else a feasible point
};

// Closed polyhedron {x : ⟨normal_i, x⟩ ≥ offset_i}.  The inequality list is
// canonical (deduplicated, lexicographically sorted) so equal lists mean the
// construction produced identical descriptions.  Immutable apart from the
// lazily computed emptiness certificate.
class Polyhedron {
public:
    Polyhedron(std::size_t ambient_dim, std::vector<Inequality> inequalities);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }

    bool contains(const QVector& point) const;
    Polyhedron translated(const QVector& shift) const;

    const EmptinessInfo& emptiness() const;
    bool is_empty() const { return emptiness().empty; }

    // Inequalities merged per distinct normal (largest offset wins).  Same
    // point set, fewer rows; used to keep the relation LPs small.
    std::vector<Inequality> merged_inequalities() const;

    LinSystem as_system() const;

    bool operator==(const Polyhedron& other) const {
        return ambient_ == other.ambient_ && ineqs_ == other.ineqs_;
    }

private:
    struct LazyEmptiness {
        std::once_flag once;
        std::optional<EmptinessInfo> info;
    };

    std::size_t ambient_;
    std::vector<Inequality> ineqs_;
    // Shared between copies; the cached answer is a pure function of ineqs_.
    std::shared_ptr<LazyEmptiness> lazy_ = std::make_shared<LazyEmptiness>();
};

enum class PolyRelation { Equal, ProperSubset, ProperSuperset, Incomparable };

struct PolyRelationReport {
    PolyRelation relation = PolyRelation::Equal;
    // Populated when the corresponding inclusion fails.
    std::optional<QVector> in_p_not_q; // witnesses P ⊄ Q
    std::optional<QVector> in_q_not_p; // witnesses Q ⊄ P
};

// Decides P ⊆ Q by one LP per (merged) inequality of Q: minimize the
// inequality's normal over P and compare with its offset.  A failing
// inequality yields a point of P outside Q.
std::optional<QVector> inclusion_counterexample(const Polyhedron& p, const Polyhedron& q);

PolyRelationReport polyhedron_relation(const Polyhedron& p, const Polyhedron& q);

} // namespace preriesz

#endif
