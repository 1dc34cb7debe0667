#ifndef PRERIESZ_CONE_HPP
#define PRERIESZ_CONE_HPP

#include <optional>
#include <vector>

#include "preriesz/rational.hpp"

namespace preriesz {

// Enumeration limits.  The defaults are the desk-scale contract; zoo
// constructors and the harness pass wider values where a named model needs
// them.
struct Caps {
    std::size_t max_dim = 8;
    std::size_t max_rays = 14;
    std::size_t max_functionals = 16;
    std::size_t max_closure = 4096;
    std::size_t max_search_nodes = 200000;
    std::size_t max_subset_enumeration = 2000000;

    static Caps wide();
};

// Generators of the polar {f : ⟨row_i, f⟩ ≥ 0 for all i}: a basis of its
// lineality space plus the extreme rays of its pointed part.  Every returned
// vector is a primitive integer vector; output is deduplicated and sorted.
struct PolarGenerators {
    std::vector<QVector> lineality;
    std::vector<QVector> rays;
};

PolarGenerators polar_generators(const std::vector<QVector>& rows,
                                 std::size_t ambient_dim, const Caps& caps);

// Pointed generating polyhedral cone with synchronized generator and
// inequality representations.  Both lists are canonical: primitive integer
// vectors, deduplicated, lexicographically sorted, and minimal (the rays are
// the extreme rays, the normals the facet normals) whenever the relevant
// side is pointed.  Non-pointed or non-generating cones still carry
// consistent representations plus a witness, so model validation can reject
// them with evidence.
class Cone {
public:
    static Cone from_rays(std::vector<QVector> rays, std::size_t ambient_dim,
                          const Caps& caps = Caps{});
    static Cone from_inequalities(std::vector<QVector> normals, std::size_t ambient_dim,
                                  const Caps& caps = Caps{});

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<QVector>& rays() const { return rays_; }
    const std::vector<QVector>& normals() const { return normals_; }
    bool pointed() const { return pointed_; }
    bool generating() const { return generating_; }

    // A nonzero x with both x and -x in the cone (absent iff pointed).
    const std::optional<QVector>& line_witness() const { return line_witness_; }
    // A nonzero normal vanishing on every ray (absent iff generating).
    const std::optional<QVector>& hyperplane_witness() const { return hyperplane_witness_; }

    bool contains(const QVector& x) const;

    bool operator==(const Cone& other) const {
        return ambient_ == other.ambient_ && rays_ == other.rays_ && normals_ == other.normals_;
    }

private:
    friend Cone dual_cone(const Cone& k);

    std::size_t ambient_ = 0;
    std::vector<QVector> rays_;
    std::vector<QVector> normals_;
    bool pointed_ = true;
    bool generating_ = true;
    std::optional<QVector> line_witness_;
    std::optional<QVector> hyperplane_witness_;
};

// K* = {f : ⟨f,x⟩ ≥ 0 for all x in K}.  With canonical minimal
// representations this is a swap of the two lists, so the double dual is the
// identity by construction; tests confirm the geometry independently.
Cone dual_cone(const Cone& k);

// Minimal generating set.  Errors on non-pointed cones.
std::vector<QVector> extreme_rays(const Cone& k);

} // namespace preriesz

#endif
