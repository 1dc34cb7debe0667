#ifndef PRERIESZ_SIGNCELLS_HPP
#define PRERIESZ_SIGNCELLS_HPP

#include <string>
#include <vector>

#include "preriesz/cone.hpp"
#include "preriesz/rational.hpp"

namespace preriesz {

struct SignCell {
    std::string pattern; // one of '+','0','-' per row of F
    QVector witness;     // a point realizing the pattern with strict signs
};

// Realizable sign patterns of b ↦ F b over b ∈ ℝⁿ.  Strict signs are
// enforced through the homogeneous normalization ⟨f_j,b⟩ ≥ 1 (the constraint
// set is scale invariant, so this loses nothing).  Recursive sign branching
// with LP pruning; output sorted by pattern, '+' < '0' < '-'.
std::vector<SignCell> sign_cells(const QMatrix& f, const Caps& caps = Caps{});

} // namespace preriesz

#endif
