#ifndef PRERIESZ_LINALG_HPP
#define PRERIESZ_LINALG_HPP

#include <optional>
#include <vector>

#include "preriesz/rational.hpp"

namespace preriesz {

std::size_t rank(const QMatrix& m);

// Basis of {x : M x = 0}, one vector per free column, in column order, each
// gcd-reduced with first nonzero entry positive.  Deterministic.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Unique solution of M x = b when it exists and is unique; nullopt if the
// system is inconsistent or underdetermined.
std::optional<QVector> solve_unique(const QMatrix& m, const QVector& b);

// Some solution of M x = b (free variables set to zero); nullopt if
// inconsistent.
std::optional<QVector> solve_any(const QMatrix& m, const QVector& b);

bool linearly_independent(const std::vector<QVector>& vectors);

} // namespace preriesz

#endif
