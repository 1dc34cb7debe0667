#ifndef PRERIESZ_ZOO_HPP
#define PRERIESZ_ZOO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preriesz/model.hpp"

namespace preriesz {

// Parameter bag for addressing zoo constructors by name (CLI surface).
struct ZooParams {
    std::optional<long> n;
    std::optional<long> big_n; // N
    std::optional<long> big_m; // M
    std::optional<long> d;
    std::optional<long> ray_count;
    std::optional<long> coeff_bound;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<Rat>> grid;
};

PreRieszModel make_zoo(const std::string& name, const ZooParams& params);

// (ℝⁿ, ℝⁿ₊).
PreRieszModel make_simplicial(std::size_t n);

// (ℝ³, cone{(±1,0,1), (0,±1,1)}).
PreRieszModel make_four_ray();

// Span of {e_n, u_{n,k} : n,k ≤ N} evaluated on a rational grid in [0, ∞[,
// coordinatewise order.  e_n is the indicator of [n-1, n[; u_{n,k} ramps as
// n·t on [0, 1/n] and has an isolated value 1/k at t = n + 1/k.
PreRieszModel make_example14(std::size_t big_n,
                             std::optional<std::vector<Rat>> grid = std::nullopt);

// Span of {1, t, ..., t^d} evaluated on a rational grid inside [0, 1],
// coordinatewise order.
PreRieszModel make_example13(std::size_t d,
                             std::optional<std::vector<Rat>> grid = std::nullopt);

// {x ∈ ℝ^{N+M+1} : Σ_{k=1..N} x_{-k}/2^k = x_M} with coordinatewise order,
// coordinates indexed -N..M; the last coordinate stands in for the limit.
PreRieszModel make_example10(std::size_t big_n, std::size_t big_m);

// Deterministic from the seed: integer rays in [-coeff_bound, coeff_bound]ⁿ,
// resampled until pointed and generating.
PreRieszModel make_random(std::uint64_t seed, std::size_t n, std::size_t ray_count,
                          long coeff_bound);

std::vector<Rat> example14_default_grid(std::size_t big_n);
std::vector<Rat> example13_default_grid(std::size_t d);

// Basis-coordinate unit vectors of the example-14 model (1-based n, k ≤ N).
QVector example14_basis_e(std::size_t big_n, std::size_t n);
QVector example14_basis_u(std::size_t big_n, std::size_t n, std::size_t k);

// Exact evaluation of a basis-coordinate element at an ambient grid point.
Rat evaluate_at(const PreRieszModel& model, const QVector& element, const Rat& point);

// Index of a grid point inside the provenance labels.
std::optional<std::size_t> ambient_index_of(const PreRieszModel& model, const Rat& point);

} // namespace preriesz

#endif
