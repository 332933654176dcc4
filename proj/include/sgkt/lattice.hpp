#pragma once

#include "sgkt/int.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sgkt {

// 2-row integer lattice computations on column vectors (x, y), the
// coordinates of x + y*w in the basis {1, w}.
using Vec2 = std::array<Int, 2>;

// Column-style Hermite reduction of a 2 x n matrix with transform tracking:
// returns H = M * U with U unimodular, H[0][j] = 0 for j > 0 and
// H[1][j] = 0 for j > 1. Pivots are made nonnegative.
struct HermiteResult {
    std::vector<Vec2> h;              // n columns after reduction
    std::vector<std::vector<Int>> u;  // n x n transform, columns of U
    std::vector<size_t> pivot_rows;   // row served by pivot column k
};

HermiteResult hermite_columns(std::vector<Vec2> cols);

// One integral solution u of M u = target for the 2 x n column matrix M,
// or nullopt when none exists.
std::optional<std::vector<Int>> solve_columns(const std::vector<Vec2>& cols, const Vec2& target);

// HNF basis of the span of the given columns, as (a, b, c) with the lattice
// Z*a + Z*(b + c*w), a > 0, c > 0, 0 <= b < a. Requires full rank 2.
struct Hnf2 {
    Int a, b, c;
};
Hnf2 hnf_basis(const std::vector<Vec2>& cols);

// Rank-1 variant for Z: gcd of the x-coordinates (all y must be zero).
Int hnf_basis_rank1(const std::vector<Vec2>& cols);

}  // namespace sgkt
