#pragma once

// Small exact linear algebra over Q used by the polyhedral code.

#include <optional>
#include <vector>

#include "ssv/arith.hpp"

namespace ssv {

struct RowEchelon {
  std::vector<RatVector> rows;        // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;    // pivot column of each row
};

RowEchelon reduced_row_echelon(const std::vector<RatVector>& rows,
                               std::size_t cols);

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

/// Dimension of the affine hull of a nonempty point set.
std::size_t affine_rank(const std::vector<RatVector>& points);

/// Integer basis (as primitive row vectors) of the orthogonal complement
/// {x : <x, r> = 0 for every row r}.
std::vector<IntVector> orthogonal_complement(const std::vector<RatVector>& rows,
                                             std::size_t cols);

/// Affine hull data of a point set: a base point, pivot coordinates onto which
/// projection is injective on the hull, and integral equations
/// (normal, offset) with normal . x = offset cutting out the hull.
struct AffineHull {
  RatVector base;
  std::vector<std::size_t> pivot_coords;
  std::vector<std::pair<IntVector, Integer>> equations;
  std::size_t dimension() const { return pivot_coords.size(); }
};

AffineHull affine_hull(const std::vector<RatVector>& points);

/// Restricts a point to the given coordinates.
RatVector project(const RatVector& point, const std::vector<std::size_t>& coords);

/// Inverse of a square matrix given by rows. Throws DimensionError when
/// the matrix is singular.
std::vector<RatVector> inverse(const std::vector<RatVector>& a);

/// Solves x * A = b for a row vector x over Q, if a solution exists.
std::optional<RatVector> solve_left(const std::vector<RatVector>& a_rows,
                                    const RatVector& b);

}  // namespace ssv
