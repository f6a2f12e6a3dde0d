#include "ssv/rational_linalg.hpp"

#include "ssv/errors.hpp"

namespace ssv {

RowEchelon reduced_row_echelon(const std::vector<RatVector>& input,
                               std::size_t cols) {
  std::vector<RatVector> a = input;
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  return reduced_row_echelon(rows, cols).rows.size();
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<RatVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rank(r, cols);
}

std::size_t affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) throw DimensionError("affine rank of empty point set");
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[0].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs, points[0].size());
}

std::vector<IntVector> orthogonal_complement(const std::vector<RatVector>& rows,
                                             std::size_t cols) {
  RowEchelon e = reduced_row_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols);
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive_integer_direction(x));
  }
  return basis;
}

RatVector project(const RatVector& point, const std::vector<std::size_t>& coords) {
  RatVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(point[c]);
  return out;
}

AffineHull affine_hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw DimensionError("affine hull of empty point set");
  const std::size_t d = points[0].size();
  AffineHull h;
  h.base = points[0];
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw DimensionError("points of mixed dimension");
    RatVector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(v));
  }
  RowEchelon e = reduced_row_echelon(diffs, d);
  h.pivot_coords = e.pivots;
  for (auto& n : orthogonal_complement(diffs, d)) {
    Rational off = dot(n, h.base);
    // normals are integral; offsets become integral after scaling
    Integer scale = off.get_den();
    IntVector normal = n;
    for (auto& x : normal) x *= scale;
    h.equations.emplace_back(std::move(normal), Integer(off.get_num()));
  }
  return h;
}

std::optional<RatVector> solve_left(const std::vector<RatVector>& a_rows,
                                    const RatVector& b) {
  // x * A = b  <=>  A^T x^T = b^T. Eliminate on the augmented transpose.
  const std::size_t m = a_rows.size();
  const std::size_t n = b.size();
  std::vector<RatVector> aug(n, RatVector(m + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) aug[j][i] = a_rows[i][j];
  for (std::size_t j = 0; j < n; ++j) aug[j][m] = b[j];
  RowEchelon e = reduced_row_echelon(aug, m + 1);
  RatVector x(m);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m];
  }
  return x;
}

std::vector<RatVector> inverse(const std::vector<RatVector>& a) {
  const std::size_t n = a.size();
  std::vector<RatVector> aug(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  RowEchelon e = reduced_row_echelon(aug, 2 * n);
  if (e.rows.size() < n || (n > 0 && e.pivots[n - 1] >= n))
    throw DimensionError("matrix is singular");
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

}  // namespace ssv
