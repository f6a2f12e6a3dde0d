#include "ssv/lattice.hpp"

#include <algorithm>

#include "ssv/errors.hpp"
#include "ssv/rational_linalg.hpp"

namespace ssv {

namespace {

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

// Position (i, j) with i, j >= t of the nonzero entry of least absolute
// value, or nullopt if the trailing block vanishes.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(
    const IntegerMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs_value(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix left = IntegerMatrix::identity(m.rows());
  IntegerMatrix right = IntegerMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    a.swap_rows(t, i);
    left.swap_rows(t, i);
    a.swap_cols(t, j);
    right.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < n; ++t) {
    auto pos = smallest_entry(a, t);
    if (!pos) break;
    move_to_pivot(t, pos->first, pos->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);  // truncating
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived in row or column t
        std::size_t bi = t, bj = t;
        Integer best = abs_value(a(t, t));
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs_value(a(i, t)) < best) {
            best = abs_value(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs_value(a(t, j)) < best) {
            best = abs_value(a(t, j));
            bi = t;
            bj = j;
          }
        move_to_pivot(t, bi, bj);
        continue;
      }
      // enforce the divisibility chain
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), IntVector(n), std::move(right)};
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a(i, i);
  return out;
}

std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& input,
                                           std::size_t cols) {
  std::vector<IntVector> a;
  for (const auto& r : input) {
    if (r.size() != cols) throw DimensionError("generator of wrong length");
    if (!is_zero(r)) a.push_back(r);
  }
  auto axpy = [cols](IntVector& target, const IntVector& source, const Integer& f) {
    for (std::size_t j = 0; j < cols; ++j) target[j] += f * source[j];
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (piv == a.size() || abs_value(a[i][c]) < abs_value(a[piv][c])))
          piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];
        axpy(a[i], a[r], -q);
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r == a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      axpy(a[i], a[r], -q);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<IntVector> integer_left_kernel(const IntegerMatrix& m) {
  if (m.cols() == 0) {
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      IntVector e(m.rows());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  SmithDecomposition s = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t i = s.rank(); i < m.rows(); ++i) basis.push_back(s.left.row(i));
  return hermite_normal_form(basis, m.rows());
}

std::string to_string(const AbelianInvariants& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (const auto& t : a.torsion) s += " + Z/" + t.get_str();
  return s;
}

AbelianInvariants cokernel_invariants(const std::vector<IntVector>& relations,
                                      std::size_t generators) {
  AbelianInvariants out;
  if (relations.empty() || generators == 0) {
    out.free_rank = generators;
    return out;
  }
  SmithDecomposition s =
      smith_normal_form(IntegerMatrix::from_rows(relations, generators));
  out.free_rank = generators - s.rank();
  for (const auto& d : s.diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

LatticeSubgroup::LatticeSubgroup(std::size_t ambient_rank,
                                 std::vector<IntVector> generators)
    : ambient_rank_(ambient_rank), generators_(std::move(generators)) {
  basis_ = hermite_normal_form(generators_, ambient_rank_);
}

LatticeSubgroup LatticeSubgroup::full(std::size_t ambient_rank) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return {ambient_rank, std::move(gens)};
}

std::optional<IntVector> LatticeSubgroup::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw DimensionError("vector of wrong length");
  IntVector rest = v;
  IntVector coords(basis_.size());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t pivot = 0;
    while (basis_[i][pivot] == 0) ++pivot;
    for (; col < pivot; ++col)
      if (rest[col] != 0) return std::nullopt;
    if (rest[pivot] % basis_[i][pivot] != 0) return std::nullopt;
    coords[i] = rest[pivot] / basis_[i][pivot];
    for (std::size_t j = pivot; j < ambient_rank_; ++j) rest[j] -= coords[i] * basis_[i][j];
    col = pivot + 1;
  }
  for (; col < ambient_rank_; ++col)
    if (rest[col] != 0) return std::nullopt;
  return coords;
}

bool LatticeSubgroup::contains(const IntVector& v) const {
  return coordinates(v).has_value();
}

bool LatticeSubgroup::contains(const LatticeSubgroup& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(),
                     [this](const IntVector& g) { return contains(g); });
}

std::optional<RatVector> LatticeSubgroup::rational_coordinates(const RatVector& v) const {
  std::vector<RatVector> rows;
  for (const auto& b : basis_) rows.push_back(to_rational(b));
  if (rows.empty()) {
    if (is_zero(v)) return RatVector{};
    return std::nullopt;
  }
  return solve_left(rows, v);
}

LatticeSubgroup LatticeSubgroup::intersect_span(const std::vector<RatVector>& vectors) const {
  std::vector<RatVector> nonzero;
  for (const auto& v : vectors)
    if (!is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty() || basis_.empty()) return zero(ambient_rank_);
  std::vector<IntVector> normals = orthogonal_complement(nonzero, ambient_rank_);
  if (normals.empty()) return *this;
  IntegerMatrix bn(basis_.size(), normals.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < normals.size(); ++j) bn(i, j) = dot(basis_[i], normals[j]);
  std::vector<IntVector> gens;
  for (const auto& k : integer_left_kernel(bn)) {
    IntVector g(ambient_rank_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < ambient_rank_; ++j) g[j] += k[i] * basis_[i][j];
    gens.push_back(std::move(g));
  }
  return {ambient_rank_, std::move(gens)};
}

std::string to_string(const LatticeSubgroup& g) {
  std::string s = "<";
  for (std::size_t i = 0; i < g.basis().size(); ++i) {
    if (i) s += ',';
    s += to_string(g.basis()[i]);
  }
  return s + '>';
}

IntegerMatrix coordinate_matrix(const LatticeSubgroup& sub,
                                const LatticeSubgroup& ambient) {
  if (sub.ambient_rank() != ambient.ambient_rank())
    throw DimensionError("subgroups live in different ambient lattices");
  std::vector<IntVector> rows;
  for (const auto& g : sub.generators()) {
    auto c = ambient.coordinates(g);
    if (!c) throw ContainmentError("generator " + to_string(g) + " is not in " + to_string(ambient));
    rows.push_back(std::move(*c));
  }
  return IntegerMatrix::from_rows(rows, ambient.rank());
}

AbelianInvariants quotient_invariants(const LatticeSubgroup& sub,
                                      const LatticeSubgroup& ambient) {
  IntegerMatrix c = coordinate_matrix(sub, ambient);
  return cokernel_invariants(c.row_list(), ambient.rank());
}

bool is_direct_summand(const LatticeSubgroup& sub, const LatticeSubgroup& ambient) {
  return quotient_invariants(sub, ambient).torsion_free();
}

Saturation saturation_and_index(const LatticeSubgroup& sub,
                                const LatticeSubgroup& ambient) {
  IntegerMatrix c = coordinate_matrix(sub, ambient);
  Integer index = 1;
  if (!c.empty()) {
    for (const auto& d : smith_normal_form(c).diag)
      if (d != 0) index *= d;
  }
  std::vector<RatVector> span;
  for (const auto& g : sub.generators()) span.push_back(to_rational(g));
  return {ambient.intersect_span(span), index};
}

}  // namespace ssv
