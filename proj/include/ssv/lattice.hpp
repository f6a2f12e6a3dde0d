#pragma once

// Integer-lattice algebra: Smith and Hermite normal forms, subgroups of Z^d,
// saturations, direct-summand tests and finitely generated abelian groups.

#include <optional>
#include <string>
#include <vector>

#include "ssv/arith.hpp"

namespace ssv {

/// left * M * right == D, with D diagonal carrying `diag` on its leading
/// diagonal, left and right unimodular, diag[i] | diag[i+1], diag[i] >= 0.
/// `diag` has min(rows, cols) entries; zeros trail.
struct SmithDecomposition {
  IntegerMatrix left;
  IntVector diag;
  IntegerMatrix right;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Row-style Hermite normal form of the row span: echelon rows with positive
/// pivots and entries above each pivot reduced into [0, pivot). This is the
/// column-style HNF of the transposed generator matrix. Zero rows dropped.
std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows,
                                           std::size_t cols);

/// Basis of the left kernel {x in Z^rows : x * m == 0}.
std::vector<IntVector> integer_left_kernel(const IntegerMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i], with
/// torsion[i] > 1 and torsion[i] | torsion[i+1].
struct AbelianInvariants {
  std::size_t free_rank = 0;
  IntVector torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

/// Invariants of Z^generators / (row span of relations).
AbelianInvariants cokernel_invariants(const std::vector<IntVector>& relations,
                                      std::size_t generators);

/// A finitely generated subgroup of Z^d. Value type; equality compares the
/// canonical Hermite basis.
class LatticeSubgroup {
 public:
  LatticeSubgroup() = default;
  LatticeSubgroup(std::size_t ambient_rank, std::vector<IntVector> generators);

  static LatticeSubgroup full(std::size_t ambient_rank);
  static LatticeSubgroup zero(std::size_t ambient_rank) { return {ambient_rank, {}}; }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  /// Canonical Hermite basis.
  const std::vector<IntVector>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(const IntVector& v) const;
  bool contains(const LatticeSubgroup& other) const;
  /// Coordinates of v in the Hermite basis, if v belongs to the group.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  /// Coordinates of a rational vector in the rational span of the basis.
  std::optional<RatVector> rational_coordinates(const RatVector& v) const;

  /// Intersection with the rational span of `vectors`.
  LatticeSubgroup intersect_span(const std::vector<RatVector>& vectors) const;

  friend bool operator==(const LatticeSubgroup& a, const LatticeSubgroup& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> basis_;
};

std::string to_string(const LatticeSubgroup& g);

/// Matrix whose rows are the coordinates of sub's generators in a basis of
/// ambient. Throws ContainmentError if a generator lies outside ambient.
IntegerMatrix coordinate_matrix(const LatticeSubgroup& sub,
                                const LatticeSubgroup& ambient);

/// Invariants of ambient / sub.
AbelianInvariants quotient_invariants(const LatticeSubgroup& sub,
                                      const LatticeSubgroup& ambient);

/// True iff ambient / sub is torsion-free.
bool is_direct_summand(const LatticeSubgroup& sub, const LatticeSubgroup& ambient);

struct Saturation {
  LatticeSubgroup saturation;
  Integer index;  // [saturation : sub], always finite
};

/// ambient intersected with the rational span of sub, and the index of sub in it.
Saturation saturation_and_index(const LatticeSubgroup& sub,
                                const LatticeSubgroup& ambient);

}  // namespace ssv
