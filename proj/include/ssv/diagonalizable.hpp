#pragma once

// Diagonalizable groups through their character groups, presented as
// cokernels of integer matrices.

#include <string>
#include <vector>

#include "ssv/arith.hpp"
#include "ssv/lattice.hpp"

namespace ssv {

/// The diagonalizable group whose character group is Z^generators modulo the
/// row span of `relations`. Equality compares invariants and the Hermite form
/// of the relation lattice.
class DiagonalizableGroup {
 public:
  DiagonalizableGroup() = default;
  DiagonalizableGroup(std::size_t generators, std::vector<IntVector> relations);

  /// Hom(Z^rank, G_m).
  static DiagonalizableGroup torus(std::size_t rank) { return {rank, {}}; }

  std::size_t generators() const { return generators_; }
  const std::vector<IntVector>& relations() const { return relations_; }
  const AbelianInvariants& invariants() const { return invariants_; }

  /// v maps to zero in the character group.
  bool is_relation(const IntVector& v) const;

  friend bool operator==(const DiagonalizableGroup& a, const DiagonalizableGroup& b) {
    return a.generators_ == b.generators_ && a.invariants_ == b.invariants_ &&
           a.relation_lattice_ == b.relation_lattice_;
  }

 private:
  std::size_t generators_ = 0;
  std::vector<IntVector> relations_;
  LatticeSubgroup relation_lattice_;
  AbelianInvariants invariants_;
};

/// "G_m^r x mu_d1 x ..." style description; "trivial" for the trivial group.
std::string describe(const DiagonalizableGroup& g);

/// A homomorphism source -> target, recorded contravariantly on characters:
/// row i of `matrix` is the image in X(source) of the i-th generator of
/// X(target).
struct DiagHom {
  DiagonalizableGroup source;
  DiagonalizableGroup target;
  IntegerMatrix matrix;

  /// Shapes agree and relations of X(target) map to relations of X(source).
  bool well_defined() const;
};

DiagHom identity_hom(const DiagonalizableGroup& g);

}  // namespace ssv
