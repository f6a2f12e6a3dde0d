#pragma once

// The gluing complex of automorphism groups over the maximal cells of a
// complex, and its cohomology in degrees 0 and 1.

#include <string>
#include <vector>

#include "ssv/complex.hpp"
#include "ssv/diagonalizable.hpp"

namespace ssv {

enum class AutMode {
  /// Aut(Y) = Hom(Gamma~_Y, G_m), restrictions dual to the inclusions.
  Toric,
  /// Groups and restrictions read from the cells' aut data.
  Supplied,
};

/// One summand of a cochain group: the group attached to the intersection of
/// the maximal cells `cover` (sorted ids), which is the cell `face`.
struct GluingTerm {
  std::vector<std::string> cover;
  std::string face;
  DiagonalizableGroup group;
};

/// C^0 -> C^1 -> C^2, recorded on character groups. Row k of d0 is the image
/// in X(C^0) of the k-th generator of X(C^1); likewise for d1.
struct GluingComplex {
  std::vector<GluingTerm> c0;
  std::vector<GluingTerm> c1;
  std::vector<GluingTerm> c2;
  IntegerMatrix d0;
  IntegerMatrix d1;

  /// The direct sum C^i as one group, for i in {0, 1, 2}.
  DiagonalizableGroup term(int i) const;
};

/// Throws ValidationError for invalid complexes, MissingAutError when
/// supplied data is absent, and IncompatibleRestrictionError when a
/// restriction is not well defined or d1 d0 != 0.
GluingComplex build_gluing_complex(const SSVComplex& x, AutMode mode);

/// H^i for i in {0, 1}, computed on character groups: X(H^0) = coker(d0)
/// and X(H^1) = ker(d0) / im(d1).
DiagonalizableGroup diag_cohomology(const GluingComplex& c, int i);

}  // namespace ssv
