#pragma once

// One-parameter degenerations: piecewise-linear heights, graph cones,
// reducedness of the special fiber, base change, and regular subdivisions.

#include <optional>
#include <string>
#include <vector>

#include "ssv/arith.hpp"
#include "ssv/complex.hpp"
#include "ssv/polyhedral.hpp"

namespace ssv {

/// A linear function on a cone of linearity.
struct LinearPiece {
  RationalCone domain;
  RatVector functional;
};

/// A cell of a regular subdivision: indices into the point set (sorted) and
/// the convex hull of those points.
struct SubdivisionCell {
  std::vector<std::size_t> points;
  RationalPolytope polytope;

  friend bool operator==(const SubdivisionCell& a, const SubdivisionCell& b) {
    return a.points == b.points;
  }
};

/// Cells of the lower hull of {(s, height(s))}, projected back, ordered by
/// their point indices. Cells are the projections of facets of the lifted
/// point set whose inner normal points up, so equal heights give the single
/// cell conv(S), and raising one corner of a square cuts off that corner.
/// Throws DomainError unless conv(S) = q and DegenerateLiftError for
/// repeated points.
std::vector<SubdivisionCell> regular_subdivision(const RationalPolytope& q,
                                                 const std::vector<RatVector>& points,
                                                 const std::vector<Rational>& heights);

/// A positively homogeneous, convex, piecewise-linear function on a cone.
class HeightFunction {
 public:
  /// Heights at finitely many points s of Lambda_R, extended to the cone
  /// over conv(S) in R x Lambda_R by h(t, t s) = t * (lower hull at s).
  static HeightFunction lifted(std::vector<RatVector> points, std::vector<Rational> heights);
  /// Explicit domains of linearity, all in the same ambient space.
  static HeightFunction piecewise(std::vector<LinearPiece> pieces);

  bool is_lifted() const { return lifted_; }
  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<RatVector>& points() const { return points_; }
  const std::vector<Rational>& heights() const { return heights_; }
  const std::vector<LinearPiece>& pieces() const { return pieces_; }
  /// Cells of linearity in lifted form.
  const std::vector<SubdivisionCell>& cells() const { return cells_; }

  /// Value at a point of the domain; throws OutsideSupportError elsewhere.
  Rational operator()(const RatVector& x) const;
  Rational operator()(const IntVector& x) const { return (*this)(to_rational(x)); }

  /// n * h.
  HeightFunction scaled(const Integer& n) const;

 private:
  bool lifted_ = false;
  std::size_t ambient_ = 0;
  std::vector<RatVector> points_;
  std::vector<Rational> heights_;
  std::vector<SubdivisionCell> cells_;
  std::vector<LinearPiece> pieces_;
};

/// {(t, x) : x in c, h(x) <= t}. Throws DomainError when the domains of h do
/// not cover c.
RationalCone graph_cone(const RationalCone& c, const HeightFunction& h);

struct ReducedCheck {
  bool reduced = true;
  std::optional<IntVector> witness;  // a monoid element with non-integral height
};

/// h takes integral values on every element of the saturated monoid m.
/// Generators are tried first in the given order, then the Hilbert basis of
/// each domain of linearity. Throws DomainError when m is not saturated or
/// leaves the domain of h.
ReducedCheck special_fiber_reduced(const HeightFunction& h, const AffineMonoid& m);

/// The least N >= 1 with N * h integral on m.
Integer base_change_exponent(const HeightFunction& h, const AffineMonoid& m);

/// The saturated monoid gamma intersected with the cone over q.
AffineMonoid weight_monoid(const RationalPolytope& q, const LatticeSubgroup& gamma);

/// The complex whose maximal cells are the cells of linearity of h on q,
/// with weight groups gamma intersected with the spans of their cones, and
/// all faces added. Throws NotReducedError when h is not integral on
/// gamma intersected with the cone over q.
SSVComplex special_fiber_complex(const LatticeSubgroup& gamma, const RationalPolytope& q,
                                 const HeightFunction& h,
                                 std::optional<std::string> root_datum = {});

}  // namespace ssv
