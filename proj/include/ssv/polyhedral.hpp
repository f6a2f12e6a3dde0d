#pragma once

// Exact rational convex geometry: double description, polytopes, cones,
// faces, lattice points, Hilbert bases and monoid saturation.

#include <optional>
#include <vector>

#include "ssv/arith.hpp"
#include "ssv/lattice.hpp"

namespace ssv {

/// Largest ambient dimension handled by convex_hull.
inline constexpr std::size_t kMaxHullDimension = 6;

/// normal . x >= offset (or == offset when used as an equation).
struct Halfspace {
  IntVector normal;
  Integer offset;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Extreme rays of the pointed cone {y : c . y >= 0 for every c}, as
/// primitive integer vectors in lexicographic order. Throws NotPointedError
/// if the constraints do not have full column rank.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints,
                                    std::size_t dim);

class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(std::size_t dim, const std::vector<IntVector>& generators);
  /// {x : e . x == 0 for e in equations, f . x >= 0 for f in inequalities}.
  /// Throws NotPointedError for cones containing a line.
  static RationalCone from_inequalities(std::size_t dim,
                                        const std::vector<IntVector>& equations,
                                        const std::vector<IntVector>& inequalities);

  std::size_t ambient_rank() const { return dim_; }
  /// Primitive extreme rays (pointed cones) or primitive generators.
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& equations() const { return equations_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  bool pointed() const { return pointed_; }
  std::size_t dimension() const { return dim_ - equations_.size(); }

  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;
  bool contains(const RationalCone& other) const;
  /// Strictly inside every facet (relative interior).
  bool in_relative_interior(const RatVector& v) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.pointed_ == b.pointed_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> equations_;
  std::vector<IntVector> facets_;
  bool pointed_ = true;
};

class RationalPolytope {
 public:
  RationalPolytope() = default;

  std::size_t ambient_rank() const { return dim_; }
  /// Extreme points in lexicographic order.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  /// Irredundant facet inequalities normal . x >= offset, sorted.
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Equations normal . x == offset cutting out the affine hull.
  const std::vector<Halfspace>& equations() const { return equations_; }
  std::size_t dimension() const { return dim_ - equations_.size(); }

  bool contains(const RatVector& x) const;
  bool in_relative_interior(const RatVector& x) const;
  RatVector barycenter() const;
  /// Vertices lie in Z^d.
  bool is_lattice() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend RationalPolytope convex_hull(const std::vector<RatVector>&);
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
};

/// Throws DimensionError when d exceeds kMaxHullDimension and DomainError
/// for an empty point set.
RationalPolytope convex_hull(const std::vector<RatVector>& points);
RationalPolytope convex_hull(const std::vector<IntVector>& points);

/// The polytope {x : equations hold, inequalities hold}; nullopt when empty.
/// Throws DomainError when unbounded.
std::optional<RationalPolytope> polytope_from_inequalities(
    std::size_t dim, const std::vector<Halfspace>& equations,
    const std::vector<Halfspace>& inequalities);

std::optional<RationalPolytope> intersect(const RationalPolytope& a,
                                          const RationalPolytope& b);

/// F is a face of P (F nonempty).
bool is_face(const RationalPolytope& f, const RationalPolytope& p);

struct Face {
  std::size_t dimension;
  std::vector<std::size_t> vertex_indices;  // into the polytope's vertex list

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Nonempty faces of a polytope ordered by (dimension, vertex indices); the
/// polytope itself is the last entry.
struct FacePoset {
  std::vector<Face> faces;

  std::size_t count(std::size_t dimension) const;
  /// faces[a] is contained in faces[b].
  bool leq(std::size_t a, std::size_t b) const;
};

FacePoset enumerate_faces(const RationalPolytope& p);

/// The polytope with vertex set taken from `face`.
RationalPolytope face_polytope(const RationalPolytope& p, const Face& face);

/// Cone in R^{1+r} generated by {1} x Q.
RationalCone cone_over(const RationalPolytope& q);

/// Elements of gamma (in Z^{1+r}) with first coordinate n whose remaining
/// coordinates lie in n*Q, in lexicographic order.
std::vector<IntVector> lattice_points(const RationalPolytope& q,
                                      const LatticeSubgroup& gamma, const Integer& n);

/// Integer points of a polytope in lexicographic order.
std::vector<IntVector> integer_points(const RationalPolytope& q);

/// Minimal generating set of gamma intersected with the cone, sorted.
/// Throws NotPointedError for cones containing a line.
std::vector<IntVector> hilbert_basis(const RationalCone& cone, const LatticeSubgroup& gamma);

struct AffineMonoid {
  LatticeSubgroup ambient;
  std::vector<IntVector> generators;
};

struct SaturationCheck {
  bool saturated = true;
  std::optional<IntVector> witness;  // in ambient and the cone, not in the monoid
};

/// Checks monoid == ambient intersected with the cone over the generators.
SaturationCheck is_saturated_monoid(const AffineMonoid& m);

/// Is target a nonnegative integer combination of the generators?
bool in_monoid(const IntVector& target, const std::vector<IntVector>& generators);

/// A point of `cone` (given as a region of positive measure relative to
/// cone's span) not covered by the pieces, or nullopt when the union of the
/// pieces contains the cone. Pieces of lower dimension cover nothing.
std::optional<RatVector> uncovered_point(const RationalCone& cone,
                                         const std::vector<RationalCone>& pieces);

}  // namespace ssv
