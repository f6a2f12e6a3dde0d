#include "ssv/degeneration.hpp"

#include <algorithm>
#include <set>

#include "ssv/errors.hpp"
#include "ssv/rational_linalg.hpp"

namespace ssv {

namespace {

RationalCone meet(const RationalCone& a, const RationalCone& b) {
  std::vector<IntVector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  std::vector<IntVector> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  return RationalCone::from_inequalities(a.ambient_rank(), eqs, ineqs);
}

std::vector<RationalCone> domains(const HeightFunction& h) {
  std::vector<RationalCone> out;
  for (const auto& p : h.pieces()) out.push_back(p.domain);
  return out;
}

// Lower facets of the lifted points, each with the tight point indices.
struct LowerFacet {
  std::vector<std::size_t> points;
  IntVector normal;  // on (1, s, height)
};

std::vector<LowerFacet> lower_facets(const std::vector<RatVector>& points,
                                     const std::vector<Rational>& heights) {
  const std::size_t r = points.front().size();
  const std::size_t dim = r + 2;
  std::vector<RatVector> lifted;
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatVector v{Rational(1)};
    v.insert(v.end(), points[i].begin(), points[i].end());
    v.push_back(heights[i]);
    gens.push_back(clear_denominators(v));
    lifted.push_back(std::move(v));
  }
  IntVector up(dim);
  up[dim - 1] = 1;
  gens.push_back(up);
  RationalCone c = RationalCone::from_generators(dim, gens);

  std::vector<LowerFacet> out;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& f : c.facets()) {
    if (f[dim - 1] <= 0) continue;
    LowerFacet lf{{}, f};
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (dot(f, lifted[i]) == 0) lf.points.push_back(i);
    if (seen.insert(lf.points).second) out.push_back(std::move(lf));
  }
  std::sort(out.begin(), out.end(),
            [](const LowerFacet& a, const LowerFacet& b) { return a.points < b.points; });
  return out;
}

void check_points(const RationalPolytope& q, const std::vector<RatVector>& points,
                  const std::vector<Rational>& heights) {
  if (points.empty()) throw DomainError("the point set is empty");
  if (points.size() != heights.size())
    throw DimensionError(std::to_string(points.size()) + " points but " +
                         std::to_string(heights.size()) + " heights");
  for (const auto& p : points)
    if (p.size() != q.ambient_rank()) throw DimensionError("point " + to_string(p) + " has the wrong length");
  std::set<RatVector> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw DegenerateLiftError("the point set has repeated points");
  if (!(convex_hull(points) == q)) throw DomainError("the points do not span the polytope");
}

}  // namespace

std::vector<SubdivisionCell> regular_subdivision(const RationalPolytope& q,
                                                 const std::vector<RatVector>& points,
                                                 const std::vector<Rational>& heights) {
  check_points(q, points, heights);
  std::vector<SubdivisionCell> cells;
  for (auto& f : lower_facets(points, heights)) {
    std::vector<RatVector> pts;
    for (auto i : f.points) pts.push_back(points[i]);
    cells.push_back({std::move(f.points), convex_hull(pts)});
  }
  return cells;
}

HeightFunction HeightFunction::lifted(std::vector<RatVector> points, std::vector<Rational> heights) {
  if (points.empty()) throw DomainError("the point set is empty");
  RationalPolytope q = convex_hull(points);
  check_points(q, points, heights);
  HeightFunction h;
  h.lifted_ = true;
  h.ambient_ = q.ambient_rank() + 1;
  for (const auto& f : lower_facets(points, heights)) {
    std::vector<RatVector> pts;
    for (auto i : f.points) pts.push_back(points[i]);
    RationalPolytope cell = convex_hull(pts);
    // a + b.s + c.height = 0 on the facet, so height = -(a + b.s) / c
    const Rational c = f.normal.back();
    RatVector functional;
    for (std::size_t i = 0; i + 1 < f.normal.size(); ++i) functional.push_back(-Rational(f.normal[i]) / c);
    h.pieces_.push_back({cone_over(cell), std::move(functional)});
    h.cells_.push_back({f.points, std::move(cell)});
  }
  h.points_ = std::move(points);
  h.heights_ = std::move(heights);
  return h;
}

HeightFunction HeightFunction::piecewise(std::vector<LinearPiece> pieces) {
  if (pieces.empty()) throw DomainError("a height function needs at least one piece");
  HeightFunction h;
  h.ambient_ = pieces.front().domain.ambient_rank();
  for (const auto& p : pieces)
    if (p.domain.ambient_rank() != h.ambient_ || p.functional.size() != h.ambient_)
      throw DimensionError("pieces of a height function live in different spaces");
  h.pieces_ = std::move(pieces);
  return h;
}

Rational HeightFunction::operator()(const RatVector& x) const {
  if (x.size() != ambient_) throw DimensionError("point " + to_string(x) + " has the wrong length");
  for (const auto& p : pieces_)
    if (p.domain.contains(x)) return dot(p.functional, x);
  throw OutsideSupportError("point " + to_string(x) + " is outside the domain of the height function");
}

HeightFunction HeightFunction::scaled(const Integer& n) const {
  if (n < 1) throw DomainError("scale factor must be positive");
  if (lifted_) {
    std::vector<Rational> hs = heights_;
    for (auto& v : hs) v *= n;
    return lifted(points_, hs);
  }
  std::vector<LinearPiece> pieces = pieces_;
  for (auto& p : pieces)
    for (auto& v : p.functional) v *= n;
  return piecewise(pieces);
}

RationalCone graph_cone(const RationalCone& c, const HeightFunction& h) {
  if (c.ambient_rank() != h.ambient_rank()) throw DimensionError("height function and cone ranks differ");
  if (auto hole = uncovered_point(c, domains(h)))
    throw DomainError("the height function is undefined at " + to_string(*hole));
  const std::size_t dim = c.ambient_rank() + 1;
  IntVector vertical(dim);
  vertical[0] = 1;
  std::vector<IntVector> gens{vertical};
  for (const auto& p : h.pieces()) {
    RationalCone d = meet(p.domain, c);
    for (const auto& r : d.rays()) {
      RatVector g{dot(r, p.functional)};
      for (const auto& v : r) g.push_back(v);
      gens.push_back(clear_denominators(g));
    }
  }
  return RationalCone::from_generators(dim, gens);
}

namespace {

// Generators of m, then the Hilbert basis of each domain within the cone of m.
template <typename Visit>
void for_each_test_point(const HeightFunction& h, const AffineMonoid& m, Visit visit) {
  const std::size_t dim = m.ambient.ambient_rank();
  if (h.ambient_rank() != dim) throw DimensionError("height function and monoid ranks differ");
  if (!is_saturated_monoid(m).saturated)
    throw DomainError("the monoid is not saturated in its lattice");
  for (const auto& g : m.generators) {
    Rational v;
    try {
      v = h(g);
    } catch (const OutsideSupportError&) {
      throw DomainError("monoid generator " + to_string(g) + " is outside the domain of h");
    }
    if (!visit(g, v)) return;
  }
  RationalCone cone = RationalCone::from_generators(dim, m.generators);
  if (auto hole = uncovered_point(cone, domains(h)))
    throw DomainError("the height function is undefined at " + to_string(*hole));
  for (const auto& p : h.pieces()) {
    RationalCone d = meet(p.domain, cone);
    for (const auto& b : hilbert_basis(d, m.ambient))
      if (!visit(b, dot(b, p.functional))) return;
  }
}

}  // namespace

ReducedCheck special_fiber_reduced(const HeightFunction& h, const AffineMonoid& m) {
  ReducedCheck out;
  for_each_test_point(h, m, [&](const IntVector& x, const Rational& v) {
    if (is_integral(v)) return true;
    out.reduced = false;
    out.witness = x;
    return false;
  });
  return out;
}

Integer base_change_exponent(const HeightFunction& h, const AffineMonoid& m) {
  Integer n = 1;
  for_each_test_point(h, m, [&](const IntVector&, const Rational& v) {
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), v.get_den_mpz_t());
    return true;
  });
  return n;
}

AffineMonoid weight_monoid(const RationalPolytope& q, const LatticeSubgroup& gamma) {
  return {gamma, hilbert_basis(cone_over(q), gamma)};
}

SSVComplex special_fiber_complex(const LatticeSubgroup& gamma, const RationalPolytope& q,
                                 const HeightFunction& h, std::optional<std::string> root_datum) {
  if (!h.is_lifted()) throw DomainError("special fibers need heights at points");
  if (gamma.ambient_rank() != q.ambient_rank() + 1) throw DimensionError("gamma must live in Z x Lambda");
  if (!(convex_hull(h.points()) == q)) throw DomainError("the height points do not span the polytope");
  ReducedCheck check = special_fiber_reduced(h, weight_monoid(q, gamma));
  if (!check.reduced)
    throw NotReducedError("the special fiber is not reduced: h(" + to_string(*check.witness) +
                          ") = " + to_string(h(*check.witness)));
  std::vector<CellData> cells;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < h.cells().size(); ++i) {
    const RationalPolytope& p = h.cells()[i].polytope;
    RationalCone c = cone_over(p);
    std::vector<RatVector> rays;
    for (const auto& r : c.rays()) rays.push_back(to_rational(r));
    ids.push_back("C" + std::to_string(i + 1));
    cells.push_back({ids.back(), p, gamma.intersect_span(rays), std::nullopt});
  }
  SSVComplex x(q.ambient_rank(), gamma, std::move(cells), std::move(ids), std::move(root_datum));
  return complete_faces(x, Completion::AllFaces);
}

}  // namespace ssv
