#include "ssv/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "ssv/errors.hpp"
#include "ssv/rational_linalg.hpp"

namespace ssv {

namespace {

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const ZeroSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct DDRay {
  IntVector v;
  ZeroSet zeros;
};

IntVector negated(const IntVector& v) {
  IntVector r = v;
  for (auto& x : r) x = -x;
  return r;
}

IntVector lift(const IntVector& v, const std::vector<std::size_t>& coords, std::size_t dim) {
  IntVector out(dim);
  for (std::size_t i = 0; i < coords.size(); ++i) out[coords[i]] = v[i];
  return out;
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<IntVector> all_constraints(const RationalCone& c) {
  std::vector<IntVector> rows = c.facets();
  for (const auto& e : c.equations()) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  return rows;
}

Rational ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Calls f on every integer vector in the box [lo, hi], last coordinate fastest.
void for_each_in_box(const IntVector& lo, const IntVector& hi,
                     const std::function<void(const IntVector&)>& f) {
  const std::size_t d = lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return;
  IntVector x = lo;
  for (;;) {
    f(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        goto next;
      }
    }
    return;
  next:;
  }
}

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& input, std::size_t dim) {
  if (dim == 0) return {};
  std::vector<IntVector> rows;
  for (const auto& r : input) {
    if (r.size() != dim) throw DimensionError("constraint of wrong length");
    if (!is_zero(r)) rows.push_back(primitive(r));
  }
  sort_unique(rows);
  const std::size_t m = rows.size();

  // an initial nonsingular block of constraints
  std::vector<std::size_t> basis;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    chosen.push_back(to_rational(rows[i]));
    if (rank(chosen, dim) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }
  if (basis.size() < dim) throw NotPointedError("constraint system has a nontrivial lineality space");

  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;
  std::vector<RatVector> inv = inverse(chosen);
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = inv[i][j];
    DDRay r{primitive_integer_direction(col), ZeroSet(m)};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) r.zeros.set(basis[k]);
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (processed[k]) continue;
    processed[k] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(rows[k], rays[i].v);
      if (s[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (s[i] < 0) {
        neg.push_back(i);
      } else {
        DDRay r = rays[i];
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    }
    for (auto p : pos)
      for (auto n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (dim >= 2 && common.count() < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && common.subset_of(rays[o].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntVector v(dim);
        Integer a = s[p], b = -s[n];
        for (std::size_t j = 0; j < dim; ++j) v[j] = a * rays[n].v[j] + b * rays[p].v[j];
        DDRay r{primitive(v), common};
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  sort_unique(out);
  return out;
}

// RationalCone ----------------------------------------------------------------

RationalCone RationalCone::from_generators(std::size_t dim,
                                           const std::vector<IntVector>& generators) {
  RationalCone c;
  c.dim_ = dim;
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw DimensionError("generator of wrong length");
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);
  std::vector<RatVector> rat;
  for (const auto& g : gens) rat.push_back(to_rational(g));
  c.equations_ = orthogonal_complement(rat, dim);
  if (gens.empty()) return c;

  RowEchelon e = reduced_row_echelon(rat, dim);
  std::vector<IntVector> projected;
  for (const auto& g : gens) {
    IntVector p;
    for (auto col : e.pivots) p.push_back(g[col]);
    projected.push_back(std::move(p));
  }
  for (const auto& a : extreme_rays(projected, e.pivots.size()))
    c.facets_.push_back(lift(a, e.pivots, dim));
  sort_unique(c.facets_);

  std::vector<IntVector> hrep = c.facets_;
  hrep.insert(hrep.end(), c.equations_.begin(), c.equations_.end());
  c.pointed_ = rank(hrep, dim) == dim;
  if (!c.pointed_) {
    c.rays_ = gens;
    return c;
  }
  for (const auto& g : gens) {
    std::vector<IntVector> tight = c.equations_;
    for (const auto& f : c.facets_)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight, dim) == dim - 1) c.rays_.push_back(g);
  }
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t dim,
                                             const std::vector<IntVector>& equations,
                                             const std::vector<IntVector>& inequalities) {
  std::vector<IntVector> rows = inequalities;
  for (const auto& e : equations) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  return from_generators(dim, extreme_rays(rows, dim));
}

bool RationalCone::contains(const IntVector& v) const {
  if (v.size() != dim_) throw DimensionError("vector of wrong length");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool RationalCone::contains(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionError("vector of wrong length");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  return std::all_of(other.rays().begin(), other.rays().end(),
                     [this](const IntVector& r) { return contains(r); });
}

bool RationalCone::in_relative_interior(const RatVector& v) const {
  if (!contains(v)) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&v](const IntVector& f) { return dot(f, v) > 0; });
}

// RationalPolytope -------------------------------------------------------------

bool RationalPolytope::contains(const RatVector& x) const {
  if (x.size() != dim_) throw DimensionError("point of wrong length");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool RationalPolytope::in_relative_interior(const RatVector& x) const {
  if (!contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&x](const Halfspace& f) { return dot(f.normal, x) > f.offset; });
}

RatVector RationalPolytope::barycenter() const {
  RatVector c(dim_);
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) c[i] += v[i];
  for (auto& x : c) x /= static_cast<long>(vertices_.size());
  return c;
}

bool RationalPolytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RatVector& v) { return is_integral(v); });
}

RationalPolytope convex_hull(const std::vector<RatVector>& input) {
  if (input.empty()) throw DomainError("convex hull of an empty point set");
  const std::size_t d = input[0].size();
  if (d > kMaxHullDimension)
    throw DimensionError("convex hull supports ambient dimension at most " +
                         std::to_string(kMaxHullDimension));
  for (const auto& p : input)
    if (p.size() != d) throw DimensionError("points of mixed dimension");

  std::vector<IntVector> homog;
  for (const auto& p : input) {
    RatVector h{Rational(1)};
    h.insert(h.end(), p.begin(), p.end());
    homog.push_back(primitive_integer_direction(h));
  }
  RationalCone cone = RationalCone::from_generators(d + 1, homog);

  RationalPolytope poly;
  poly.dim_ = d;
  auto split = [](const IntVector& h) {
    return Halfspace{IntVector(h.begin() + 1, h.end()), Integer(-h[0])};
  };
  for (const auto& e : cone.equations()) poly.equations_.push_back(split(e));
  for (const auto& f : cone.facets()) {
    Halfspace h = split(f);
    if (!is_zero(h.normal)) poly.facets_.push_back(std::move(h));
  }
  for (const auto& r : cone.rays()) {
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = ratio(r[i + 1], r[0]);
    poly.vertices_.push_back(std::move(v));
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  std::sort(poly.facets_.begin(), poly.facets_.end());
  return poly;
}

RationalPolytope convex_hull(const std::vector<IntVector>& points) {
  std::vector<RatVector> rat;
  for (const auto& p : points) rat.push_back(to_rational(p));
  return convex_hull(rat);
}

std::optional<RationalPolytope> polytope_from_inequalities(
    std::size_t dim, const std::vector<Halfspace>& equations,
    const std::vector<Halfspace>& inequalities) {
  auto homogenize = [dim](const Halfspace& h, bool negate) {
    if (h.normal.size() != dim) throw DimensionError("halfspace of wrong length");
    IntVector row{Integer(-h.offset)};
    row.insert(row.end(), h.normal.begin(), h.normal.end());
    return negate ? negated(row) : row;
  };
  std::vector<IntVector> rows;
  for (const auto& h : inequalities) rows.push_back(homogenize(h, false));
  for (const auto& h : equations) {
    rows.push_back(homogenize(h, false));
    rows.push_back(homogenize(h, true));
  }
  IntVector t(dim + 1);
  t[0] = 1;
  rows.push_back(t);

  // Directions along which every constraint is constant make the region
  // unbounded (when nonempty); cut them out to decide emptiness.
  std::vector<RatVector> normals;
  for (const auto& h : inequalities) normals.push_back(to_rational(h.normal));
  for (const auto& h : equations) normals.push_back(to_rational(h.normal));
  std::vector<IntVector> lineality = orthogonal_complement(normals, dim);
  for (const auto& l : lineality) {
    IntVector row{Integer(0)};
    row.insert(row.end(), l.begin(), l.end());
    rows.push_back(row);
    rows.push_back(negated(row));
  }

  std::vector<RatVector> points;
  bool recedes = !lineality.empty();
  for (const auto& r : extreme_rays(rows, dim + 1)) {
    if (r[0] == 0) {
      recedes = true;
      continue;
    }
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = ratio(r[i + 1], r[0]);
    points.push_back(std::move(v));
  }
  if (points.empty()) return std::nullopt;
  if (recedes) throw DomainError("inequality system defines an unbounded region");
  return convex_hull(points);
}

std::optional<RationalPolytope> intersect(const RationalPolytope& a,
                                          const RationalPolytope& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("polytopes live in different ambient spaces");
  std::vector<Halfspace> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  std::vector<Halfspace> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  return polytope_from_inequalities(a.ambient_rank(), eqs, ineqs);
}

bool is_face(const RationalPolytope& f, const RationalPolytope& p) {
  if (f.ambient_rank() != p.ambient_rank()) return false;
  for (const auto& v : f.vertices())
    if (!p.contains(v)) return false;
  std::vector<const Halfspace*> tight;
  for (const auto& h : p.facets())
    if (std::all_of(f.vertices().begin(), f.vertices().end(),
                    [&h](const RatVector& v) { return dot(h.normal, v) == h.offset; }))
      tight.push_back(&h);
  std::vector<RatVector> face_vertices;
  for (const auto& v : p.vertices())
    if (std::all_of(tight.begin(), tight.end(),
                    [&v](const Halfspace* h) { return dot(h->normal, v) == h->offset; }))
      face_vertices.push_back(v);
  return face_vertices == f.vertices();
}

// Faces ----------------------------------------------------------------------

std::size_t FacePoset::count(std::size_t dimension) const {
  return static_cast<std::size_t>(std::count_if(
      faces.begin(), faces.end(), [dimension](const Face& f) { return f.dimension == dimension; }));
}

bool FacePoset::leq(std::size_t a, std::size_t b) const {
  const auto& x = faces[a].vertex_indices;
  const auto& y = faces[b].vertex_indices;
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

FacePoset enumerate_faces(const RationalPolytope& p) {
  const auto& verts = p.vertices();
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& h : p.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(h.normal, verts[i]) == h.offset) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto f = std::move(queue.back());
    queue.pop_back();
    for (const auto& s : facet_sets) {
      std::vector<std::size_t> i;
      std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(i));
      if (i.empty() || seen.count(i)) continue;
      seen.insert(i);
      queue.push_back(std::move(i));
    }
  }

  FacePoset poset;
  for (const auto& s : seen) {
    std::vector<RatVector> pts;
    for (auto i : s) pts.push_back(verts[i]);
    poset.faces.push_back(Face{affine_rank(pts), s});
  }
  std::sort(poset.faces.begin(), poset.faces.end());
  return poset;
}

RationalPolytope face_polytope(const RationalPolytope& p, const Face& face) {
  std::vector<RatVector> pts;
  for (auto i : face.vertex_indices) pts.push_back(p.vertices().at(i));
  return convex_hull(pts);
}

RationalCone cone_over(const RationalPolytope& q) {
  std::vector<IntVector> gens;
  for (const auto& v : q.vertices()) {
    RatVector h{Rational(1)};
    h.insert(h.end(), v.begin(), v.end());
    gens.push_back(primitive_integer_direction(h));
  }
  return RationalCone::from_generators(q.ambient_rank() + 1, gens);
}

// Lattice points ---------------------------------------------------------------

namespace {

// Integer box containing scale * q.
std::pair<IntVector, IntVector> bounding_box(const RationalPolytope& q, const Integer& scale) {
  const std::size_t d = q.ambient_rank();
  IntVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = q.vertices()[0][i], mx = mn;
    for (const auto& v : q.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_q(mn * scale).get_num();
    hi[i] = floor_q(mx * scale).get_num();
  }
  return {lo, hi};
}

bool in_dilate(const RationalPolytope& q, const IntVector& x, const Integer& n) {
  for (const auto& e : q.equations())
    if (dot(e.normal, x) != n * e.offset) return false;
  for (const auto& f : q.facets())
    if (dot(f.normal, x) < n * f.offset) return false;
  return true;
}

}  // namespace

std::vector<IntVector> lattice_points(const RationalPolytope& q,
                                      const LatticeSubgroup& gamma, const Integer& n) {
  if (gamma.ambient_rank() != q.ambient_rank() + 1)
    throw DimensionError("lattice must live in Z^(1+r)");
  if (n < 0) throw DomainError("degree must be nonnegative");
  std::vector<IntVector> out;
  auto [lo, hi] = bounding_box(q, n);
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    if (!in_dilate(q, x, n)) return;
    IntVector full{n};
    full.insert(full.end(), x.begin(), x.end());
    if (gamma.contains(full)) out.push_back(std::move(full));
  });
  return out;
}

std::vector<IntVector> integer_points(const RationalPolytope& q) {
  std::vector<IntVector> out;
  auto [lo, hi] = bounding_box(q, Integer(1));
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    if (in_dilate(q, x, Integer(1))) out.push_back(x);
  });
  return out;
}

// Hilbert bases and monoids ------------------------------------------------------

std::vector<IntVector> hilbert_basis(const RationalCone& cone, const LatticeSubgroup& gamma) {
  const std::size_t d = cone.ambient_rank();
  if (gamma.ambient_rank() != d) throw DimensionError("cone and lattice dimensions differ");
  if (!cone.pointed()) throw NotPointedError("Hilbert basis of a cone containing a line");
  if (cone.rays().empty()) return {};

  std::vector<RatVector> span;
  for (const auto& r : cone.rays()) span.push_back(to_rational(r));
  LatticeSubgroup l = gamma.intersect_span(span);
  const auto& b = l.basis();
  const std::size_t k = b.size();
  if (k == 0) return {};

  // the cone in coordinates with respect to the basis of l
  auto pull_back = [&](const IntVector& normal) {
    IntVector out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = dot(b[i], normal);
    return out;
  };
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : cone.facets()) ineqs.push_back(pull_back(f));
  for (const auto& e : cone.equations()) eqs.push_back(pull_back(e));
  std::vector<IntVector> rows = ineqs;
  for (const auto& e : eqs) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  std::vector<IntVector> rays = extreme_rays(rows, k);
  if (rays.empty()) return {};

  IntVector g(k);
  for (const auto& f : ineqs)
    for (std::size_t i = 0; i < k; ++i) g[i] += f[i];
  std::vector<Integer> gr;
  for (const auto& r : rays) gr.push_back(dot(g, r));
  std::sort(gr.rbegin(), gr.rend());
  const std::size_t m = rank(rays, k);
  Integer bound = 0;
  for (std::size_t i = 0; i < m && i < gr.size(); ++i) bound += gr[i];

  std::vector<RatVector> corners{RatVector(k)};
  for (const auto& r : rays) {
    Rational scale = ratio(bound, dot(g, r));
    RatVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = scale * r[i];
    corners.push_back(std::move(c));
  }
  IntVector lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational mn = corners[0][i], mx = mn;
    for (const auto& c : corners) {
      mn = std::min(mn, c[i]);
      mx = std::max(mx, c[i]);
    }
    lo[i] = ceil_q(mn).get_num();
    hi[i] = floor_q(mx).get_num();
  }

  auto in_cone = [&](const IntVector& y) {
    for (const auto& f : ineqs)
      if (dot(f, y) < 0) return false;
    for (const auto& e : eqs)
      if (dot(e, y) != 0) return false;
    return true;
  };
  std::vector<std::pair<Integer, IntVector>> candidates;
  for_each_in_box(lo, hi, [&](const IntVector& y) {
    Integer deg = dot(g, y);
    if (deg <= 0 || deg > bound || !in_cone(y)) return;
    candidates.emplace_back(deg, y);
  });
  std::sort(candidates.begin(), candidates.end());

  std::vector<IntVector> basis_coords;
  for (const auto& [deg, y] : candidates) {
    bool reducible = false;
    for (const auto& h : basis_coords) {
      IntVector diff(k);
      for (std::size_t i = 0; i < k; ++i) diff[i] = y[i] - h[i];
      if (!is_zero(diff) && in_cone(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis_coords.push_back(y);
  }

  std::vector<IntVector> out;
  for (const auto& y : basis_coords) {
    IntVector x(d);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j) x[j] += y[i] * b[i][j];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_monoid(const IntVector& target, const std::vector<IntVector>& generators) {
  const std::size_t d = target.size();
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != d) throw DimensionError("generator of wrong length");
    if (!is_zero(g)) gens.push_back(g);
  }
  sort_unique(gens);
  if (is_zero(target)) return true;
  if (gens.empty()) return false;
  RationalCone cone = RationalCone::from_generators(d, gens);
  if (!cone.pointed()) throw NotPointedError("monoid generators span a cone containing a line");
  if (!cone.contains(target)) return false;

  std::set<IntVector> failed;
  std::function<bool(const IntVector&)> reach = [&](const IntVector& v) -> bool {
    if (is_zero(v)) return true;
    if (failed.count(v)) return false;
    for (const auto& g : gens) {
      IntVector w(d);
      for (std::size_t i = 0; i < d; ++i) w[i] = v[i] - g[i];
      if (cone.contains(w) && reach(w)) return true;
    }
    failed.insert(v);
    return false;
  };
  return reach(target);
}

SaturationCheck is_saturated_monoid(const AffineMonoid& m) {
  const std::size_t d = m.ambient.ambient_rank();
  std::vector<IntVector> gens;
  for (const auto& g : m.generators) {
    if (g.size() != d) throw DimensionError("generator of wrong length");
    if (!m.ambient.contains(g))
      throw ContainmentError("generator " + to_string(g) + " is not in the ambient lattice");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return {};
  RationalCone cone = RationalCone::from_generators(d, gens);
  if (!cone.pointed()) throw NotPointedError("monoid generators span a cone containing a line");
  for (const auto& h : hilbert_basis(cone, m.ambient))
    if (!in_monoid(h, gens)) return {false, h};
  return {};
}

// Coverage -------------------------------------------------------------------

namespace {

struct CoverSearch {
  const RationalCone& cone;
  const std::vector<RationalCone>& pieces;
  std::vector<IntVector> base_rows;

  std::vector<IntVector> region_rays(const std::vector<IntVector>& extra) const {
    std::vector<IntVector> rows = base_rows;
    rows.insert(rows.end(), extra.begin(), extra.end());
    return extreme_rays(rows, cone.ambient_rank());
  }

  bool full(const std::vector<IntVector>& extra) const {
    auto rays = region_rays(extra);
    return !rays.empty() && rank(rays, cone.ambient_rank()) == cone.dimension();
  }

  bool vanishes_on_span(const IntVector& h) const {
    return std::all_of(cone.rays().begin(), cone.rays().end(),
                       [&h](const IntVector& r) { return dot(h, r) == 0; });
  }

  std::optional<RatVector> search(const std::vector<IntVector>& region, std::size_t index) const {
    if (index == pieces.size()) {
      RatVector w(cone.ambient_rank());
      for (const auto& r : region_rays(region))
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += r[i];
      return w;
    }
    std::vector<IntVector> constraints = all_constraints(pieces[index]);
    std::vector<IntVector> acc = region;
    for (const auto& h : constraints) {
      if (vanishes_on_span(h)) continue;
      std::vector<IntVector> outside = acc;
      outside.push_back(negated(h));
      if (full(outside))
        if (auto w = search(outside, index + 1)) return w;
      acc.push_back(h);
      if (!full(acc)) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<RatVector> uncovered_point(const RationalCone& cone,
                                         const std::vector<RationalCone>& pieces) {
  if (!cone.pointed()) throw NotPointedError("coverage test needs a pointed cone");
  for (const auto& p : pieces)
    if (p.ambient_rank() != cone.ambient_rank())
      throw DimensionError("pieces live in a different ambient space");
  if (cone.rays().empty()) return std::nullopt;
  CoverSearch s{cone, pieces, all_constraints(cone)};
  return s.search({}, 0);
}

}  // namespace ssv
