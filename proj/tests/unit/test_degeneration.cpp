#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssv/degeneration.hpp"
#include "ssv/errors.hpp"

using namespace ssv;
using fixture::group;
using fixture::hull;

namespace {

RationalCone cone(std::size_t dim, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntVector> g;
  for (auto v : gens) g.push_back(make_int_vector(v));
  return RationalCone::from_generators(dim, g);
}

HeightFunction linear(const RationalCone& domain, RatVector functional) {
  return HeightFunction::piecewise({{domain, std::move(functional)}});
}

AffineMonoid naturals(std::size_t d) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = 1;
    gens.push_back(e);
  }
  return {LatticeSubgroup::full(d), gens};
}

std::vector<RatVector> rat_points(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RatVector> out;
  for (auto p : pts) out.push_back(make_rat_vector(p));
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<std::vector<std::size_t>> cell_points(const std::vector<SubdivisionCell>& cells) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : cells) out.push_back(c.points);
  return out;
}

// A random lattice polygon inside [0,3]^2 and its lattice points.
std::vector<RatVector> random_polygon_points(std::mt19937& rng) {
  for (;;) {
    std::vector<RatVector> pts;
    for (int i = 0; i < 4; ++i)
      pts.push_back(make_rat_vector({static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)}));
    RationalPolytope q = convex_hull(pts);
    if (q.dimension() < 2) continue;
    std::vector<RatVector> out;
    for (const auto& p : integer_points(q)) out.push_back(to_rational(p));
    return out;
  }
}

}  // namespace

TEST_CASE("graph cones") {
  RationalCone half_line = cone(1, {{1}});
  CHECK(graph_cone(half_line, linear(half_line, {0})).rays() ==
        std::vector<IntVector>{make_int_vector({0, 1}), make_int_vector({1, 0})});
  CHECK(graph_cone(half_line, linear(half_line, {ratio(1, 2)})).rays() ==
        std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({1, 2})});
  CHECK(graph_cone(half_line, linear(half_line, {1})).rays() ==
        std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({1, 1})});
  // domains that miss part of the cone
  RationalCone quadrant = cone(2, {{1, 0}, {0, 1}});
  RationalCone half = cone(2, {{1, 0}, {1, 1}});
  CHECK_THROWS_AS(graph_cone(quadrant, linear(half, {0, 0})), DomainError);
}

TEST_CASE("graph cone slices are sublevel sets") {
  HeightFunction h = HeightFunction::lifted(rat_points({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), rats({1, 0, 2, 0}));
  RationalCone c = cone_over(hull({{0, 0}, {2, 0}, {0, 2}}));
  RationalCone g = graph_cone(c, h);
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; a + b <= 8; ++b) {
      RatVector x{Rational(4), Rational(a), Rational(b)};
      for (long t = 0; t <= 12; ++t) {
        RatVector y{ratio(t, 4)};
        y.insert(y.end(), x.begin(), x.end());
        CHECK(g.contains(y) == (h(x) <= ratio(t, 4)));
      }
    }
}

TEST_CASE("reducedness and base change") {
  RationalCone half_line = cone(1, {{1}});
  HeightFunction h = linear(half_line, {ratio(1, 2)});
  ReducedCheck r = special_fiber_reduced(h, naturals(1));
  CHECK_FALSE(r.reduced);
  REQUIRE(r.witness);
  CHECK(*r.witness == make_int_vector({1}));
  CHECK(base_change_exponent(h, naturals(1)) == 2);
  CHECK(special_fiber_reduced(h.scaled(2), naturals(1)).reduced);

  RationalCone quadrant = cone(2, {{1, 0}, {0, 1}});
  HeightFunction h2 = linear(quadrant, {ratio(1, 2), ratio(1, 3)});
  ReducedCheck r2 = special_fiber_reduced(h2, naturals(2));
  CHECK_FALSE(r2.reduced);
  CHECK(*r2.witness == make_int_vector({1, 0}));
  CHECK(base_change_exponent(h2, naturals(2)) == 6);

  HeightFunction integral = HeightFunction::piecewise(
      {{cone(2, {{1, 0}, {1, 1}}), {3, -2}}, {cone(2, {{1, 1}, {0, 1}}), {1, 0}}});
  CHECK(special_fiber_reduced(integral, naturals(2)).reduced);
  CHECK(base_change_exponent(integral, naturals(2)) == 1);

  // integral on generators, not on a sum landing in the other domain
  HeightFunction bent = HeightFunction::piecewise(
      {{cone(1, {{1}}), {ratio(1, 2)}}, {cone(1, {{-1}}), {ratio(-1, 2)}}});
  AffineMonoid evens{group(1, {{2}}), {make_int_vector({2}), make_int_vector({-2})}};
  CHECK_THROWS_AS(special_fiber_reduced(bent, evens), NotPointedError);
  AffineMonoid not_saturated{LatticeSubgroup::full(1), {make_int_vector({2}), make_int_vector({3})}};
  CHECK_THROWS_AS(special_fiber_reduced(h, not_saturated), DomainError);
  CHECK_THROWS_AS(special_fiber_reduced(linear(cone(2, {{1, 0}, {1, 1}}), {0, 0}), naturals(2)),
                  DomainError);
}

TEST_CASE("regular subdivisions") {
  auto square = rat_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  RationalPolytope q = convex_hull(square);
  auto flat = regular_subdivision(q, square, rats({5, 5, 5, 5}));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].polytope == q);
  auto affine = regular_subdivision(q, square, rats({0, 1, 2, 3}));
  CHECK(affine.size() == 1);

  auto cut = regular_subdivision(q, square, rats({0, 0, 0, 1}));
  CHECK(cell_points(cut) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}});
  auto other = regular_subdivision(q, square, rats({1, 0, 0, 0}));
  CHECK(cell_points(other) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}});
  auto diagonal = regular_subdivision(q, square, rats({0, 1, 1, 0}));
  CHECK(cell_points(diagonal) == std::vector<std::vector<std::size_t>>{{0, 1, 3}, {0, 2, 3}});

  auto octahedron = rat_points({{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
  RationalPolytope oct = convex_hull(octahedron);
  auto split = regular_subdivision(oct, octahedron, rats({1, 0, 0, 0, 0, 1}));
  REQUIRE(split.size() == 2);
  for (const auto& c : split) {
    CHECK(c.points.size() == 5);
    CHECK(c.polytope.dimension() == 3);
    CHECK(c.polytope.facets().size() == 5);
  }

  CHECK_THROWS_AS(regular_subdivision(q, rat_points({{0, 0}, {1, 0}, {0, 1}}), rats({0, 0, 0})), DomainError);
  CHECK_THROWS_AS(regular_subdivision(q, rat_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}}),
                                      rats({0, 0, 0, 0, 0})),
                  DegenerateLiftError);
  CHECK_THROWS_AS(regular_subdivision(q, square, rats({0, 0, 0})), DimensionError);
}

TEST_CASE("regular subdivision cells meet in common faces") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_polygon_points(rng);
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < pts.size(); ++i) hs.push_back(static_cast<long>(rng() % 4));
    RationalPolytope q = convex_hull(pts);
    auto cells = regular_subdivision(q, pts, hs);
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        auto common = intersect(cells[i].polytope, cells[j].polytope);
        if (!common) continue;
        CHECK(is_face(*common, cells[i].polytope));
        CHECK(is_face(*common, cells[j].polytope));
      }
    std::vector<RationalCone> pieces;
    for (const auto& c : cells) pieces.push_back(cone_over(c.polytope));
    CHECK_FALSE(uncovered_point(cone_over(q), pieces));
  }
}

TEST_CASE("lifted heights are convex and homogeneous") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_polygon_points(rng);
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      hs.push_back(ratio(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3)));
    HeightFunction h = HeightFunction::lifted(pts, hs);
    AffineMonoid m = weight_monoid(convex_hull(pts), LatticeSubgroup::full(3));
    std::vector<IntVector> sample;
    for (long n = 1; n <= 2; ++n)
      for (auto& p : lattice_points(convex_hull(pts), LatticeSubgroup::full(3), n)) sample.push_back(p);
    for (const auto& a : sample) {
      for (long n = 2; n <= 3; ++n) {
        IntVector na = a;
        for (auto& v : na) v *= n;
        CHECK(h(na) == n * h(a));
      }
      for (const auto& b : sample) {
        IntVector s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        CHECK(h(s) <= h(a) + h(b));
      }
    }
    // at the points themselves the lower hull never exceeds the given height
    for (std::size_t i = 0; i < pts.size(); ++i) {
      RatVector x{Rational(1)};
      x.insert(x.end(), pts[i].begin(), pts[i].end());
      CHECK(h(x) <= hs[i]);
    }
    CHECK(m.generators.size() >= pts.size());
  }
}

TEST_CASE("base change exponents agree with a brute-force lcm") {
  std::mt19937 rng(23);
  const LatticeSubgroup z3 = LatticeSubgroup::full(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_polygon_points(rng);
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      hs.push_back(ratio(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 6)));
    HeightFunction h = HeightFunction::lifted(pts, hs);
    RationalPolytope q = convex_hull(pts);
    AffineMonoid m = weight_monoid(q, z3);

    Integer brute = 1;
    for (long n = 1; n <= 3; ++n)
      for (const auto& p : lattice_points(q, z3, n)) {
        Rational v = h(p);
        mpz_lcm(brute.get_mpz_t(), brute.get_mpz_t(), v.get_den_mpz_t());
      }
    Integer n = base_change_exponent(h, m);
    CHECK(n == brute);
    CHECK(special_fiber_reduced(h, m).reduced == (n == 1));
    CHECK(special_fiber_reduced(h.scaled(n), m).reduced);
    for (long p : {2L, 3L, 5L})
      if (n % p == 0) CHECK_FALSE(special_fiber_reduced(h.scaled(n / p), m).reduced);
  }
}

TEST_CASE("special fiber complexes") {
  const LatticeSubgroup z3 = LatticeSubgroup::full(3);
  auto square = rat_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  RationalPolytope q = convex_hull(square);

  SSVComplex trivial = special_fiber_complex(z3, q, HeightFunction::lifted(square, rats({0, 0, 0, 0})));
  CHECK(trivial.maximal().size() == 1);
  CHECK(trivial.cell("C1").polytope == q);
  CHECK(trivial.cell("C1").weight_group == z3);
  CHECK(validate_complex(trivial).passed());

  SSVComplex cut = special_fiber_complex(z3, q, HeightFunction::lifted(square, rats({0, 0, 0, 1})));
  CHECK(cut.maximal().size() == 2);
  CHECK(cut.cells().size() == 11);
  ValidationReport r = validate_complex(cut);
  CHECK(r.passed());
  CHECK(r.moment_set_convex);

  // heights 0, 0, 1 at 0, 2, 4 recover the chain
  LatticeSubgroup gamma = group(2, {{1, 0}, {0, 2}});
  SSVComplex chain = special_fiber_complex(gamma, hull({{0}, {4}}),
                                           HeightFunction::lifted(rat_points({{0}, {2}, {4}}), rats({0, 0, 1})),
                                           std::string("A1"));
  SSVComplex expected = fixture::chain();
  CHECK(chain.cells().size() == expected.cells().size());
  for (const auto& c : expected.cells()) {
    const CellData* mine = chain.find_polytope(c.polytope);
    REQUIRE(mine);
    CHECK(mine->weight_group == c.weight_group);
  }
  CHECK(section_module(chain, 1, RootDatum::from_label("A1")).total_dimension == 9);

  CHECK_THROWS_AS(special_fiber_complex(z3, q, HeightFunction::lifted(square, {0, 0, 0, ratio(1, 2)})),
                  NotReducedError);
}

TEST_CASE("special fibers keep the number of sections") {
  std::mt19937 rng(31);
  const LatticeSubgroup z3 = LatticeSubgroup::full(3);
  for (int trial = 0; trial < 15; ++trial) {
    auto pts = random_polygon_points(rng);
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < pts.size(); ++i) hs.push_back(static_cast<long>(rng() % 5));
    RationalPolytope q = convex_hull(pts);
    HeightFunction h = HeightFunction::lifted(pts, hs);
    h = h.scaled(base_change_exponent(h, weight_monoid(q, z3)));
    SSVComplex x = special_fiber_complex(z3, q, h);
    CHECK(validate_complex(x).passed());
    for (long n = 0; n <= 4; ++n) {
      std::set<IntVector> union_points;
      for (const CellData* c : x.maximal_cells())
        for (const auto& p : lattice_points(c->polytope, c->weight_group, n)) union_points.insert(p);
      CHECK(union_points.size() == lattice_points(q, z3, n).size());
    }
  }
}
