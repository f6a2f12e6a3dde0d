#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "searches.hpp"
#include "ssv/errors.hpp"
#include "ssv/gluing.hpp"
#include "ssv/rational_linalg.hpp"

using namespace ssv;
using fixture::group;
using fixture::hull;

namespace {

AbelianInvariants h(const SSVComplex& x, AutMode mode, int i) {
  return diag_cohomology(build_gluing_complex(x, mode), i).invariants();
}

// Invariants of Z^n / rowspan(rows) from determinantal divisors.
AbelianInvariants oracle_cokernel(const std::vector<IntVector>& rows, std::size_t n) {
  AbelianInvariants out;
  IntVector diag = rows.empty() ? IntVector{} : oracle::smith_diagonal(IntegerMatrix::from_rows(rows, n));
  std::size_t r = 0;
  for (const auto& d : diag)
    if (d != 0) {
      ++r;
      if (abs(d) > 1) out.torsion.push_back(abs(d));
    }
  out.free_rank = n - r;
  return out;
}

// A triangle coned off from the interior point (1,1), closed under
// intersection.
SSVComplex fan() {
  std::vector<CellData> cells{
      {"A", hull({{0, 0}, {3, 0}, {1, 1}}), LatticeSubgroup::full(3), std::nullopt},
      {"B", hull({{3, 0}, {0, 3}, {1, 1}}), LatticeSubgroup::full(3), std::nullopt},
      {"C", hull({{0, 3}, {0, 0}, {1, 1}}), LatticeSubgroup::full(3), std::nullopt},
  };
  return complete_faces(SSVComplex(2, LatticeSubgroup::full(3), cells, {"A", "B", "C"}),
                        Completion::Intersections);
}

// The fan with G_m on every cell and identity restrictions, except that
// A -> A n B is multiplication by `twist`.
SSVComplex fan_with_aut(long twist) {
  SSVComplex base = fan();
  std::vector<CellData> cells = base.cells();
  auto id_of = [&](std::initializer_list<std::initializer_list<long>> pts) {
    return base.find_polytope(hull(pts))->id;
  };
  const std::string ab = id_of({{3, 0}, {1, 1}});
  const std::string ac = id_of({{0, 0}, {1, 1}});
  const std::string bc = id_of({{0, 3}, {1, 1}});
  const std::string abc = id_of({{1, 1}});
  auto one = [](long v) {
    IntegerMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  for (auto& c : cells) {
    std::vector<AutRestriction> r;
    if (c.id == "A") r = {{ab, one(twist)}, {ac, one(1)}};
    if (c.id == "B") r = {{ab, one(1)}, {bc, one(1)}};
    if (c.id == "C") r = {{ac, one(1)}, {bc, one(1)}};
    if (c.id == ab || c.id == ac || c.id == bc) r = {{abc, one(1)}};
    c.aut = AutData{DiagonalizableGroup::torus(1), r};
  }
  return SSVComplex(2, base.gamma(), cells, base.maximal());
}

// Applies lambda -> U lambda + t b to every weight (t, lambda).
IntVector move_weight(const IntVector& v, const IntegerMatrix& u, const IntVector& b) {
  IntVector lam(v.begin() + 1, v.end());
  IntVector img = lam * u.transposed();
  IntVector out{v[0]};
  for (std::size_t i = 0; i < img.size(); ++i) out.push_back(img[i] + v[0] * b[i]);
  return out;
}

SSVComplex moved(const SSVComplex& x, const IntegerMatrix& u, const IntVector& b) {
  auto move_group = [&](const LatticeSubgroup& g) {
    std::vector<IntVector> gens;
    for (const auto& v : g.basis()) gens.push_back(move_weight(v, u, b));
    return LatticeSubgroup(x.rank() + 1, gens);
  };
  std::vector<CellData> cells;
  for (const auto& c : x.cells()) {
    std::vector<RatVector> pts;
    for (const auto& v : c.polytope.vertices()) {
      RatVector w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = to_rational(b)[i];
        for (std::size_t j = 0; j < v.size(); ++j) w[i] += u(i, j) * v[j];
      }
      pts.push_back(w);
    }
    cells.push_back({c.id, convex_hull(pts), move_group(c.weight_group), c.aut});
  }
  return SSVComplex(x.rank(), move_group(x.gamma()), cells, x.maximal());
}

}  // namespace

TEST_CASE("single cells have no higher cochains") {
  SSVComplex x = singleton_complex(sl2_catalog(SL2Kind::Fe, {.e = 2, .n_minus = 2, .n_plus = 4}));
  GluingComplex c = build_gluing_complex(x, AutMode::Toric);
  CHECK(c.c0.size() == 1);
  CHECK(c.c1.empty());
  CHECK(c.c2.empty());
  CHECK(diag_cohomology(c, 0) == DiagonalizableGroup::torus(2));
  CHECK(diag_cohomology(c, 1).invariants().trivial());
  CHECK_THROWS_AS(diag_cohomology(c, 2), DomainError);
}

TEST_CASE("toric chain") {
  GluingComplex c = build_gluing_complex(fixture::chain(), AutMode::Toric);
  REQUIRE(c.c0.size() == 2);
  REQUIRE(c.c1.size() == 1);
  CHECK(c.c0[0].group == DiagonalizableGroup::torus(2));
  CHECK(c.c0[1].group == DiagonalizableGroup::torus(2));
  CHECK(c.c1[0].group == DiagonalizableGroup::torus(1));
  CHECK(c.c1[0].face == "Y12");
  CHECK(c.c1[0].cover == std::vector<std::string>{"Y1", "Y2"});
  // both maximal groups have Hermite basis (1,0),(0,2), and (1,2) = (1,0) + (0,2)
  CHECK(c.d0 == IntegerMatrix{{-1, -1, 1, 1}});
  CHECK(c.d1.rows() == 0);
  AbelianInvariants h0 = diag_cohomology(c, 0).invariants();
  CHECK(h0.free_rank == 3);
  CHECK(h0.torsion_free());
  CHECK(diag_cohomology(c, 1).invariants().trivial());
}

TEST_CASE("two-triangle complex with supplied automorphisms") {
  SSVComplex x = fixture::ex244();
  GluingComplex c = build_gluing_complex(x, AutMode::Supplied);
  CHECK(c.c0.size() == 2);
  CHECK(c.c1.size() == 1);
  CHECK(c.c2.empty());
  DiagonalizableGroup h0 = diag_cohomology(c, 0);
  CHECK(h0.invariants().free_rank == 2);
  CHECK(h0.invariants().torsion_free());
  CHECK(describe(h0) == "G_m^2");
  CHECK(diag_cohomology(c, 1).invariants().trivial());
  CHECK(describe(diag_cohomology(c, 1)) == "trivial");

  CHECK_THROWS_AS(build_gluing_complex(fixture::ex244(false), AutMode::Supplied), MissingAutError);
  AbelianInvariants t0 = h(x, AutMode::Toric, 0);
  CHECK(t0.free_rank == 4);
  CHECK(h(x, AutMode::Toric, 1).trivial());
}

TEST_CASE("restriction data is checked") {
  SSVComplex good = fan_with_aut(1);
  GluingComplex c = build_gluing_complex(good, AutMode::Supplied);
  CHECK(c.c1.size() == 3);
  CHECK(c.c2.size() == 1);
  CHECK(diag_cohomology(c, 0).invariants() == DiagonalizableGroup::torus(1).invariants());
  CHECK(diag_cohomology(c, 1).invariants().trivial());
  CHECK_THROWS_AS(build_gluing_complex(fan_with_aut(2), AutMode::Supplied), IncompatibleRestrictionError);

  // a restriction that does not respect the relation of mu_2 x G_m
  SSVComplex x = fixture::ex244();
  std::vector<CellData> cells = x.cells();
  cells[2].aut = AutData{DiagonalizableGroup(2, {make_int_vector({2, 0})}), {}};
  cells[0].aut = AutData{DiagonalizableGroup::torus(2), {{"Q12", IntegerMatrix::identity(2)}}};
  SSVComplex bad(2, x.gamma(), cells, x.maximal());
  CHECK_THROWS_AS(build_gluing_complex(bad, AutMode::Supplied), IncompatibleRestrictionError);

  cells[1].aut->restrictions.clear();
  CHECK_THROWS_AS(build_gluing_complex(SSVComplex(2, x.gamma(), cells, x.maximal()), AutMode::Supplied),
                  MissingAutError);
}

TEST_CASE("torsion is carried through") {
  // C^0 = mu_2 x G_m twice, glued along the identity on a common mu_2 x G_m
  SSVComplex x = fixture::ex244();
  std::vector<CellData> cells = x.cells();
  DiagonalizableGroup g(2, {make_int_vector({2, 0})});
  cells[0].aut = AutData{g, {{"Q12", IntegerMatrix::identity(2)}}};
  cells[1].aut = AutData{g, {{"Q12", IntegerMatrix::identity(2)}}};
  cells[2].aut = AutData{g, {}};
  GluingComplex c = build_gluing_complex(SSVComplex(2, x.gamma(), cells, x.maximal()), AutMode::Supplied);
  CHECK(describe(diag_cohomology(c, 0)) == "G_m x mu_2");
  CHECK(diag_cohomology(c, 1).invariants().trivial());
}

TEST_CASE("H^0 agrees with a determinantal-divisor cokernel") {
  for (const SSVComplex& x : {fixture::chain(), fixture::ex244(), fan()}) {
    GluingComplex c = build_gluing_complex(x, AutMode::Toric);
    DiagonalizableGroup x0 = c.term(0);
    AbelianInvariants expected = oracle_cokernel(c.d0.row_list(), x0.generators());
    CHECK(diag_cohomology(c, 0).invariants() == expected);

    // H^1 rank from rational ranks of the dual differentials
    std::vector<IntVector> d0 = c.d0.row_list();
    std::size_t kernel_rank = c.term(1).generators() - rank(d0, x0.generators());
    std::size_t image_rank = rank(c.d1.row_list(), c.term(1).generators());
    CHECK(diag_cohomology(c, 1).invariants().free_rank == kernel_rank - image_rank);
  }
}

TEST_CASE("cohomology is invariant under unimodular changes of coordinates") {
  std::mt19937 rng(11);
  for (const SSVComplex& x : {fixture::ex244(false), fan()}) {
    AbelianInvariants h0 = h(x, AutMode::Toric, 0);
    AbelianInvariants h1 = h(x, AutMode::Toric, 1);
    for (int trial = 0; trial < 5; ++trial) {
      IntegerMatrix u = oracle::random_unimodular(rng, 2);
      IntVector b = make_int_vector({static_cast<long>(rng() % 5), static_cast<long>(rng() % 5)});
      SSVComplex y = moved(x, u, b);
      CHECK(h(y, AutMode::Toric, 0) == h0);
      CHECK(h(y, AutMode::Toric, 1) == h1);
    }
  }
}

TEST_CASE("posets with a unique minimal element have trivial H^1") {
  auto complexes = search::random_simple_complexes(50, 3);
  CHECK(complexes.size() == 50);
  for (const auto& x : complexes) {
    REQUIRE(validate_complex(x).passed());
    REQUIRE(orbit_poset(x).simple());
    GluingComplex c = build_gluing_complex(x, AutMode::Toric);
    CHECK(diag_cohomology(c, 1).invariants().trivial());
  }
}

TEST_CASE("a triangle subdivision with H^1 of rank one") {
  search::H1SearchResult r = search::search_rank_one_h1();
  CHECK(r.subdivisions == 45);
  REQUIRE(r.rank_one.size() == 1);
  const search::H1Candidate& hit = r.rank_one.front();
  CHECK(hit.heights == std::vector<Rational>{1, 1, 1, 0, 0, 0});
  CHECK(hit.h1.torsion_free());
  // the inner triangle and three trapezoids, no three of which share a point
  REQUIRE(hit.cells.size() == 4);
  CHECK(hit.cells.back().points == std::vector<std::size_t>{3, 4, 5});
  GluingComplex c = build_gluing_complex(hit.complex, AutMode::Toric);
  CHECK(c.c1.size() == 6);
  CHECK(c.c2.size() == 3);
}
