#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "ssv/errors.hpp"
#include "ssv/root_data.hpp"

using namespace ssv;

namespace {

Weight w(std::initializer_list<long> v) { return make_rat_vector(v); }

// Hand-entered rank <= 2 data: Gram matrix of fundamental weights and
// positive roots, both in fundamental-weight coordinates.
struct SmallSystem {
  std::vector<RatVector> gram;
  std::vector<RatVector> positive;
  std::vector<RatVector> simple;
};

SmallSystem small_system(const std::string& label) {
  if (label == "A1") return {{{ratio(1, 2)}}, {w({2})}, {w({2})}};
  if (label == "A2")
    return {{{ratio(2, 3), ratio(1, 3)}, {ratio(1, 3), ratio(2, 3)}},
            {w({2, -1}), w({-1, 2}), w({1, 1})},
            {w({2, -1}), w({-1, 2})}};
  return {{{ratio(1, 2), 0}, {0, ratio(1, 2)}}, {w({2, 0}), w({0, 2})}, {w({2, 0}), w({0, 2})}};
}

Rational form(const SmallSystem& s, const RatVector& a, const RatVector& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t += a[i] * s.gram[i][j] * b[j];
  return t;
}

// Freudenthal's recursion for weight multiplicities; returns dim V(lambda).
Integer freudenthal_dimension(const SmallSystem& s, const Weight& lambda, int depth_bound) {
  const std::size_t r = lambda.size();
  Weight rho(r, Rational(1));
  auto plus = [](RatVector a, const RatVector& b, const Rational& k) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
  };
  Rational top = form(s, plus(lambda, rho, 1), plus(lambda, rho, 1));
  std::map<Weight, Rational> mult;
  mult[lambda] = 1;
  Integer total = 1;
  // mu = lambda - sum n_i alpha_i, visited by increasing depth sum n_i
  for (int depth = 1; depth <= depth_bound; ++depth) {
    std::vector<std::vector<int>> splits;
    if (r == 1) splits.push_back({depth});
    else
      for (int a = 0; a <= depth; ++a) splits.push_back({a, depth - a});
    for (const auto& n : splits) {
      Weight mu = lambda;
      for (std::size_t i = 0; i < r; ++i) mu = plus(mu, s.simple[i], -n[i]);
      Rational rhs = 0;
      for (const auto& alpha : s.positive)
        for (int k = 1; k <= 2 * depth_bound; ++k) {
          Weight up = plus(mu, alpha, k);
          auto it = mult.find(up);
          if (it != mult.end()) rhs += 2 * it->second * form(s, up, alpha);
        }
      Rational coeff = top - form(s, plus(mu, rho, 1), plus(mu, rho, 1));
      if (coeff == 0 || rhs == 0) continue;
      Rational m = rhs / coeff;
      mult[mu] = m;
      CHECK(m.get_den() == 1);
      total += m.get_num();
    }
  }
  return total;
}

Rational cross(const RatVector& o, const RatVector& a, const RatVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Clips a convex polygon (counterclockwise vertex list) to x_i >= 0.
std::vector<RatVector> clip_to_quadrant(std::vector<RatVector> poly) {
  for (std::size_t axis = 0; axis < 2; ++axis) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      bool ina = a[axis] >= 0, inb = b[axis] >= 0;
      if (ina) out.push_back(a);
      if (ina != inb) {
        Rational t = a[axis] / (a[axis] - b[axis]);
        out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly = out;
  }
  std::sort(poly.begin(), poly.end());
  poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
  // drop points in the middle of an edge
  std::vector<RatVector> corners;
  for (const auto& p : poly) {
    bool between = false;
    for (const auto& a : poly)
      for (const auto& b : poly)
        if (a != p && b != p && a != b && cross(a, b, p) == 0 &&
            std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
            std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]))
          between = true;
    if (!between) corners.push_back(p);
  }
  return corners;
}

}  // namespace

TEST_CASE("labels and Cartan data") {
  auto a2 = RootDatum::from_label("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.positive_roots().size() == 3);
  CHECK(RootDatum::from_label("A1xA1").positive_roots().size() == 2);
  CHECK(RootDatum::from_label("A3").positive_roots().size() == 6);
  CHECK(RootDatum::from_label("B2").positive_roots().size() == 4);
  CHECK(RootDatum::from_label("C3").positive_roots().size() == 9);
  CHECK(RootDatum::from_label("B4").positive_roots().size() == 16);
  CHECK(RootDatum::from_label("D4").positive_roots().size() == 12);
  CHECK(RootDatum::from_label("A2xA2").rank() == 4);
  CHECK_THROWS_AS(RootDatum::from_label("A5"), RankError);
  CHECK_THROWS_AS(RootDatum::from_label("A2xA3"), RankError);
  CHECK_THROWS_AS(RootDatum::from_label("E6"), ParseError);
  CHECK_THROWS_AS(RootDatum::from_label("A"), ParseError);
  CHECK_THROWS_AS(RootDatum::from_label("A1x"), ParseError);
  // fundamental weights are dual to simple coroots: 2 (omega_i, alpha_j) / (alpha_j, alpha_j) = delta_ij
  for (const char* label : {"A3", "B3", "C3", "D4", "A1xB2"}) {
    auto d = RootDatum::from_label(label);
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = 0; j < d.rank(); ++j) {
        Weight omega(d.rank());
        omega[i] = 1;
        auto a = d.simple_root(j);
        CHECK(2 * d.form(omega, a) / d.form(a, a) == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("Weyl orbits") {
  auto a1 = RootDatum::from_label("A1");
  CHECK(weyl_orbit(a1, w({3})) == std::vector<Weight>{w({-3}), w({3})});
  auto a2 = RootDatum::from_label("A2");
  CHECK(weyl_orbit(a2, w({1, 0})) == std::vector<Weight>{w({-1, 1}), w({0, -1}), w({1, 0})});
  auto a11 = RootDatum::from_label("A1xA1");
  CHECK(weyl_orbit(a11, w({2, 3})).size() == 4);
  CHECK(weyl_orbit(a11, w({2, 0})).size() == 2);
  // orbit sizes divide |W| and the orbit is stable
  struct Case {
    const char* label;
    int order;
  };
  for (auto c : {Case{"A3", 24}, Case{"B3", 48}, Case{"C2", 8}, Case{"D4", 192}, Case{"A4", 120}}) {
    auto d = RootDatum::from_label(c.label);
    Weight lambda(d.rank());
    lambda[0] = 1;
    lambda[d.rank() - 1] += 2;
    auto orbit = weyl_orbit(d, lambda);
    CHECK(c.order % static_cast<int>(orbit.size()) == 0);
    for (const auto& mu : orbit)
      for (std::size_t i = 0; i < d.rank(); ++i)
        CHECK(std::binary_search(orbit.begin(), orbit.end(), d.reflect(i, mu)));
    Weight regular(d.rank(), Rational(1));
    CHECK(static_cast<int>(weyl_orbit(d, regular).size()) == c.order);
  }
  CHECK_THROWS_AS(weyl_orbit(a2, w({1})), DimensionError);
}

TEST_CASE("Weyl dimension formula") {
  auto a1 = RootDatum::from_label("A1");
  for (int n = 0; n < 8; ++n) CHECK(weyl_dimension(a1, w({n})) == n + 1);
  auto a2 = RootDatum::from_label("A2");
  CHECK(weyl_dimension(a2, w({1, 1})) == 8);
  CHECK(weyl_dimension(a2, w({0, 0})) == 1);
  CHECK(weyl_dimension(RootDatum::from_label("B2"), w({0, 1})) == 4);
  CHECK(weyl_dimension(RootDatum::from_label("B2"), w({1, 0})) == 5);
  CHECK(weyl_dimension(RootDatum::from_label("C3"), w({1, 0, 0})) == 6);
  CHECK(weyl_dimension(RootDatum::from_label("B3"), w({0, 0, 1})) == 8);
  CHECK(weyl_dimension(RootDatum::from_label("D4"), w({0, 1, 0, 0})) == 28);
  CHECK(weyl_dimension(RootDatum::from_label("A3"), w({0, 1, 0})) == 6);
  CHECK_THROWS_AS(weyl_dimension(a1, w({-1})), NotDominantError);
  std::vector<RatVector> half{{ratio(1, 2)}};
  CHECK_THROWS_AS(weyl_dimension(a1, half[0]), NotDominantError);
}

TEST_CASE("Weyl dimension agrees with Freudenthal multiplicities") {
  for (const char* label : {"A1", "A2", "A1xA1"}) {
    auto d = RootDatum::from_label(label);
    auto sys = small_system(label);
    const int coords = static_cast<int>(d.rank());
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= (coords == 2 ? 4 : 0); ++b) {
        Weight lambda = coords == 1 ? w({a}) : w({a, b});
        CHECK(weyl_dimension(d, lambda) == freudenthal_dimension(sys, lambda, 20));
        for (const auto& mu : weyl_orbit(d, lambda))
          if (is_dominant(mu)) CHECK(mu == lambda);
      }
  }
}

TEST_CASE("dominant hulls") {
  auto a1 = RootDatum::from_label("A1");
  CHECK(dominant_hull(a1, w({3})).vertices() == std::vector<RatVector>{w({0}), w({3})});
  auto a2 = RootDatum::from_label("A2");
  auto h = dominant_hull(a2, w({1, 0}));
  RatVector half_omega2{0, ratio(1, 2)};
  CHECK(std::find(h.vertices().begin(), h.vertices().end(), w({1, 0})) != h.vertices().end());
  CHECK(std::find(h.vertices().begin(), h.vertices().end(), half_omega2) != h.vertices().end());
  CHECK(h.vertices() == std::vector<RatVector>{w({0, 0}), half_omega2, w({1, 0})});
  CHECK(h.vertices() == clip_to_quadrant({w({1, 0}), w({-1, 1}), w({0, -1})}));
  auto a11 = RootDatum::from_label("A1xA1");
  CHECK(dominant_hull(a11, w({2, 3})).vertices() ==
        std::vector<RatVector>{w({0, 0}), w({0, 3}), w({2, 0}), w({2, 3})});
  CHECK_THROWS_AS(dominant_hull(a1, w({-1})), NotDominantError);
}

TEST_CASE("dominant hulls of A2 weights agree with polygon clipping") {
  auto a2 = RootDatum::from_label("A2");
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      auto orbit = weyl_orbit(a2, w({a, b}));
      // counterclockwise order around the origin in weight coordinates,
      // after mapping to a Euclidean frame where the form is standard
      auto angle_key = [](const RatVector& p) {
        double x = p[0].get_d() + 0.5 * p[1].get_d();
        double y = 0.8660254037844386 * p[1].get_d();
        return std::atan2(y, x);
      };
      std::sort(orbit.begin(), orbit.end(),
                [&](const RatVector& p, const RatVector& q) { return angle_key(p) < angle_key(q); });
      auto h = dominant_hull(a2, w({a, b}));
      CHECK(h.vertices() == clip_to_quadrant(orbit));
      CHECK(std::find(h.vertices().begin(), h.vertices().end(), w({a, b})) != h.vertices().end());
      for (const auto& v : h.vertices()) CHECK(is_dominant(v));
    }
}

TEST_CASE("W-admissibility") {
  auto a1 = RootDatum::from_label("A1");
  auto seg = [](long lo, long hi) { return convex_hull(std::vector<RatVector>{w({lo}), w({hi})}); };
  CHECK(is_w_admissible(a1, seg(-3, 3)));
  CHECK(is_w_admissible(a1, seg(1, 2)));
  CHECK_FALSE(is_w_admissible(a1, seg(-1, 2)));
  CHECK_FALSE(is_w_admissible(a1, seg(-2, -1)));
  for (const char* label : {"A2", "A1xA1", "B2"}) {
    auto d = RootDatum::from_label(label);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        CHECK(is_w_admissible(d, convex_hull(weyl_orbit(d, w({a, b})))));
      }
  }
  CHECK(weyl_translates(a1, seg(1, 2)).size() == 2);
  CHECK(weyl_translates(a1, seg(-3, 3)).size() == 1);
}
