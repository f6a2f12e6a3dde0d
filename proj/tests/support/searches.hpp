#pragma once

// Complex generators and searches shared by the unit tests and the
// acceptance suite.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ssv/complex.hpp"
#include "ssv/degeneration.hpp"
#include "ssv/gluing.hpp"

namespace search {

using namespace ssv;

/// The toric complex on a subdivision: gamma = Z^{1+r}, cell groups gamma
/// intersected with the spans of their cones.
inline SSVComplex toric_complex(std::size_t rank, const std::vector<RationalPolytope>& maximal,
                                Completion mode) {
  LatticeSubgroup gamma = LatticeSubgroup::full(rank + 1);
  std::vector<CellData> cells;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    RationalCone c = cone_over(maximal[i]);
    std::vector<RatVector> rays;
    for (const auto& r : c.rays()) rays.push_back(to_rational(r));
    ids.push_back("M" + std::to_string(i));
    cells.push_back({ids.back(), maximal[i], gamma.intersect_span(rays), std::nullopt});
  }
  return complete_faces(SSVComplex(rank, gamma, cells, ids), mode);
}

/// Random lattice polygon in [0,3]^2, given by its lattice points.
inline std::vector<RatVector> random_polygon_points(std::mt19937& rng) {
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

/// Stars of vertices in random regular subdivisions of lattice polygons,
/// closed under intersection; the common vertex is the unique minimal cell.
inline std::vector<SSVComplex> random_simple_complexes(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SSVComplex> out;
  while (out.size() < count) {
    auto pts = random_polygon_points(rng);
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < pts.size(); ++i) hs.push_back(static_cast<long>(rng() % 4));
    auto cells = regular_subdivision(convex_hull(pts), pts, hs);
    std::set<std::size_t> used;
    for (const auto& c : cells)
      for (const auto& v : c.polytope.vertices())
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (pts[i] == v) used.insert(i);
    std::vector<std::size_t> vertices(used.begin(), used.end());
    const RatVector& v = pts[vertices[rng() % vertices.size()]];
    std::vector<RationalPolytope> star;
    for (const auto& c : cells)
      if (c.polytope.contains(v)) star.push_back(c.polytope);
    if (star.size() < 2) continue;
    out.push_back(toric_complex(2, star, Completion::Intersections));
  }
  return out;
}

/// The triangle (0,0), (4,0), (0,4) with the interior points (1,1), (2,1),
/// (1,2).
inline std::vector<RatVector> triangle_points() {
  std::vector<RatVector> out;
  for (auto p : {std::pair{0L, 0L}, {4L, 0L}, {0L, 4L}, {1L, 1L}, {2L, 1L}, {1L, 2L}})
    out.push_back(make_rat_vector({p.first, p.second}));
  return out;
}

struct H1Candidate {
  std::vector<Rational> heights;
  std::vector<SubdivisionCell> cells;
  SSVComplex complex;
  AbelianInvariants h1;
};

struct H1SearchResult {
  std::size_t subdivisions = 0;  // distinct subdivisions examined
  std::vector<H1Candidate> rank_one;  // first height vector of each hit
};

/// Every regular subdivision of the triangle from heights in {0,1,2} with at
/// most max_cells maximal cells, with toric H^1 of each.
inline H1SearchResult search_rank_one_h1(std::size_t max_cells = 9) {
  const auto pts = triangle_points();
  const RationalPolytope q = convex_hull(pts);
  H1SearchResult result;
  std::set<std::vector<std::vector<std::size_t>>> seen;
  std::vector<Rational> hs(pts.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < pts.size(); ++i, c /= 3) hs[i] = static_cast<long>(c % 3);
    auto cells = regular_subdivision(q, pts, hs);
    if (cells.size() > max_cells) continue;
    std::vector<std::vector<std::size_t>> key;
    for (const auto& cell : cells) key.push_back(cell.points);
    if (!seen.insert(key).second) continue;
    ++result.subdivisions;
    std::vector<RationalPolytope> maximal;
    for (const auto& cell : cells) maximal.push_back(cell.polytope);
    SSVComplex x = toric_complex(2, maximal, Completion::AllFaces);
    AbelianInvariants h1 = diag_cohomology(build_gluing_complex(x, AutMode::Toric), 1).invariants();
    if (h1.free_rank == 1) result.rank_one.push_back({hs, cells, x, h1});
  }
  return result;
}

}  // namespace search
