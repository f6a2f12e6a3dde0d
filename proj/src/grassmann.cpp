#include "ssv/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "ssv/errors.hpp"

namespace ssv {

long GradedShape::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0L); }

void check_shape(const GradedShape& shape) {
  if (shape.ranks.empty()) throw ParamError("a graded module needs at least one part");
  for (long k : shape.ranks)
    if (k < 1) throw ParamError("ranks of the graded parts must be positive");
  if (shape.r < 0 || shape.r > shape.total())
    throw ParamError("corank " + std::to_string(shape.r) + " is outside [0, " +
                     std::to_string(shape.total()) + "]");
}

std::vector<IntVector> weight_set(const GradedShape& shape) {
  check_shape(shape);
  const std::size_t n = shape.parts();
  std::vector<IntVector> out;
  std::vector<long> cur(n);
  // suffix[a] = largest possible sum of parts a..n
  std::vector<long> suffix(n + 1, 0);
  for (std::size_t a = n; a-- > 0;) suffix[a] = suffix[a + 1] + shape.ranks[a];
  auto rec = [&](auto&& self, std::size_t a, long left) -> void {
    if (a == n) {
      if (left == 0) {
        IntVector v;
        for (long c : cur) v.emplace_back(c);
        out.push_back(std::move(v));
      }
      return;
    }
    for (long i = 0; i <= std::min(shape.ranks[a], left); ++i) {
      if (left - i > suffix[a + 1]) continue;
      cur[a] = i;
      self(self, a + 1, left - i);
    }
  };
  rec(rec, 0, shape.r);
  return out;
}

IndexSet parse_index_set(const std::string& key) {
  IndexSet out;
  for (char ch : key) {
    if (ch < '0' || ch > '9') throw ParseError("index set key '" + key + "' must consist of digits");
    out.push_back(static_cast<std::size_t>(ch - '0'));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("index set key '" + key + "' repeats an index");
  return out;
}

std::string index_set_key(const IndexSet& set) {
  std::string s;
  for (auto i : set) s += std::to_string(i);
  return s;
}

namespace {

using Mask = unsigned;

IndexSet to_set(Mask m, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1U) s.push_back(i);
  return s;
}

long generic_value(const GradedShape& shape, Mask m) {
  long outside = 0;
  for (std::size_t i = 0; i < shape.parts(); ++i)
    if (!(m >> i & 1U)) outside += shape.ranks[i];
  return std::max(0L, shape.r - outside);
}

// d_I for every subset, indexed by bitmask.
std::vector<long> rank_table(const GradedShape& shape, const RankFunctionData& d) {
  const std::size_t n = shape.parts();
  if (n > 16) throw ParamError("too many graded parts for rank data");
  std::vector<long> table(std::size_t{1} << n);
  for (Mask m = 0; m < table.size(); ++m) table[m] = generic_value(shape, m);
  for (const auto& [set, value] : d.values) {
    Mask m = 0;
    for (auto i : set) {
      if (i >= n)
        throw InvalidRankDataError("d_" + index_set_key(set) + " names a part beyond " +
                                   std::to_string(n - 1));
      m |= 1U << i;
    }
    table[m] = value;
  }
  return table;
}

}  // namespace

long rank_value(const GradedShape& shape, const RankFunctionData& d, const IndexSet& set) {
  Mask m = 0;
  for (auto i : set) {
    if (i >= shape.parts()) throw InvalidRankDataError("index " + std::to_string(i) + " out of range");
    m |= 1U << i;
  }
  auto it = d.values.find(set);
  return it != d.values.end() ? it->second : generic_value(shape, m);
}

void check_rank_data(const GradedShape& shape, const RankFunctionData& d) {
  check_shape(shape);
  const std::size_t n = shape.parts();
  auto table = rank_table(shape, d);
  const Mask full = static_cast<Mask>(table.size() - 1);
  if (table[0] != 0) throw InvalidRankDataError("d of the empty set must be 0");
  if (table[full] != shape.r)
    throw InvalidRankDataError("d of the full set must be r = " + std::to_string(shape.r));
  for (Mask i = 0; i <= full; ++i)
    if (table[i] < 0) throw InvalidRankDataError("d_" + index_set_key(to_set(i, n)) + " is negative");
  for (Mask i = 0; i <= full; ++i)
    for (Mask j = i + 1; j <= full; ++j)
      if (table[i] + table[j] > table[i | j] + table[i & j])
        throw InvalidRankDataError("d_" + index_set_key(to_set(i, n)) + " + d_" +
                                   index_set_key(to_set(j, n)) + " exceeds d of their union plus d of their intersection");
}

Fullness lattice_fullness(const std::vector<IntVector>& points) {
  if (points.empty()) return {};
  std::set<IntVector> have(points.begin(), points.end());
  for (const auto& p : integer_points(convex_hull(points)))
    if (!have.count(p)) return {false, p};
  return {};
}

ThinCellWeights thin_cell_weight_set(const GradedShape& shape, const RankFunctionData& d) {
  check_rank_data(shape, d);
  auto table = rank_table(shape, d);
  ThinCellWeights out;
  for (auto& p : weight_set(shape)) {
    bool keep = true;
    for (Mask m = 1; m < table.size() && keep; ++m) {
      Integer s = 0;
      for (std::size_t i = 0; i < shape.parts(); ++i)
        if (m >> i & 1U) s += p[i];
      keep = s >= table[m];
    }
    if (keep) out.points.push_back(std::move(p));
  }
  out.fullness = lattice_fullness(out.points);
  return out;
}

bool is_matroid_polytope(const RationalPolytope& p) {
  const auto& vs = p.vertices();
  if (!p.is_lattice()) throw NonLatticeError("matroid polytopes have integral vertices");
  if (vs.empty()) return true;
  const Rational level = std::accumulate(vs.front().begin(), vs.front().end(), Rational(0));
  for (const auto& v : vs)
    if (std::accumulate(v.begin(), v.end(), Rational(0)) != level)
      throw DomainError("vertex " + to_string(v) + " leaves the hyperplane of coordinate sum " +
                        to_string(level));
  for (const auto& f : enumerate_faces(p).faces) {
    if (f.dimension != 1) continue;
    RatVector dir = vs[f.vertex_indices[1]];
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] -= vs[f.vertex_indices[0]][i];
    IntVector e = primitive_integer_direction(dir);
    int plus = 0, minus = 0;
    for (const auto& x : e) {
      if (x == 1) ++plus;
      else if (x == -1) ++minus;
      else if (x != 0) return false;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

namespace {

using CellKey = std::vector<std::vector<std::size_t>>;

// Permutations of the weight set induced by permuting parts of equal rank.
std::vector<std::vector<std::size_t>> point_symmetries(const GradedShape& shape,
                                                       const std::vector<IntVector>& s) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = i;
  std::vector<std::size_t> sigma(shape.parts());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < sigma.size() && ok; ++a) ok = shape.ranks[sigma[a]] == shape.ranks[a];
    if (!ok) continue;
    std::vector<std::size_t> perm(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      IntVector q(s[i].size());
      for (std::size_t a = 0; a < sigma.size(); ++a) q[a] = s[i][sigma[a]];
      perm[i] = index.at(q);
    }
    out.push_back(std::move(perm));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct Found {
  std::map<CellKey, std::vector<long>> best;

  void offer(CellKey key, std::vector<long> heights) {
    auto [it, inserted] = best.try_emplace(std::move(key), heights);
    if (!inserted && heights < it->second) it->second = std::move(heights);
  }
};

}  // namespace

std::vector<MatroidSubdivision> enumerate_matroid_subdivisions(const GradedShape& shape,
                                                               const MatroidSearchOptions& options) {
  const auto s = weight_set(shape);
  if (options.cap < 0) throw ParamError("height cap must be nonnegative");
  if (s.size() > 12)
    throw SearchBudgetError("weight set has " + std::to_string(s.size()) + " points; at most 12 are searched");
  const std::size_t base = static_cast<std::size_t>(options.cap) + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (total > options.budget / base)
      throw SearchBudgetError("(cap + 1)^" + std::to_string(s.size()) + " height vectors exceed the budget of " +
                              std::to_string(options.budget));
    total *= base;
  }

  std::vector<RatVector> pts;
  for (const auto& p : s) pts.push_back(to_rational(p));
  const RationalPolytope q = convex_hull(pts);
  const auto syms = point_symmetries(shape, s);

  auto worker = [&](std::size_t start, std::size_t stride, Found& found) {
    std::map<std::vector<std::size_t>, bool> matroid_cache;
    std::vector<long> h(s.size()), image(s.size());
    for (std::size_t k = start; k < total; k += stride) {
      std::size_t rest = k;
      for (std::size_t i = s.size(); i-- > 0;) {
        h[i] = static_cast<long>(rest % base);
        rest /= base;
      }
      if (*std::min_element(h.begin(), h.end()) != 0) continue;
      bool canonical = true;
      for (const auto& perm : syms) {
        for (std::size_t i = 0; i < s.size(); ++i) image[perm[i]] = h[i];
        if (image < h) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;

      std::vector<Rational> hs(h.begin(), h.end());
      auto cells = regular_subdivision(q, pts, hs);
      std::vector<bool> covered(s.size());
      bool good = true;
      for (const auto& c : cells) {
        for (auto i : c.points) covered[i] = true;
        auto [it, inserted] = matroid_cache.try_emplace(c.points, false);
        if (inserted) it->second = is_matroid_polytope(c.polytope);
        good = good && it->second;
      }
      good = good && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
      if (!good) continue;

      for (const auto& perm : syms) {
        CellKey key;
        for (const auto& c : cells) {
          std::vector<std::size_t> mapped;
          for (auto i : c.points) mapped.push_back(perm[i]);
          std::sort(mapped.begin(), mapped.end());
          key.push_back(std::move(mapped));
        }
        std::sort(key.begin(), key.end());
        for (std::size_t i = 0; i < s.size(); ++i) image[perm[i]] = h[i];
        found.offer(std::move(key), image);
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<Found> partial(threads);
  if (threads == 1) {
    worker(0, 1, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads, std::ref(partial[t]));
    for (auto& th : pool) th.join();
  }
  Found merged;
  for (auto& f : partial)
    for (auto& [key, heights] : f.best) merged.offer(key, heights);

  std::vector<MatroidSubdivision> out;
  for (const auto& [key, heights] : merged.best) {
    MatroidSubdivision m;
    for (const auto& idx : key) {
      std::vector<RatVector> cell;
      for (auto i : idx) cell.push_back(pts[i]);
      m.cells.push_back({idx, convex_hull(cell)});
    }
    m.heights.assign(heights.begin(), heights.end());
    out.push_back(std::move(m));
  }
  return out;
}

SSVComplex subdivision_complex(const GradedShape& shape, const MatroidSubdivision& subdivision) {
  const auto s = weight_set(shape);
  std::vector<RatVector> pts;
  for (const auto& p : s) pts.push_back(to_rational(p));
  auto span_of = [](const RationalPolytope& p) {
    std::vector<RatVector> rays;
    RationalCone c = cone_over(p);
    for (const auto& r : c.rays()) rays.push_back(to_rational(r));
    return rays;
  };
  const std::size_t rank = shape.parts();
  LatticeSubgroup gamma = LatticeSubgroup::full(rank + 1).intersect_span(span_of(convex_hull(pts)));
  std::vector<CellData> cells;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < subdivision.cells.size(); ++i) {
    const RationalPolytope& p = subdivision.cells[i].polytope;
    ids.push_back("C" + std::to_string(i + 1));
    cells.push_back({ids.back(), p, gamma.intersect_span(span_of(p)), std::nullopt});
  }
  return complete_faces(SSVComplex(rank, gamma, std::move(cells), std::move(ids)), Completion::AllFaces);
}

}  // namespace ssv
