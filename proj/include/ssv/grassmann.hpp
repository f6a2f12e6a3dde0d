#pragma once

// Weight sets of grassmannians and their thin Schubert cells, matroid
// polytopes, and regular matroid subdivisions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssv/complex.hpp"
#include "ssv/degeneration.hpp"
#include "ssv/polyhedral.hpp"

namespace ssv {

/// E = E_0 + ... + E_n with rank E_a = ranks[a], and the corank r.
struct GradedShape {
  long r = 0;
  std::vector<long> ranks;

  std::size_t parts() const { return ranks.size(); }
  long total() const;
};

/// Throws ParamError unless the ranks are positive and 0 <= r <= sum of ranks.
void check_shape(const GradedShape& shape);

/// Integer tuples with 0 <= i_a <= rank E_a and sum r, lexicographically.
std::vector<IntVector> weight_set(const GradedShape& shape);

/// Subsets of {0..n} as sorted index lists.
using IndexSet = std::vector<std::size_t>;

/// Values d_I. Subsets left out take max(0, r - sum of ranks outside I),
/// the value for a generic subspace.
struct RankFunctionData {
  std::map<IndexSet, long> values;
};

/// "013" -> {0,1,3}; the empty string is the empty set. Throws ParseError.
IndexSet parse_index_set(const std::string& key);
std::string index_set_key(const IndexSet& set);

/// d_I with the default filled in.
long rank_value(const GradedShape& shape, const RankFunctionData& d, const IndexSet& set);

/// Throws InvalidRankDataError on a negative value, d_empty != 0,
/// d_full != r, an index out of range, or d_I + d_J > d_{I u J} + d_{I n J}.
void check_rank_data(const GradedShape& shape, const RankFunctionData& d);

/// A point set against the lattice points of its convex hull.
struct Fullness {
  bool full = true;
  std::optional<IntVector> witness;  // a lattice point of the hull missing from the set
};

Fullness lattice_fullness(const std::vector<IntVector>& points);

struct ThinCellWeights {
  std::vector<IntVector> points;
  Fullness fullness;
};

/// Points of the weight set with sum_{a in I} i_a >= d_I for every I.
ThinCellWeights thin_cell_weight_set(const GradedShape& shape, const RankFunctionData& d);

/// Every edge of p is parallel to e_i - e_j. Throws NonLatticeError for
/// non-integral vertices and DomainError when the coordinate sum is not
/// constant on p.
bool is_matroid_polytope(const RationalPolytope& p);

struct MatroidSubdivision {
  /// Cells by point indices into the weight set, sorted.
  std::vector<SubdivisionCell> cells;
  /// The lexicographically least height vector inducing it.
  std::vector<Rational> heights;

  bool trivial() const { return cells.size() == 1; }
};

struct MatroidSearchOptions {
  long cap = 2;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// Largest number of height vectors examined before SearchBudgetError.
  std::size_t budget = 2'000'000;
};

/// Regular subdivisions of (conv S, S) with S the weight set, induced by
/// integer heights in [0, cap], all of whose cells are matroid polytopes
/// and whose cells cover S. Heights are visited up to permutations of
/// parts of equal rank. Sorted by cells; independent of the thread count.
/// Throws SearchBudgetError when |S| > 12 or (cap + 1)^|S| exceeds the budget.
std::vector<MatroidSubdivision> enumerate_matroid_subdivisions(const GradedShape& shape,
                                                               const MatroidSearchOptions& options = {});

/// The toric complex of a subdivision of conv S: gamma is Z x Z^{n+1}
/// intersected with the span of the cone over conv S, cells carry gamma
/// intersected with the spans of their cones, and all faces are added.
SSVComplex subdivision_complex(const GradedShape& shape, const MatroidSubdivision& subdivision);

}  // namespace ssv
