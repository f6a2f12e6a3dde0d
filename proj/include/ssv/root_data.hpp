#pragma once

// Root data of small classical groups in fundamental-weight coordinates.

#include <string>
#include <vector>

#include "ssv/arith.hpp"
#include "ssv/polyhedral.hpp"

namespace ssv {

/// Largest total rank accepted for a root datum.
inline constexpr std::size_t kMaxRootRank = 4;

/// A weight, in the basis of fundamental weights.
using Weight = RatVector;

/// Root datum of a product of simple factors of types A, B, C, D. Weights
/// are written in the basis of fundamental weights, so a weight is dominant
/// iff its coordinates are nonnegative.
class RootDatum {
 public:
  /// Parses labels such as "A1", "A2", "B3", "A1xA1", "A1xC2".
  /// Throws ParseError for unknown types and RankError beyond kMaxRootRank.
  static RootDatum from_label(const std::string& label);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return rank_; }
  /// cartan(i, j) = <alpha_i^vee, alpha_j>.
  const IntegerMatrix& cartan() const { return cartan_; }
  /// Simple root alpha_j in fundamental-weight coordinates (column j of the
  /// Cartan matrix).
  Weight simple_root(std::size_t j) const;
  /// Gram matrix of the fundamental weights for the invariant form.
  const std::vector<RatVector>& gram() const { return gram_; }
  /// Positive roots in fundamental-weight coordinates, sorted.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Half the sum of the positive roots; all coordinates equal 1.
  Weight rho() const { return Weight(rank_, Rational(1)); }

  Rational form(const Weight& a, const Weight& b) const;
  /// s_i(lambda) = lambda - lambda_i alpha_i.
  Weight reflect(std::size_t i, const Weight& lambda) const;

 private:
  std::string label_;
  std::size_t rank_ = 0;
  IntegerMatrix cartan_;
  std::vector<Rational> half_lengths_;  // (alpha_i, alpha_i) / 2
  std::vector<RatVector> gram_;
  std::vector<Weight> positive_roots_;
};

bool is_dominant(const Weight& lambda);

/// Orbit under the Weyl group, lexicographically sorted.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda);

/// dim V(lambda) by the Weyl dimension formula. Throws NotDominantError
/// unless lambda is dominant and integral.
Integer weyl_dimension(const RootDatum& d, const Weight& lambda);

/// conv(W lambda) intersected with the dominant chamber.
RationalPolytope dominant_hull(const RootDatum& d, const Weight& lambda);

/// The W-translates w P, distinct as sets.
std::vector<RationalPolytope> weyl_translates(const RootDatum& d, const RationalPolytope& p);

/// The relative interior of P meets the dominant chamber, and the distinct
/// W-translates of the relative interior are pairwise disjoint.
bool is_w_admissible(const RootDatum& d, const RationalPolytope& p);

}  // namespace ssv
