#pragma once

// Multiplicity-free stable spherical varieties as complexes of moment
// polytopes carrying weight groups. The model is purely combinatorial: two
// non-isomorphic varieties with the same weight groups and polytopes (for
// instance P^1 x P^1 with O(1,1) and S_2 with O(2) for SL(2)) have equal
// complexes.

#include <optional>
#include <string>
#include <vector>

#include "ssv/arith.hpp"
#include "ssv/diagonalizable.hpp"
#include "ssv/lattice.hpp"
#include "ssv/polyhedral.hpp"
#include "ssv/root_data.hpp"

namespace ssv {

/// Restriction of a cell's automorphism group to one of its faces; the
/// matrix sends X(face) to X(cell) (see DiagHom).
struct AutRestriction {
  std::string to;
  IntegerMatrix matrix;

  friend bool operator==(const AutRestriction&, const AutRestriction&) = default;
};

struct AutData {
  DiagonalizableGroup group;
  std::vector<AutRestriction> restrictions;

  friend bool operator==(const AutData&, const AutData&) = default;
};

/// A building block: its moment polytope in Lambda_R and its weight group in
/// Z x Lambda.
struct CellData {
  std::string id;
  RationalPolytope polytope;
  LatticeSubgroup weight_group;
  std::optional<AutData> aut;

  friend bool operator==(const CellData&, const CellData&) = default;
};

class SSVComplex {
 public:
  SSVComplex() = default;
  /// Throws DimensionError when a polytope or group lives in the wrong space.
  SSVComplex(std::size_t rank, LatticeSubgroup gamma, std::vector<CellData> cells,
             std::vector<std::string> maximal, std::optional<std::string> root_datum = {});

  std::size_t rank() const { return rank_; }
  const LatticeSubgroup& gamma() const { return gamma_; }
  const std::vector<CellData>& cells() const { return cells_; }
  const std::vector<std::string>& maximal() const { return maximal_; }
  const std::optional<std::string>& root_datum() const { return root_datum_; }

  /// nullptr when no cell has this id.
  const CellData* find(const std::string& id) const;
  /// Throws ValidationError for unknown ids.
  const CellData& cell(const std::string& id) const;
  /// The first cell whose polytope equals p, if any.
  const CellData* find_polytope(const RationalPolytope& p) const;
  /// Maximal cells in lexicographic id order.
  std::vector<const CellData*> maximal_cells() const;

  friend bool operator==(const SSVComplex&, const SSVComplex&) = default;

 private:
  std::size_t rank_ = 0;
  LatticeSubgroup gamma_;
  std::vector<CellData> cells_;
  std::vector<std::string> maximal_;
  std::optional<std::string> root_datum_;
};

/// A complex with one cell and gamma equal to its weight group.
SSVComplex singleton_complex(const CellData& cell, std::optional<std::string> root_datum = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  /// structure, intersections, face-poset, direct-summand, face-groups.
  std::vector<CheckResult> checks;
  bool moment_set_convex = false;
  /// A point of conv(Q) outside Q when the moment set is not convex.
  std::optional<RatVector> convexity_witness;
  bool cohen_macaulay = false;

  bool passed() const;
  const CheckResult* first_failure() const;
};

ValidationReport validate_complex(const SSVComplex& x);

/// Throws ValidationError naming the first failed check.
void require_valid(const SSVComplex& x);

enum class Completion {
  /// Close the cell set under pairwise intersection.
  Intersections,
  /// Add every face of every maximal cell.
  AllFaces,
};

/// Adds the missing cells. A new cell on face F of a maximal cell Y gets the
/// weight group Gamma~_Y intersected with the span of the cone over F, and an
/// id listing its vertices.
SSVComplex complete_faces(const SSVComplex& x, Completion mode);

/// Id used by complete_faces for a cell with these vertices.
std::string face_id(const RationalPolytope& p);

struct WeightMultiplicity {
  Weight weight;
  Integer multiplicity = 1;
  Integer dimension;
};

struct SectionModuleSummary {
  Integer degree;
  std::vector<WeightMultiplicity> weights;
  Integer total_dimension;
};

/// Weights lambda with (n, lambda) in Gamma and lambda in nQ, with dim V(lambda).
SectionModuleSummary section_module(const SSVComplex& x, const Integer& n, const RootDatum& d);

enum class Multiplication { Isomorphism, Zero };

std::string to_string(Multiplication m);

/// Isomorphism iff one maximal cone contains both weights. Throws
/// ContainmentError for weights outside Gamma and OutsideSupportError for
/// weights in no cone.
Multiplication multiplication_behavior(const SSVComplex& x, const IntVector& lambda,
                                       const IntVector& mu);

/// Cells partially ordered by the face relation.
struct OrbitPoset {
  std::vector<std::string> ids;  // sorted
  std::vector<std::vector<bool>> leq;  // leq[a][b]: cell a is a face of cell b

  std::size_t size() const { return ids.size(); }
  std::vector<std::string> minimal_elements() const;
  /// A unique minimal element.
  bool simple() const { return minimal_elements().size() == 1; }
};

OrbitPoset orbit_poset(const SSVComplex& x);

struct VQModuleData {
  std::vector<Weight> weights;
  std::vector<Integer> dimensions;
  Integer dimension;  // sum of squared dimensions
};

VQModuleData vq_module_data(const SSVComplex& x, const RootDatum& d);

enum class SL2Kind { P1, Fe, Se, P1xP1, P2 };

/// Accepts "P1", "Fe", "Se", "P1xP1", "P2". Throws ParseError otherwise.
SL2Kind parse_sl2_kind(const std::string& text);
std::string to_string(SL2Kind kind);

/// Only the parameters relevant to the kind are read:
/// P1: n; Fe: e, n_minus, n_plus; Se: e, n; P1xP1: m, n; P2: n.
struct SL2Params {
  long e = 0;
  long m = 0;
  long n = 0;
  long n_minus = 0;
  long n_plus = 0;
};

/// The building block of a projective spherical SL(2)-variety with its
/// ample sheaf. Throws ParamError for invalid parameters.
CellData sl2_catalog(SL2Kind kind, const SL2Params& params);

}  // namespace ssv
