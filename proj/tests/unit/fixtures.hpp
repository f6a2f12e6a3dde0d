#pragma once

// Complexes shared by several test files, built directly in code.

#include "ssv/complex.hpp"

namespace fixture {

using namespace ssv;

inline RationalPolytope hull(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntVector> v;
  for (auto p : pts) v.push_back(make_int_vector(p));
  return convex_hull(v);
}

inline LatticeSubgroup group(std::size_t ambient,
                             std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntVector> g;
  for (auto p : gens) g.push_back(make_int_vector(p));
  return LatticeSubgroup(ambient, g);
}

/// Two triangles glued along the segment [(2,0),(4,2)] for SL(2) x SL(2),
/// with the partial subdivision of seven cells.
inline SSVComplex ex244(bool with_aut = true) {
  LatticeSubgroup g1 = group(3, {{1, 0, 0}, {1, 2, 0}, {1, 4, 2}});
  std::vector<CellData> cells{
      {"Q1", hull({{0, 0}, {2, 0}, {4, 2}}), g1, std::nullopt},
      {"Q2", hull({{2, 0}, {4, 2}, {4, 0}}), g1, std::nullopt},
      {"Q12", hull({{2, 0}, {4, 2}}), group(3, {{1, 2, 0}, {1, 4, 2}}), std::nullopt},
      {"S1", hull({{0, 0}, {2, 0}}), group(3, {{1, 0, 0}, {0, 2, 0}}), std::nullopt},
      {"S2", hull({{4, 2}, {4, 0}}), group(3, {{1, 4, 0}, {0, 0, 2}}), std::nullopt},
      {"P20", hull({{2, 0}}), group(3, {{1, 2, 0}}), std::nullopt},
      {"P42", hull({{4, 2}}), group(3, {{1, 4, 2}}), std::nullopt},
  };
  if (with_aut) {
    DiagonalizableGroup gm2 = DiagonalizableGroup::torus(2);
    cells[0].aut = AutData{gm2, {{"Q12", IntegerMatrix::identity(2)}}};
    cells[1].aut = AutData{gm2, {{"Q12", IntegerMatrix::identity(2)}}};
    cells[2].aut = AutData{gm2, {}};
  }
  return SSVComplex(2, g1, cells, {"Q1", "Q2"}, std::string("A1xA1"));
}

/// Two segments [0,2] and [2,4] for SL(2), glued at the weight 2.
inline SSVComplex chain() {
  std::vector<CellData> cells{
      {"Y1", hull({{0}, {2}}), group(2, {{1, 2}, {0, 2}}), std::nullopt},
      {"Y2", hull({{2}, {4}}), group(2, {{1, 4}, {0, 2}}), std::nullopt},
      {"Y12", hull({{2}}), group(2, {{1, 2}}), std::nullopt},
  };
  SSVComplex x(1, group(2, {{1, 0}, {0, 2}}), cells, {"Y1", "Y2"}, std::string("A1"));
  return complete_faces(x, Completion::AllFaces);
}

}  // namespace fixture
