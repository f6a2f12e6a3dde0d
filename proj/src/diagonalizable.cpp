#include "ssv/diagonalizable.hpp"

#include "ssv/errors.hpp"

namespace ssv {

DiagonalizableGroup::DiagonalizableGroup(std::size_t generators, std::vector<IntVector> relations)
    : generators_(generators), relations_(std::move(relations)) {
  for (const auto& r : relations_)
    if (r.size() != generators_)
      throw DimensionError("relation " + to_string(r) + " does not have " +
                           std::to_string(generators_) + " entries");
  relation_lattice_ = LatticeSubgroup(generators_, relations_);
  invariants_ = cokernel_invariants(relations_, generators_);
}

bool DiagonalizableGroup::is_relation(const IntVector& v) const {
  return relation_lattice_.contains(v);
}

std::string describe(const DiagonalizableGroup& g) {
  const AbelianInvariants& inv = g.invariants();
  if (inv.trivial()) return "trivial";
  std::string out;
  if (inv.free_rank > 0) {
    out = "G_m";
    if (inv.free_rank > 1) out += "^" + std::to_string(inv.free_rank);
  }
  for (const auto& d : inv.torsion) {
    if (!out.empty()) out += " x ";
    out += "mu_" + to_string(d);
  }
  return out;
}

bool DiagHom::well_defined() const {
  if (matrix.rows() != target.generators() || matrix.cols() != source.generators()) return false;
  for (const auto& rel : target.relations())
    if (!source.is_relation(rel * matrix)) return false;
  return true;
}

DiagHom identity_hom(const DiagonalizableGroup& g) {
  return {g, g, IntegerMatrix::identity(g.generators())};
}

}  // namespace ssv
