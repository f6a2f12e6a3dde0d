#include "ssv/gluing.hpp"

#include <algorithm>

#include "ssv/errors.hpp"

namespace ssv {

namespace {

struct Restriction {
  DiagonalizableGroup from;
  DiagonalizableGroup to;
  IntegerMatrix matrix;
};

class AutSource {
 public:
  AutSource(const SSVComplex& x, AutMode mode) : x_(x), mode_(mode) {}

  DiagonalizableGroup group(const CellData& c) const {
    if (mode_ == AutMode::Toric) return DiagonalizableGroup::torus(c.weight_group.rank());
    if (!c.aut) throw MissingAutError("cell " + c.id + " carries no automorphism data");
    return c.aut->group;
  }

  // Character map X(face) -> X(cell).
  IntegerMatrix restriction(const CellData& cell, const CellData& face) const {
    DiagonalizableGroup g = group(cell);
    DiagonalizableGroup h = group(face);
    if (cell.id == face.id) return IntegerMatrix::identity(g.generators());
    if (mode_ == AutMode::Toric) {
      LatticeSubgroup sub(x_.rank() + 1, face.weight_group.basis());
      return coordinate_matrix(sub, cell.weight_group);
    }
    for (const auto& r : cell.aut->restrictions)
      if (r.to == face.id) {
        DiagHom hom{g, h, r.matrix};
        if (!hom.well_defined())
          throw IncompatibleRestrictionError("restriction from " + cell.id + " to " + face.id +
                                             " is not well defined on character groups");
        return r.matrix;
      }
    throw MissingAutError("cell " + cell.id + " has no restriction to " + face.id);
  }

 private:
  const SSVComplex& x_;
  AutMode mode_;
};

std::vector<std::size_t> offsets(const std::vector<GluingTerm>& terms) {
  std::vector<std::size_t> out{0};
  for (const auto& t : terms) out.push_back(out.back() + t.group.generators());
  return out;
}

DiagonalizableGroup direct_sum(const std::vector<GluingTerm>& terms) {
  auto off = offsets(terms);
  const std::size_t n = off.back();
  std::vector<IntVector> rels;
  for (std::size_t t = 0; t < terms.size(); ++t)
    for (const auto& r : terms[t].group.relations()) {
      IntVector row(n);
      std::copy(r.begin(), r.end(), row.begin() + static_cast<long>(off[t]));
      rels.push_back(std::move(row));
    }
  return {n, std::move(rels)};
}

// Adds sign * block into m at (row0, col0).
void place(IntegerMatrix& m, std::size_t row0, std::size_t col0, const IntegerMatrix& block, int sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(row0 + i, col0 + j) += sign * block(i, j);
}

std::string join(const std::vector<std::string>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
  return s;
}

}  // namespace

DiagonalizableGroup GluingComplex::term(int i) const {
  switch (i) {
    case 0:
      return direct_sum(c0);
    case 1:
      return direct_sum(c1);
    case 2:
      return direct_sum(c2);
  }
  throw DomainError("cochain degree must be 0, 1 or 2");
}

GluingComplex build_gluing_complex(const SSVComplex& x, AutMode mode) {
  require_valid(x);
  AutSource aut(x, mode);
  const auto maximal = x.maximal_cells();
  const std::size_t m = maximal.size();

  GluingComplex c;
  for (const CellData* y : maximal) c.c0.push_back({{y->id}, y->id, aut.group(*y)});

  auto common_cell = [&](const std::vector<std::size_t>& idx) -> const CellData* {
    std::optional<RationalPolytope> p = maximal[idx[0]]->polytope;
    for (std::size_t k = 1; k < idx.size() && p; ++k) p = intersect(*p, maximal[idx[k]]->polytope);
    if (!p) return nullptr;
    const CellData* cell = x.find_polytope(*p);
    if (!cell) throw ValidationError("intersection " + face_id(*p) + " is not a cell");
    return cell;
  };
  auto ids = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(maximal[i]->id);
    return out;
  };

  std::vector<std::vector<std::size_t>> pairs, triples;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (const CellData* f = common_cell({i, j})) {
        pairs.push_back({i, j});
        c.c1.push_back({ids({i, j}), f->id, aut.group(*f)});
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (const CellData* f = common_cell({i, j, k})) {
          triples.push_back({i, j, k});
          c.c2.push_back({ids({i, j, k}), f->id, aut.group(*f)});
        }

  auto o0 = offsets(c.c0), o1 = offsets(c.c1), o2 = offsets(c.c2);
  c.d0 = IntegerMatrix(o1.back(), o0.back());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const CellData& face = x.cell(c.c1[p].face);
    const auto [i, j] = std::pair{pairs[p][0], pairs[p][1]};
    place(c.d0, o1[p], o0[j], aut.restriction(*maximal[j], face), 1);
    place(c.d0, o1[p], o0[i], aut.restriction(*maximal[i], face), -1);
  }

  auto pair_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p][0] == a && pairs[p][1] == b) return p;
    throw ValidationError("missing pairwise intersection");
  };
  c.d1 = IntegerMatrix(o2.back(), o1.back());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const CellData& face = x.cell(c.c2[t].face);
    const std::size_t i = triples[t][0], j = triples[t][1], k = triples[t][2];
    const std::pair<std::size_t, int> faces[] = {
        {pair_index(j, k), 1}, {pair_index(i, k), -1}, {pair_index(i, j), 1}};
    for (const auto& [p, sign] : faces)
      place(c.d1, o2[t], o1[p], aut.restriction(x.cell(c.c1[p].face), face), sign);
  }

  DiagonalizableGroup x0 = c.term(0);
  IntegerMatrix comp = c.d1 * c.d0;
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (std::size_t r = o2[t]; r < o2[t + 1]; ++r)
      if (!x0.is_relation(comp.row(r)))
        throw IncompatibleRestrictionError(
            "d1 d0 does not vanish on cover " + join(c.c2[t].cover) + ", character " +
            std::to_string(r - o2[t]) + " maps to " + to_string(comp.row(r)));
  return c;
}

DiagonalizableGroup diag_cohomology(const GluingComplex& c, int i) {
  DiagonalizableGroup x0 = c.term(0);
  DiagonalizableGroup x1 = c.term(1);
  if (i == 0) {
    std::vector<IntVector> rels = x0.relations();
    for (auto& r : c.d0.row_list()) rels.push_back(std::move(r));
    return {x0.generators(), std::move(rels)};
  }
  if (i != 1) throw DomainError("only H^0 and H^1 are computed");

  // characters of C^1 whose image in X(C^0) vanishes
  const std::size_t g1 = x1.generators();
  std::vector<IntVector> stacked = c.d0.row_list();
  for (const auto& r : x0.relations()) stacked.push_back(r);
  std::vector<IntVector> kernel;
  for (const auto& k : integer_left_kernel(IntegerMatrix::from_rows(stacked, x0.generators())))
    kernel.emplace_back(k.begin(), k.begin() + static_cast<long>(g1));
  LatticeSubgroup cycles(g1, kernel);

  std::vector<IntVector> boundaries = x1.relations();
  for (auto& r : c.d1.row_list()) boundaries.push_back(std::move(r));
  std::vector<IntVector> rels;
  for (const auto& b : boundaries) {
    auto coords = cycles.coordinates(b);
    if (!coords) throw IncompatibleRestrictionError("boundary " + to_string(b) + " is not a cycle");
    rels.push_back(std::move(*coords));
  }
  return {cycles.rank(), std::move(rels)};
}

}  // namespace ssv
