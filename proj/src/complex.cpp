#include "ssv/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ssv/errors.hpp"
#include "ssv/rational_linalg.hpp"

namespace ssv {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void fail(CheckResult& c, std::string witness) {
  c.passed = false;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(std::move(witness));
}

std::vector<RatVector> cone_rays(const RationalPolytope& p) {
  RationalCone c = cone_over(p);
  std::vector<RatVector> out;
  for (const auto& r : c.rays()) out.push_back(to_rational(r));
  return out;
}

bool contained_in(const RationalPolytope& inner, const RationalPolytope& outer) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const RatVector& v) { return outer.contains(v); });
}

std::string pair_witness(const CellData& a, const CellData& b) { return a.id + " & " + b.id; }

}  // namespace

SSVComplex::SSVComplex(std::size_t rank, LatticeSubgroup gamma, std::vector<CellData> cells,
                       std::vector<std::string> maximal, std::optional<std::string> root_datum)
    : rank_(rank),
      gamma_(std::move(gamma)),
      cells_(std::move(cells)),
      maximal_(std::move(maximal)),
      root_datum_(std::move(root_datum)) {
  if (gamma_.ambient_rank() != rank_ + 1)
    throw DimensionError("gamma must live in Z^" + std::to_string(rank_ + 1));
  for (const auto& c : cells_) {
    if (c.polytope.ambient_rank() != rank_)
      throw DimensionError("cell " + c.id + " has a polytope outside R^" + std::to_string(rank_));
    if (c.weight_group.ambient_rank() != rank_ + 1)
      throw DimensionError("cell " + c.id + " has a weight group outside Z^" +
                           std::to_string(rank_ + 1));
  }
}

const CellData* SSVComplex::find(const std::string& id) const {
  for (const auto& c : cells_)
    if (c.id == id) return &c;
  return nullptr;
}

const CellData& SSVComplex::cell(const std::string& id) const {
  const CellData* c = find(id);
  if (!c) throw ValidationError("no cell with id '" + id + "'");
  return *c;
}

const CellData* SSVComplex::find_polytope(const RationalPolytope& p) const {
  for (const auto& c : cells_)
    if (c.polytope == p) return &c;
  return nullptr;
}

std::vector<const CellData*> SSVComplex::maximal_cells() const {
  std::vector<std::string> ids = maximal_;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<const CellData*> out;
  for (const auto& id : ids) out.push_back(&cell(id));
  return out;
}

SSVComplex singleton_complex(const CellData& cell, std::optional<std::string> root_datum) {
  return SSVComplex(cell.polytope.ambient_rank(), cell.weight_group, {cell}, {cell.id},
                    std::move(root_datum));
}

// Validation -------------------------------------------------------------------

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

CheckResult check_structure(const SSVComplex& x) {
  CheckResult c{"structure", true, {}};
  std::set<std::string> ids;
  for (const auto& cell : x.cells()) {
    if (cell.id.empty()) fail(c, "empty cell id");
    if (!ids.insert(cell.id).second) fail(c, "duplicate id " + cell.id);
  }
  if (x.maximal().empty()) fail(c, "no maximal cells");
  std::set<std::string> seen;
  for (const auto& id : x.maximal()) {
    if (!ids.count(id)) fail(c, "unknown maximal id " + id);
    if (!seen.insert(id).second) fail(c, "maximal id listed twice: " + id);
  }
  for (const auto& cell : x.cells()) {
    if (!x.gamma().contains(cell.weight_group)) {
      fail(c, cell.id + ": weight group not contained in gamma");
      continue;
    }
    const auto rays = cone_rays(cell.polytope);
    bool spans = cell.weight_group.rank() == cell.polytope.dimension() + 1;
    for (const auto& r : rays)
      spans = spans && cell.weight_group.rational_coordinates(r).has_value();
    if (!spans) fail(c, cell.id + ": weight group does not span the cone over the polytope");
    bool inside = false;
    for (const auto& id : x.maximal()) {
      const CellData* m = x.find(id);
      if (m && contained_in(cell.polytope, m->polytope)) inside = true;
    }
    if (!inside) fail(c, cell.id + ": not contained in a maximal cell");
  }
  return c;
}

}  // namespace

ValidationReport validate_complex(const SSVComplex& x) {
  ValidationReport report;
  report.checks.push_back(check_structure(x));
  const auto& cells = x.cells();
  const std::size_t m = cells.size();

  CheckResult inter{"intersections", true, {}};
  CheckResult poset{"face-poset", true, {}};
  CheckResult summand{"direct-summand", true, {}};
  CheckResult groups{"face-groups", true, {}};

  std::vector<std::vector<char>> face(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) face[i][j] = is_face(cells[i].polytope, cells[j].polytope);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& a = cells[i];
      const auto& b = cells[j];
      if (a.polytope == b.polytope) {
        fail(poset, pair_witness(a, b) + ": equal polytopes");
        continue;
      }
      auto common = intersect(a.polytope, b.polytope);
      if (common && (!is_face(*common, a.polytope) || !is_face(*common, b.polytope) ||
                     !x.find_polytope(*common)))
        fail(inter, pair_witness(a, b));
    }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || cells[i].polytope == cells[j].polytope) continue;
      if (contained_in(cells[i].polytope, cells[j].polytope) != static_cast<bool>(face[i][j]))
        fail(poset, cells[i].id + " in " + cells[j].id + " but not a face");
    }

  for (const auto& c : cells)
    if (x.gamma().contains(c.weight_group) && !is_direct_summand(c.weight_group, x.gamma()))
      fail(summand, c.id);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!face[i][j]) continue;
      LatticeSubgroup expected = cells[j].weight_group.intersect_span(cone_rays(cells[i].polytope));
      if (!(expected == cells[i].weight_group))
        fail(groups, cells[i].id + " on " + cells[j].id);
    }

  report.checks.push_back(std::move(inter));
  report.checks.push_back(std::move(poset));
  report.checks.push_back(std::move(summand));
  report.checks.push_back(std::move(groups));

  std::vector<RatVector> all;
  std::vector<RationalCone> pieces;
  for (const auto& id : x.maximal()) {
    const CellData* c = x.find(id);
    if (!c) continue;
    all.insert(all.end(), c->polytope.vertices().begin(), c->polytope.vertices().end());
    pieces.push_back(cone_over(c->polytope));
  }
  if (!all.empty()) {
    RationalPolytope hull = convex_hull(all);
    auto hole = uncovered_point(cone_over(hull), pieces);
    report.moment_set_convex = !hole;
    if (hole) {
      RatVector w((*hole).begin() + 1, (*hole).end());
      for (auto& v : w) v /= (*hole)[0];
      report.convexity_witness = w;
    }
  }
  report.cohen_macaulay = report.moment_set_convex;
  return report;
}

void require_valid(const SSVComplex& x) {
  ValidationReport r = validate_complex(x);
  if (const CheckResult* f = r.first_failure()) {
    std::string msg = "complex fails check '" + f->name + "'";
    if (!f->witnesses.empty()) msg += ": " + f->witnesses.front();
    throw ValidationError(msg);
  }
}

// Completion ---------------------------------------------------------------------

std::string face_id(const RationalPolytope& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out += ",";
    out += to_string(p.vertices()[i]);
  }
  return out + "]";
}

SSVComplex complete_faces(const SSVComplex& x, Completion mode) {
  const auto maximal = x.maximal_cells();
  std::vector<RationalPolytope> known;
  for (const auto& c : x.cells()) known.push_back(c.polytope);
  auto is_known = [&](const RationalPolytope& p) {
    return std::find(known.begin(), known.end(), p) != known.end();
  };

  std::vector<RationalPolytope> added;
  if (mode == Completion::AllFaces) {
    for (const CellData* c : maximal) {
      FacePoset faces = enumerate_faces(c->polytope);
      for (const auto& f : faces.faces) {
        RationalPolytope p = face_polytope(c->polytope, f);
        if (!is_known(p)) {
          known.push_back(p);
          added.push_back(p);
        }
      }
    }
  } else {
    for (bool grew = true; grew;) {
      grew = false;
      const std::size_t n = known.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto common = intersect(known[i], known[j]);
          if (common && !is_known(*common)) {
            known.push_back(*common);
            added.push_back(*common);
            grew = true;
          }
        }
    }
  }

  std::sort(added.begin(), added.end(), [](const RationalPolytope& a, const RationalPolytope& b) {
    return a.vertices() < b.vertices();
  });
  std::vector<CellData> cells = x.cells();
  for (const auto& p : added) {
    const CellData* owner = nullptr;
    for (const CellData* c : maximal)
      if (is_face(p, c->polytope)) {
        owner = c;
        break;
      }
    if (!owner)
      for (const CellData* c : maximal)
        if (contained_in(p, c->polytope)) {
          owner = c;
          break;
        }
    if (!owner) throw ValidationError("cell " + face_id(p) + " lies in no maximal cell");
    cells.push_back({face_id(p), p, owner->weight_group.intersect_span(cone_rays(p)), std::nullopt});
  }
  return SSVComplex(x.rank(), x.gamma(), std::move(cells), x.maximal(), x.root_datum());
}

// Sections -------------------------------------------------------------------------

SectionModuleSummary section_module(const SSVComplex& x, const Integer& n, const RootDatum& d) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (d.rank() != x.rank())
    throw DimensionError("root datum " + d.label() + " has rank " + std::to_string(d.rank()) +
                         " but the complex has rank " + std::to_string(x.rank()));
  require_valid(x);
  std::set<IntVector> points;
  for (const CellData* c : x.maximal_cells())
    for (auto& p : lattice_points(c->polytope, x.gamma(), n)) points.insert(std::move(p));
  SectionModuleSummary out;
  out.degree = n;
  out.total_dimension = 0;
  for (const auto& p : points) {
    Weight lambda = to_rational(IntVector(p.begin() + 1, p.end()));
    Integer dim = weyl_dimension(d, lambda);
    out.total_dimension += dim;
    out.weights.push_back({std::move(lambda), Integer(1), dim});
  }
  return out;
}

std::string to_string(Multiplication m) {
  return m == Multiplication::Isomorphism ? "isomorphism" : "zero";
}

Multiplication multiplication_behavior(const SSVComplex& x, const IntVector& lambda,
                                       const IntVector& mu) {
  const auto maximal = x.maximal_cells();
  auto supporting = [&](const IntVector& w) {
    if (w.size() != x.rank() + 1) throw DimensionError("weight " + to_string(w) + " has the wrong length");
    if (!x.gamma().contains(w)) throw ContainmentError("weight " + to_string(w) + " is not in gamma");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < maximal.size(); ++i)
      if (cone_over(maximal[i]->polytope).contains(w)) out.push_back(i);
    if (out.empty())
      throw OutsideSupportError("weight " + to_string(w) + " lies in no cone over a maximal cell");
    return out;
  };
  auto a = supporting(lambda);
  auto b = supporting(mu);
  for (auto i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) return Multiplication::Isomorphism;
  return Multiplication::Zero;
}

std::vector<std::string> OrbitPoset::minimal_elements() const {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < ids.size() && minimal; ++b)
      if (b != a && leq[b][a]) minimal = false;
    if (minimal) out.push_back(ids[a]);
  }
  return out;
}

OrbitPoset orbit_poset(const SSVComplex& x) {
  require_valid(x);
  std::vector<const CellData*> cells;
  for (const auto& c : x.cells()) cells.push_back(&c);
  std::sort(cells.begin(), cells.end(),
            [](const CellData* a, const CellData* b) { return a->id < b->id; });
  OrbitPoset p;
  for (const CellData* c : cells) p.ids.push_back(c->id);
  p.leq.assign(cells.size(), std::vector<bool>(cells.size(), false));
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      p.leq[a][b] = a == b || is_face(cells[a]->polytope, cells[b]->polytope);
  return p;
}

VQModuleData vq_module_data(const SSVComplex& x, const RootDatum& d) {
  SectionModuleSummary s = section_module(x, Integer(1), d);
  VQModuleData out;
  out.dimension = 0;
  for (const auto& w : s.weights) {
    out.weights.push_back(w.weight);
    out.dimensions.push_back(w.dimension);
    out.dimension += w.dimension * w.dimension;
  }
  return out;
}

// SL(2) catalog ---------------------------------------------------------------------

SL2Kind parse_sl2_kind(const std::string& text) {
  static const std::map<std::string, SL2Kind> kinds{{"P1", SL2Kind::P1},
                                                    {"Fe", SL2Kind::Fe},
                                                    {"Se", SL2Kind::Se},
                                                    {"P1xP1", SL2Kind::P1xP1},
                                                    {"P2", SL2Kind::P2}};
  auto it = kinds.find(text);
  if (it == kinds.end())
    throw ParseError("unknown catalog kind '" + text + "' (expected P1, Fe, Se, P1xP1 or P2)");
  return it->second;
}

std::string to_string(SL2Kind kind) {
  switch (kind) {
    case SL2Kind::P1:
      return "P1";
    case SL2Kind::Fe:
      return "Fe";
    case SL2Kind::Se:
      return "Se";
    case SL2Kind::P1xP1:
      return "P1xP1";
    case SL2Kind::P2:
      return "P2";
  }
  return "";
}

CellData sl2_catalog(SL2Kind kind, const SL2Params& q) {
  auto interval = [](long lo, long hi) {
    std::vector<IntVector> pts{make_int_vector({lo})};
    if (hi != lo) pts.push_back(make_int_vector({hi}));
    return convex_hull(pts);
  };
  auto group = [](std::vector<IntVector> gens) { return LatticeSubgroup(2, std::move(gens)); };
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ParamError(msg);
  };
  switch (kind) {
    case SL2Kind::P1:
      require(q.n >= 1, "P1 needs n >= 1");
      return {"P1(" + std::to_string(q.n) + ")", interval(q.n, q.n),
              group({make_int_vector({1, q.n})}), std::nullopt};
    case SL2Kind::Fe:
      require(q.e >= 1, "Fe needs e >= 1");
      require(q.n_minus >= 1 && q.n_minus < q.n_plus, "Fe needs 1 <= n_minus < n_plus");
      require((q.n_plus - q.n_minus) % q.e == 0, "Fe needs e to divide n_plus - n_minus");
      return {"F" + std::to_string(q.e) + "(" + std::to_string(q.n_minus) + "," +
                  std::to_string(q.n_plus) + ")",
              interval(q.n_minus, q.n_plus),
              group({make_int_vector({1, q.n_plus}), make_int_vector({0, q.e})}), std::nullopt};
    case SL2Kind::Se:
      require(q.e >= 1, "Se needs e >= 1");
      require(q.n >= 1, "Se needs n >= 1");
      require(q.n % q.e == 0, "Se needs e to divide n");
      return {"S" + std::to_string(q.e) + "(" + std::to_string(q.n) + ")", interval(0, q.n),
              group({make_int_vector({1, q.n}), make_int_vector({0, q.e})}), std::nullopt};
    case SL2Kind::P1xP1:
      require(q.m >= 1 && q.n >= 1, "P1xP1 needs m, n >= 1");
      return {"P1xP1(" + std::to_string(q.m) + "," + std::to_string(q.n) + ")",
              interval(std::abs(q.m - q.n), q.m + q.n),
              group({make_int_vector({1, q.m + q.n}), make_int_vector({0, 2})}), std::nullopt};
    case SL2Kind::P2:
      require(q.n >= 1, "P2 needs n >= 1");
      return {"P2(" + std::to_string(q.n) + ")", interval(0, 2 * q.n),
              group({make_int_vector({1, 2 * q.n}), make_int_vector({0, 4})}), std::nullopt};
  }
  throw ParamError("unknown catalog kind");
}

}  // namespace ssv
