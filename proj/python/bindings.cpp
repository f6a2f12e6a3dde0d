// Python bindings. Integers cross as Python ints, rationals as
// fractions.Fraction, documents as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ssv/cli.hpp"
#include "ssv/complex.hpp"
#include "ssv/errors.hpp"
#include "ssv/gluing.hpp"
#include "ssv/grassmann.hpp"
#include "ssv/io.hpp"
#include "ssv/lattice.hpp"
#include "ssv/polyhedral.hpp"
#include "ssv/root_data.hpp"

namespace py = pybind11;
using namespace ssv;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::tuple to_py(const IntVector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = to_py(v[i]);
  return t;
}

py::tuple to_py(const RatVector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = to_py(v[i]);
  return t;
}

template <class T>
py::list to_py_list(const std::vector<T>& items) {
  py::list out;
  for (const auto& x : items) out.append(to_py(x));
  return out;
}

Integer int_from(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

Rational rat_from(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

IntVector int_vector(const py::handle& seq) {
  IntVector v;
  for (auto x : py::reinterpret_borrow<py::sequence>(seq)) v.push_back(int_from(x));
  return v;
}

RatVector rat_vector(const py::handle& seq) {
  RatVector v;
  for (auto x : py::reinterpret_borrow<py::sequence>(seq)) v.push_back(rat_from(x));
  return v;
}

std::vector<IntVector> int_rows(const py::sequence& rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(int_vector(r));
  return out;
}

LatticeSubgroup lattice_or_full(std::size_t dim, const std::optional<py::sequence>& gens) {
  return gens ? LatticeSubgroup(dim, int_rows(*gens)) : LatticeSubgroup::full(dim);
}

py::dict invariants(const AbelianInvariants& a) {
  py::dict d;
  d["free_rank"] = a.free_rank;
  d["torsion"] = to_py_list(a.torsion);
  return d;
}

py::dict validation(const ValidationReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["witnesses"] = c.witnesses;
    checks.append(d);
  }
  py::dict out;
  out["passed"] = r.passed();
  out["checks"] = checks;
  out["moment_set_convex"] = r.moment_set_convex;
  out["cohen_macaulay"] = r.cohen_macaulay;
  out["convexity_witness"] = r.convexity_witness ? py::object(to_py(*r.convexity_witness)) : py::object(py::none());
  return out;
}

AutMode aut_mode(const SSVComplex& x, const std::string& mode) {
  if (mode == "toric") return AutMode::Toric;
  if (mode == "supplied") return AutMode::Supplied;
  if (mode != "auto") throw ParamError("mode must be auto, toric or supplied");
  for (const auto& c : x.cells())
    if (c.aut) return AutMode::Supplied;
  return AutMode::Toric;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with spherical stable varieties.";
  m.attr("__version__") = SSV_VERSION;

  auto& base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ParamError>(m, "ParamError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<SearchBudgetError>(m, "SearchBudgetError", base.ptr());

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Runs one ssvtool command; returns (exit code, stdout, stderr).");

  m.def(
      "smith_diagonal",
      [](const py::sequence& rows) {
        auto r = int_rows(rows);
        return to_py_list(smith_normal_form(IntegerMatrix::from_rows(r, r.empty() ? 0 : r[0].size())).diag);
      },
      py::arg("rows"));

  m.def(
      "hilbert_basis",
      [](const py::sequence& rays, std::optional<py::sequence> lattice) {
        auto gens = int_rows(rays);
        if (gens.empty()) throw ParamError("at least one ray is required");
        std::size_t d = gens[0].size();
        return to_py_list(hilbert_basis(RationalCone::from_generators(d, gens), lattice_or_full(d, lattice)));
      },
      py::arg("rays"), py::arg("lattice") = py::none());

  m.def(
      "saturation_witness",
      [](const py::sequence& generators, std::optional<py::sequence> lattice) -> py::object {
        auto gens = int_rows(generators);
        if (gens.empty()) throw ParamError("at least one generator is required");
        SaturationCheck s = is_saturated_monoid({lattice_or_full(gens[0].size(), lattice), gens});
        return s.witness ? py::object(to_py(*s.witness)) : py::object(py::none());
      },
      py::arg("generators"), py::arg("lattice") = py::none(),
      "A lattice point of the cone missing from the monoid, or None when saturated.");

  m.def(
      "validate", [](const std::string& doc) { return validation(validate_complex(parse_complex_document(doc, "document"))); },
      py::arg("document"));

  m.def(
      "cohomology",
      [](const std::string& doc, const std::string& mode) {
        SSVComplex x = parse_complex_document(doc, "document");
        GluingComplex c = build_gluing_complex(x, aut_mode(x, mode));
        py::dict out;
        out["H0"] = invariants(diag_cohomology(c, 0).invariants());
        out["H1"] = invariants(diag_cohomology(c, 1).invariants());
        return out;
      },
      py::arg("document"), py::arg("mode") = "auto");

  m.def(
      "section_dimension",
      [](const std::string& doc, long degree, std::optional<std::string> root_datum) {
        SSVComplex x = parse_complex_document(doc, "document");
        std::string label = root_datum ? *root_datum : x.root_datum().value_or("");
        if (label.empty()) throw ParamError("the document names no root datum");
        return to_py(section_module(x, degree, RootDatum::from_label(label)).total_dimension);
      },
      py::arg("document"), py::arg("degree"), py::arg("root_datum") = py::none());

  m.def(
      "sl2_catalog",
      [](const std::string& kind, long e, long m_, long n, long n_minus, long n_plus) {
        CellData c = sl2_catalog(parse_sl2_kind(kind), {.e = e, .m = m_, .n = n, .n_minus = n_minus, .n_plus = n_plus});
        return dump(to_json(singleton_complex(c, std::string("A1"))));
      },
      py::arg("kind"), py::kw_only(), py::arg("e") = 0, py::arg("m") = 0, py::arg("n") = 0, py::arg("n_minus") = 0,
      py::arg("n_plus") = 0, "The catalog building block as a complex document.");

  m.def(
      "dominant_hull",
      [](const std::string& label, const py::sequence& weight) {
        return to_py_list(dominant_hull(RootDatum::from_label(label), rat_vector(weight)).vertices());
      },
      py::arg("root_datum"), py::arg("weight"));

  m.def(
      "weyl_dimension",
      [](const std::string& label, const py::sequence& weight) {
        return to_py(weyl_dimension(RootDatum::from_label(label), rat_vector(weight)));
      },
      py::arg("root_datum"), py::arg("weight"));

  m.def(
      "weight_set", [](long r, std::vector<long> ranks) { return to_py_list(weight_set({r, std::move(ranks)})); },
      py::arg("r"), py::arg("ranks"));

  m.def(
      "is_matroid_polytope",
      [](const py::sequence& vertices) {
        std::vector<RatVector> pts;
        for (auto v : vertices) pts.push_back(rat_vector(v));
        return is_matroid_polytope(convex_hull(pts));
      },
      py::arg("vertices"));

  m.def(
      "matroid_subdivisions",
      [](long r, std::vector<long> ranks, long cap, unsigned threads) {
        MatroidSearchOptions opts;
        opts.cap = cap;
        opts.threads = threads;
        py::list out;
        for (const auto& s : enumerate_matroid_subdivisions({r, std::move(ranks)}, opts)) {
          py::dict d;
          d["heights"] = to_py_list(s.heights);
          py::list cells;
          for (const auto& c : s.cells) cells.append(py::cast(c.points));
          d["cells"] = cells;
          out.append(d);
        }
        return out;
      },
      py::arg("r"), py::arg("ranks"), py::arg("cap") = 2, py::arg("threads") = 0,
      "Matroid subdivisions of the weight-set polytope; cells list indices into weight_set(r, ranks).");
}
