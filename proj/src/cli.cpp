#include "ssv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ssv/complex.hpp"
#include "ssv/degeneration.hpp"
#include "ssv/errors.hpp"
#include "ssv/gluing.hpp"
#include "ssv/grassmann.hpp"
#include "ssv/io.hpp"
#include "ssv/lattice.hpp"
#include "ssv/root_data.hpp"

namespace ssv {

namespace {

struct Input {
  std::string path;
  std::string name;
  std::string digest;
};

// Inputs read during one command, in reading order.
class Session {
 public:
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return record(path, std::filesystem::path(path).filename().string(), ss.str());
  }

  std::string read_stream(std::istream& in, const std::string& name) {
    std::stringstream ss;
    ss << in.rdbuf();
    return record("", name, ss.str());
  }

  const std::vector<Input>& inputs() const { return inputs_; }

 private:
  std::string record(const std::string& path, const std::string& name, std::string text) {
    inputs_.push_back({path, name, sha256_hex(text)});
    return text;
  }

  std::vector<Input> inputs_;
};

struct Outcome {
  int status = kExitOk;
  std::string summary;
  Json results = Json::object();
  std::optional<Json> error;
  std::optional<Json> document;  // written verbatim instead of a report
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (out.empty()) throw ParseError("expected a comma-separated list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& t : split_csv(text)) {
    Integer z = parse_integer(t);
    if (!z.fits_slong_p()) throw ParseError("value out of range: " + t);
    out.push_back(z.get_si());
  }
  return out;
}

RatVector parse_rational_list(const std::string& text) {
  RatVector out;
  for (const auto& t : split_csv(text)) out.push_back(parse_rational(t));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string weight_text(const RatVector& w) { return w.size() == 1 ? to_string(w[0]) : to_string(w); }

Json group_json(const DiagonalizableGroup& g) {
  const AbelianInvariants& inv = g.invariants();
  return {{"description", describe(g)}, {"free_rank", inv.free_rank}, {"torsion", to_json(inv.torsion)}};
}

std::string group_text(const DiagonalizableGroup& g) {
  const AbelianInvariants& inv = g.invariants();
  if (inv.trivial()) return "trivial";
  std::vector<std::string> t;
  for (const auto& d : inv.torsion) t.push_back(to_string(d));
  return "rank " + std::to_string(inv.free_rank) + ", torsion " + (t.empty() ? "none" : join(t, ","));
}

Json vertices_json(const RationalPolytope& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SSVComplex load_complex(Session& s, const std::string& path) {
  const std::string name = std::filesystem::path(path).filename().string();
  return parse_complex_document(s.read(path), name);
}

Outcome cmd_validate(Session& s, const std::string& file) {
  SSVComplex x = load_complex(s, file);
  ValidationReport r = validate_complex(x);
  Outcome o;
  o.results["valid"] = r.passed();
  o.results["cells"] = x.cells().size();
  o.results["maximal"] = sorted(x.maximal());
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
  o.results["checks"] = checks;
  o.results["moment_set_convex"] = r.moment_set_convex;
  if (r.convexity_witness) o.results["convexity_witness"] = to_json(*r.convexity_witness);
  o.results["cohen_macaulay"] = r.cohen_macaulay;
  if (!r.passed()) {
    const CheckResult* f = r.first_failure();
    o.status = kExitFailure;
    o.summary = "fail: " + f->name + (f->witnesses.empty() ? "" : ": " + f->witnesses.front());
    return o;
  }
  OrbitPoset p = orbit_poset(x);
  o.results["orbit_poset"] = {{"size", p.size()}, {"minimal", p.minimal_elements()}, {"simple", p.simple()}};
  o.summary = std::string("pass; moment set ") + (r.moment_set_convex ? "convex" : "not convex") +
              "; CM: " + (r.cohen_macaulay ? "true" : "false");
  return o;
}

Outcome cmd_sections(Session& s, const std::string& file, long degree, const std::string& label_opt) {
  SSVComplex x = load_complex(s, file);
  std::string label = label_opt;
  if (label.empty()) {
    if (!x.root_datum()) throw ParamError("no --root-datum given and the document names none");
    label = *x.root_datum();
  }
  RootDatum d = RootDatum::from_label(label);
  SectionModuleSummary sm = section_module(x, Integer(degree), d);
  Outcome o;
  o.results["degree"] = degree;
  o.results["root_datum"] = label;
  Json ws = Json::array();
  std::vector<std::string> names;
  for (const auto& w : sm.weights) {
    ws.push_back({{"weight", to_json(w.weight)},
                  {"multiplicity", to_json(w.multiplicity)},
                  {"dimension", to_json(w.dimension)}});
    names.push_back(weight_text(w.weight));
  }
  o.results["weights"] = ws;
  o.results["total_dimension"] = to_json(sm.total_dimension);
  o.summary = "weights " + (names.empty() ? std::string("none") : join(names, ",")) + "; dim " +
              to_string(sm.total_dimension);
  return o;
}

Outcome cmd_cohomology(Session& s, const std::string& file, const std::string& mode_opt) {
  SSVComplex x = load_complex(s, file);
  AutMode mode = AutMode::Toric;
  if (mode_opt == "supplied") {
    mode = AutMode::Supplied;
  } else if (mode_opt.empty()) {
    bool any = std::any_of(x.cells().begin(), x.cells().end(), [](const CellData& c) { return c.aut.has_value(); });
    mode = any ? AutMode::Supplied : AutMode::Toric;
  }
  GluingComplex c = build_gluing_complex(x, mode);
  DiagonalizableGroup h0 = diag_cohomology(c, 0), h1 = diag_cohomology(c, 1);
  Outcome o;
  o.results["mode"] = mode == AutMode::Toric ? "toric" : "supplied";
  auto terms = [](const std::vector<GluingTerm>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back({{"cover", t.cover}, {"face", t.face}, {"group", describe(t.group)}});
    return out;
  };
  o.results["cochains"] = {{"c0", terms(c.c0)}, {"c1", terms(c.c1)}, {"c2", terms(c.c2)}};
  o.results["H0"] = group_json(h0);
  o.results["H1"] = group_json(h1);
  o.summary = "H0: " + group_text(h0) + "; H1: " + group_text(h1);
  return o;
}

Outcome cmd_degenerate(Session& s, const std::string& file, const std::string& heights_file,
                       const std::string& base_change) {
  SSVComplex x = load_complex(s, file);
  const std::string hname = std::filesystem::path(heights_file).filename().string();
  HeightsDocument hd = heights_from_json(parse_json_text(s.read(heights_file), hname), hname);
  if (x.maximal().size() != 1) throw DomainError("degenerate needs a complex with exactly one maximal cell");
  const RationalPolytope& q = x.cell(x.maximal().front()).polytope;
  for (const auto& p : hd.points)
    if (p.size() != x.rank()) throw DimensionError("height point " + to_string(p) + " has the wrong length");
  if (!(convex_hull(hd.points) == q)) throw DomainError("the height points do not span the maximal cell");

  HeightFunction h = HeightFunction::lifted(hd.points, hd.heights);
  AffineMonoid m = weight_monoid(q, x.gamma());
  ReducedCheck chk = special_fiber_reduced(h, m);
  Integer n = base_change_exponent(h, m);

  Outcome o;
  o.results["reduced"] = chk.reduced;
  if (chk.witness)
    o.results["witness"] = {{"element", to_json(*chk.witness)}, {"height", to_json(h(*chk.witness))}};
  o.results["base_change_exponent"] = to_json(n);
  Json cells = Json::array();
  for (const auto& c : h.cells()) cells.push_back({{"points", c.points}, {"vertices", vertices_json(c.polytope)}});
  o.results["subdivision"] = cells;

  if (!chk.reduced && base_change != "auto") {
    o.status = kExitFailure;
    o.summary = "not reduced: h" + to_string(*chk.witness) + " = " + to_string(h(*chk.witness)) +
                "; base change exponent " + to_string(n);
    return o;
  }
  Integer applied = chk.reduced ? Integer(1) : n;
  SSVComplex sf = special_fiber_complex(x.gamma(), q, applied == 1 ? h : h.scaled(applied), x.root_datum());
  const bool valid = validate_complex(sf).passed();
  Json maximal = Json::array();
  for (const CellData* c : sf.maximal_cells()) maximal.push_back({{"id", c->id}, {"vertices", vertices_json(c->polytope)}});
  o.results["special_fiber"] = {{"applied_base_change", to_json(applied)},
                                {"cells", sf.cells().size()},
                                {"maximal", maximal},
                                {"valid", valid}};
  if (!valid) o.status = kExitFailure;
  o.summary = (applied > 1 ? "base change " + to_string(applied) + "; " : std::string()) + "reduced; " +
              std::to_string(maximal.size()) + (maximal.size() == 1 ? " maximal cell; " : " maximal cells; ") + (valid ? "valid" : "invalid");
  return o;
}

GradedShape shape_of(long r, const std::string& ranks) { return {r, parse_long_list(ranks)}; }

Json points_json(const std::vector<IntVector>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Outcome cmd_weightset(const GradedShape& shape) {
  auto pts = weight_set(shape);
  Outcome o;
  o.results = {{"r", shape.r}, {"ranks", shape.ranks}, {"count", pts.size()}, {"points", points_json(pts)}};
  o.summary = std::to_string(pts.size()) + " points";
  return o;
}

unsigned env_threads() {
  const char* v = std::getenv("SSV_THREADS");
  if (!v || !*v) return 0;
  Integer z = parse_integer(v);
  if (z < 0 || !z.fits_uint_p()) throw ParamError("SSV_THREADS must be a nonnegative integer");
  return static_cast<unsigned>(z.get_ui());
}

Outcome cmd_subdivisions(const GradedShape& shape, long cap) {
  MatroidSearchOptions opts;
  opts.cap = cap;
  opts.threads = env_threads();
  auto subs = enumerate_matroid_subdivisions(shape, opts);
  Outcome o;
  Json list = Json::array();
  std::size_t trivial = 0;
  for (const auto& sub : subs) {
    Json cells = Json::array();
    for (const auto& c : sub.cells) cells.push_back(c.points);
    Json hs = Json::array();
    for (const auto& h : sub.heights) hs.push_back(to_json(h));
    list.push_back({{"cells", cells}, {"heights", hs}, {"trivial", sub.trivial()}});
    trivial += sub.trivial();
  }
  o.results = {{"r", shape.r},     {"ranks", shape.ranks}, {"cap", cap}, {"points", points_json(weight_set(shape))},
               {"count", subs.size()}, {"subdivisions", list}};
  o.summary = std::to_string(subs.size()) + " subdivisions (" + std::to_string(trivial) + " trivial)";
  return o;
}

Outcome cmd_thincell(Session& s, const GradedShape& shape, const std::string& d_arg) {
  RankFunctionData d;
  auto first = d_arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && d_arg[first] == '{') {
    d = rank_data_from_json(parse_json_text(d_arg, "--d"), "--d");
  } else {
    const std::string name = std::filesystem::path(d_arg).filename().string();
    d = rank_data_from_json(parse_json_text(s.read(d_arg), name), name);
  }
  ThinCellWeights t = thin_cell_weight_set(shape, d);
  Outcome o;
  o.results = {{"r", shape.r}, {"ranks", shape.ranks}, {"d", to_json(d)}, {"count", t.points.size()},
               {"points", points_json(t.points)}, {"full", t.fullness.full}};
  if (t.fullness.witness) o.results["witness"] = to_json(*t.fullness.witness);
  o.summary = std::to_string(t.points.size()) + " points; " +
              (t.fullness.full ? std::string("full") : "not full, missing " + to_string(*t.fullness.witness));
  return o;
}

Outcome cmd_moment(const std::string& label, const std::string& weight, bool admissible) {
  RootDatum d = RootDatum::from_label(label);
  Weight w = parse_rational_list(weight);
  if (w.size() != d.rank())
    throw ParamError("weight has " + std::to_string(w.size()) + " coordinates but " + label + " has rank " +
                     std::to_string(d.rank()));
  Outcome o;
  o.results["root_datum"] = label;
  o.results["weight"] = to_json(w);
  o.results["dominant"] = is_dominant(w);
  auto orbit = weyl_orbit(d, w);
  Json orb = Json::array();
  for (const auto& v : orbit) orb.push_back(to_json(v));
  o.results["orbit"] = orb;
  if (!is_dominant(w)) {
    o.status = kExitFailure;
    o.summary = "weight " + to_string(w) + " is not dominant";
    return o;
  }
  RationalPolytope hull = dominant_hull(d, w);
  o.results["dominant_hull"] = vertices_json(hull);
  if (is_integral(w)) o.results["weyl_dimension"] = to_json(weyl_dimension(d, w));
  std::vector<std::string> vs;
  for (const auto& v : hull.vertices()) vs.push_back(to_string(v));
  o.summary = "dominant hull " + join(vs, ",");
  if (admissible) {
    bool ok = is_w_admissible(d, convex_hull(orbit));
    o.results["w_admissible"] = ok;
    o.summary += std::string("; W-admissible: ") + (ok ? "true" : "false");
  }
  return o;
}

Outcome cmd_snf(Session& s, std::istream& in) {
  IntegerMatrix m = parse_matrix_text(s.read_stream(in, "<stdin>"), "<stdin>");
  SmithDecomposition sd = smith_normal_form(m);
  AbelianInvariants coker = cokernel_invariants(m.row_list(), m.cols());
  Outcome o;
  o.results = {{"rows", m.rows()},
               {"cols", m.cols()},
               {"diagonal", to_json(sd.diag)},
               {"rank", sd.rank()},
               {"cokernel", {{"free_rank", coker.free_rank}, {"torsion", to_json(coker.torsion)}}}};
  std::vector<std::string> diag;
  for (const auto& x : sd.diag) diag.push_back(to_string(x));
  o.summary = "diagonal " + (diag.empty() ? std::string("empty") : join(diag, ",")) + "; cokernel " + to_string(coker);
  return o;
}

Outcome cmd_catalog(const std::string& kind, const SL2Params& p) {
  CellData c = sl2_catalog(parse_sl2_kind(kind), p);
  Outcome o;
  o.document = to_json(singleton_complex(c, "A1"));
  return o;
}

// "a.b.0: value" lines for every leaf.
void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& lines) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    if (j.empty()) lines.push_back(prefix + ": {}");
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, lines);
    return;
  }
  if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
    if (flat) {
      std::vector<std::string> parts;
      for (const auto& v : j) parts.push_back(scalar(v));
      lines.push_back(prefix + ": [" + join(parts, ", ") + "]");
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), lines);
    return;
  }
  lines.push_back(prefix + ": " + scalar(j));
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return dump(report);
  std::vector<std::string> lines;
  flatten(report, "", lines);
  return join(lines, "\n") + "\n";
}

std::vector<std::string> echo(const std::vector<std::string>& args, const Session& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0) continue;
    auto it = std::find_if(s.inputs().begin(), s.inputs().end(), [&](const Input& in) { return in.path == a; });
    out.push_back(it != s.inputs().end() ? it->name : a);
  }
  return out;
}

int exit_status(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ParamError*>(&e) ||
      dynamic_cast<const InputError*>(&e))
    return kExitUsage;
  return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of multiplicity-free stable spherical varieties", "ssvtool"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", out_path;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to FILE");
  app.set_version_flag("--version", std::string(SSV_VERSION));

  std::string file, heights_file, root_datum, mode, base_change = "none", kind, ranks, d_arg, weight;
  long degree = 0, r = 0, cap = 2;
  bool admissible = false;
  SL2Params params;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a complex document");
  validate->add_option("file", file, "Complex document")->required();

  auto* sections = app.add_subcommand("sections", "Weights of sections in one degree");
  sections->add_option("file", file, "Complex document")->required();
  sections->add_option("--degree", degree, "Degree n")->required();
  sections->add_option("--root-datum", root_datum, "Root datum label, e.g. A1");

  auto* cohomology = app.add_subcommand("cohomology", "H^0 and H^1 of the gluing complex");
  cohomology->add_option("file", file, "Complex document")->required();
  cohomology->add_option("--mode", mode, "toric or supplied; default: supplied when aut data is present")
      ->check(CLI::IsMember({"toric", "supplied"}));

  auto* degenerate = app.add_subcommand("degenerate", "Special fiber of a degeneration given by heights");
  degenerate->add_option("file", file, "Complex document with one maximal cell")->required();
  degenerate->add_option("--heights", heights_file, "Heights document")->required();
  degenerate->add_option("--base-change", base_change, "none or auto")->check(CLI::IsMember({"none", "auto"}));

  auto* matroid = app.add_subcommand("matroid", "Grassmannian weight sets and matroid subdivisions");
  matroid->require_subcommand(1);
  auto shape_options = [&](CLI::App* sub) {
    sub->add_option("--r", r, "Corank r")->required();
    sub->add_option("--ranks", ranks, "Ranks of the graded parts, comma separated")->required();
  };
  auto* weightset = matroid->add_subcommand("weightset", "The weight set S^{r,E}");
  shape_options(weightset);
  auto* subdivisions = matroid->add_subcommand("subdivisions", "Regular matroid subdivisions of the weight set");
  shape_options(subdivisions);
  subdivisions->add_option("--cap", cap, "Largest integer height");
  auto* thincell = matroid->add_subcommand("thincell", "Weight set of a thin Schubert cell");
  shape_options(thincell);
  thincell->add_option("--d", d_arg, "Rank data as a JSON object or a file")->required();

  auto* moment = app.add_subcommand("moment", "Dominant hull and admissibility of a Weyl orbit");
  moment->add_option("--root-datum", root_datum, "Root datum label")->required();
  moment->add_option("--weight", weight, "Weight in fundamental-weight coordinates, comma separated")->required();
  moment->add_flag("--admissible", admissible, "Test W-admissibility of conv(W lambda)");

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix read from stdin");

  auto* catalog = app.add_subcommand("catalog", "Emit an SL(2) building block as a complex document");
  catalog->add_option("--kind", kind, "P1, Fe, Se, P1xP1 or P2")->required();
  catalog->add_option("--e", params.e, "e");
  catalog->add_option("--m", params.m, "m");
  catalog->add_option("--n", params.n, "n");
  catalog->add_option("--n-minus", params.n_minus, "n_-");
  catalog->add_option("--n-plus", params.n_plus, "n_+");

  Session session;
  Outcome o;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SSV_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ssvtool: " << e.what() << "\n";
    o.status = kExitUsage;
    o.error = Json{{"kind", "UsageError"}, {"message", e.what()}};
    o.summary = std::string("UsageError: ") + e.what();
  }

  if (!o.error) {
    try {
      if (*validate) o = cmd_validate(session, file);
      else if (*sections) o = cmd_sections(session, file, degree, root_datum);
      else if (*cohomology) o = cmd_cohomology(session, file, mode);
      else if (*degenerate) o = cmd_degenerate(session, file, heights_file, base_change);
      else if (*weightset) o = cmd_weightset(shape_of(r, ranks));
      else if (*subdivisions) o = cmd_subdivisions(shape_of(r, ranks), cap);
      else if (*thincell) o = cmd_thincell(session, shape_of(r, ranks), d_arg);
      else if (*moment) o = cmd_moment(root_datum, weight, admissible);
      else if (*snf) o = cmd_snf(session, in);
      else if (*catalog) o = cmd_catalog(kind, params);
    } catch (const Error& e) {
      o = Outcome{};
      o.status = exit_status(e);
      o.error = Json{{"kind", e.kind()}, {"message", e.what()}};
      o.summary = std::string(e.kind()) + ": " + e.what();
      err << "ssvtool: " << e.kind() << ": " << e.what() << "\n";
    }
  }

  std::string text;
  if (o.document) {
    text = dump(*o.document);
  } else {
    Json report;
    report["command"] = echo(args, session);
    report["status"] = o.status == kExitOk ? "ok" : o.status == kExitFailure ? "failure" : "usage_error";
    if (!o.summary.empty()) report["summary"] = o.summary;
    if (o.error) report["error"] = *o.error;
    report["results"] = o.results;
    Json inputs = Json::array();
    for (const auto& i : session.inputs()) inputs.push_back({{"name", i.name}, {"sha256", i.digest}});
    report["provenance"] = {{"tool", "ssvtool"}, {"version", SSV_VERSION}, {"inputs", inputs}};
    text = render(report, format);
  }

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) {
      err << "ssvtool: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  return o.status;
}

}  // namespace ssv
