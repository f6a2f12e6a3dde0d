#include "ssv/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <limits>
#include <sstream>

#include "ssv/errors.hpp"

namespace ssv {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (const auto& r : m.row_list()) out.push_back(to_json(r));
  return out;
}

Json to_json(const LatticeSubgroup& g) {
  Json out = Json::array();
  for (const auto& v : g.generators()) out.push_back(to_json(v));
  return out;
}

Json to_json(const DiagonalizableGroup& g) {
  Json rels = Json::array();
  for (const auto& r : g.relations()) rels.push_back(to_json(r));
  return {{"generators", g.generators()}, {"presentation", rels}};
}

Json to_json(const SSVComplex& x) {
  Json cells = Json::array();
  for (const auto& c : x.cells()) {
    Json vs = Json::array();
    for (const auto& v : c.polytope.vertices()) vs.push_back(to_json(v));
    Json cell = {{"id", c.id}, {"vertices", vs}, {"weight_group", to_json(c.weight_group)}};
    if (c.aut) {
      Json aut = to_json(c.aut->group);
      Json rs = Json::array();
      for (const auto& r : c.aut->restrictions) rs.push_back({{"to", r.to}, {"matrix", to_json(r.matrix)}});
      aut["restrictions"] = rs;
      cell["aut"] = aut;
    }
    cells.push_back(cell);
  }
  Json out = {{"schema_version", kSchemaVersion},
              {"rank", x.rank()},
              {"gamma", to_json(x.gamma())},
              {"cells", cells},
              {"maximal", x.maximal()}};
  if (x.root_datum()) out["root_datum"] = *x.root_datum();
  return out;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("column ");
    if (pos != std::string::npos) pos = what.find(": ", pos);
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

namespace {

// A JSON value together with its location, for error messages.
class Field {
 public:
  Field(const Json& j, std::string source, std::string path = "")
      : j_(j), source_(std::move(source)), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(source_ + ": " + (path_.empty() ? "/" : path_) + ": " + msg);
  }

  const Json& json() const { return j_; }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Field operator[](const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail("missing field '" + key + "'");
    return {j_.at(key), source_, path_ + "/" + key};
  }

  std::vector<Field> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Field> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], source_, path_ + "/" + std::to_string(i));
    return out;
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  Integer integer() const {
    if (j_.is_number_integer()) {
      if (j_.is_number_unsigned()) return Integer(std::to_string(j_.get<std::uint64_t>()));
      return Integer(std::to_string(j_.get<std::int64_t>()));
    }
    if (j_.is_string()) {
      try {
        return parse_integer(j_.get<std::string>());
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    fail("expected an integer");
  }

  std::size_t size() const {
    Integer z = integer();
    if (z < 0 || !z.fits_ulong_p()) fail("expected a nonnegative size");
    return z.get_ui();
  }

  Rational rational() const {
    if (j_.is_number_integer()) return Rational(integer());
    if (j_.is_string()) {
      try {
        return parse_rational(j_.get<std::string>());
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    fail("expected a rational written as a string \"p/q\"");
  }

  IntVector int_vector(std::size_t length) const {
    auto xs = items();
    if (xs.size() != length) fail("expected " + std::to_string(length) + " entries, found " + std::to_string(xs.size()));
    IntVector v;
    for (const auto& x : xs) v.push_back(x.integer());
    return v;
  }

  RatVector rat_vector(std::size_t length) const {
    auto xs = items();
    if (xs.size() != length) fail("expected " + std::to_string(length) + " entries, found " + std::to_string(xs.size()));
    RatVector v;
    for (const auto& x : xs) v.push_back(x.rational());
    return v;
  }

  std::vector<IntVector> int_rows(std::size_t length) const {
    std::vector<IntVector> out;
    for (const auto& r : items()) out.push_back(r.int_vector(length));
    return out;
  }

 private:
  const Json& j_;
  std::string source_;
  std::string path_;
};

AutData aut_from(const Field& f) {
  const std::size_t n = f["generators"].size();
  std::vector<IntVector> rels;
  if (f.has("presentation")) rels = f["presentation"].int_rows(n);
  AutData aut{DiagonalizableGroup(n, rels), {}};
  if (f.has("restrictions"))
    for (const auto& r : f["restrictions"].items())
      aut.restrictions.push_back({r["to"].string(), IntegerMatrix::from_rows(r["matrix"].int_rows(n), n)});
  return aut;
}

}  // namespace

SSVComplex complex_from_json(const Json& doc, const std::string& source) {
  Field root(doc, source);
  if (!doc.is_object()) root.fail("expected a complex document object");
  const std::string version = root["schema_version"].string();
  if (version != kSchemaVersion) root["schema_version"].fail("unsupported schema version '" + version + "'");
  const std::size_t rank = root["rank"].size();
  LatticeSubgroup gamma(rank + 1, root["gamma"].int_rows(rank + 1));

  std::vector<CellData> cells;
  for (const auto& c : root["cells"].items()) {
    std::vector<RatVector> vs;
    for (const auto& v : c["vertices"].items()) vs.push_back(v.rat_vector(rank));
    if (vs.empty()) c["vertices"].fail("a cell needs at least one vertex");
    CellData cell{c["id"].string(), convex_hull(vs),
                  LatticeSubgroup(rank + 1, c["weight_group"].int_rows(rank + 1)), std::nullopt};
    if (c.has("aut") && !c.json().at("aut").is_null()) cell.aut = aut_from(c["aut"]);
    cells.push_back(std::move(cell));
  }
  std::vector<std::string> maximal;
  for (const auto& m : root["maximal"].items()) maximal.push_back(m.string());
  std::optional<std::string> rd;
  if (root.has("root_datum") && !doc.at("root_datum").is_null()) {
    rd = root["root_datum"].string();
    try {
      RootDatum::from_label(*rd);
    } catch (const Error& e) {
      root["root_datum"].fail(e.what());
    }
  }
  try {
    return SSVComplex(rank, std::move(gamma), std::move(cells), std::move(maximal), std::move(rd));
  } catch (const DimensionError& e) {
    root.fail(e.what());
  }
}

SSVComplex parse_complex_document(const std::string& text, const std::string& source) {
  return complex_from_json(parse_json_text(text, source), source);
}

Json to_json(const HeightsDocument& h) {
  Json pts = Json::array(), hs = Json::array();
  for (const auto& p : h.points) pts.push_back(to_json(p));
  for (const auto& x : h.heights) hs.push_back(to_json(x));
  return {{"points", pts}, {"heights", hs}};
}

HeightsDocument heights_from_json(const Json& doc, const std::string& source) {
  Field root(doc, source);
  HeightsDocument h;
  auto pts = root["points"].items();
  if (pts.empty()) root["points"].fail("expected at least one point");
  const std::size_t dim = pts.front().items().size();
  for (const auto& p : pts) h.points.push_back(p.rat_vector(dim));
  auto hs = root["heights"].items();
  if (hs.size() != pts.size())
    root["heights"].fail("expected " + std::to_string(pts.size()) + " heights, found " + std::to_string(hs.size()));
  for (const auto& x : hs) h.heights.push_back(x.rational());
  return h;
}

RankFunctionData rank_data_from_json(const Json& doc, const std::string& source) {
  Field root(doc, source);
  if (!doc.is_object()) root.fail("expected an object keyed by index strings");
  RankFunctionData d;
  for (const auto& [key, value] : doc.items()) {
    Field f = root[key];
    IndexSet set;
    try {
      set = parse_index_set(key);
    } catch (const ParseError& e) {
      f.fail(e.what());
    }
    Integer v = f.integer();
    if (!v.fits_slong_p()) f.fail("value out of range");
    d.values[set] = v.get_si();
  }
  return d;
}

Json to_json(const RankFunctionData& d) {
  Json out = Json::object();
  for (const auto& [set, v] : d.values) out[index_set_key(set)] = v;
  return out;
}

IntegerMatrix parse_matrix_text(const std::string& text, const std::string& source) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return IntegerMatrix(0, 0);
  if (text[first] == '[') {
    Json j = parse_json_text(text, source);
    Field root(j, source);
    auto rows = root.items();
    if (rows.empty()) return IntegerMatrix(0, 0);
    const std::size_t cols = rows.front().items().size();
    return IntegerMatrix::from_rows(root.int_rows(cols), cols);
  }
  std::vector<IntVector> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    IntVector row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.push_back(parse_integer(tok));
      } catch (const ParseError&) {
        throw ParseError(source + ":" + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected " + std::to_string(rows.front().size()) +
                       " entries, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return IntegerMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void write(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (scalar_array(j)) {
    out += j.dump();
    return;
  }
  if (j.is_array() && !j.empty()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    return;
  }
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      write(out, value, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace ssv
