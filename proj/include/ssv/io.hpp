#pragma once

// JSON documents: complexes, heights, rank data and integer matrices.
// Rationals are written as strings "p/q"; integers as JSON numbers (or
// decimal strings when they do not fit in 64 bits).

#include <string>
#include <vector>

#include "json.hpp"
#include "ssv/complex.hpp"
#include "ssv/grassmann.hpp"

namespace ssv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const DiagonalizableGroup& g);
Json to_json(const LatticeSubgroup& g);
Json to_json(const SSVComplex& x);

/// Parses text as JSON; syntax errors become ParseError "source:line:column: ...".
Json parse_json_text(const std::string& text, const std::string& source);

/// Field errors become ParseError "source: /json/pointer: ...".
SSVComplex complex_from_json(const Json& doc, const std::string& source);
SSVComplex parse_complex_document(const std::string& text, const std::string& source);

struct HeightsDocument {
  std::vector<RatVector> points;
  std::vector<Rational> heights;
};

Json to_json(const HeightsDocument& h);
HeightsDocument heights_from_json(const Json& doc, const std::string& source);

/// {"01": 1, "2": 0, ...}.
RankFunctionData rank_data_from_json(const Json& doc, const std::string& source);
Json to_json(const RankFunctionData& d);

/// Either a JSON array of rows or whitespace-separated integers, one row per
/// line.
IntegerMatrix parse_matrix_text(const std::string& text, const std::string& source);

/// Two-space indentation, arrays of scalars on one line, trailing newline.
std::string dump(const Json& j);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace ssv
