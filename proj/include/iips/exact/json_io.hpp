#pragma once

#include <json.hpp>
#include <string>

#include "iips/exact/matrix.hpp"

namespace iips::exact {

using Json = nlohmann::ordered_json;

// Matrix wire format:
//   {"rows": r, "cols": c, "data": [[entry, ...], ...]}
// where an entry is "p", "p/q" (real) or ["p/q", "r/s"] (re, im).
// Serialisation emits lowest terms, omits a unit denominator and uses the
// array form only when the imaginary part is nonzero.

Json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const Matrix& m);

/// Throws ParseError; `field` prefixes every message so callers can tell which
/// input was malformed (e.g. "weights.M.data[1][0]").
Matrix matrix_from_json(const Json& j, const std::string& field = "matrix");

/// Reads and parses a JSON file; ParseError on IO or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace iips::exact
