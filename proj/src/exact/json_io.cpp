#include "iips/exact/json_io.hpp"

#include <fstream>

#include "iips/errors.hpp"

namespace iips::exact {

namespace {

Rational rational_from_json(const Json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError(field + ": expected a string \"p\" or \"p/q\"");
  Rational q;
  if (!parse_rational(j.get<std::string>(), q)) {
    throw ParseError(field + ": malformed rational \"" + j.get<std::string>() + "\"");
  }
  return q;
}

std::size_t dimension_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
    throw ParseError(field + ": expected a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json scalar_to_json(const GaussianRational& z) {
  if (z.is_real()) return format_rational(z.re());
  return Json::array({format_rational(z.re()), format_rational(z.im())});
}

GaussianRational scalar_from_json(const Json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(field + ": complex entry must be [re, im]");
    return {rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]")};
  }
  return GaussianRational(rational_from_json(j, field));
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    data.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError(field + ": expected an object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw ParseError(field + ": missing \"" + key + "\"");
  }
  const std::size_t rows = dimension_from_json(j["rows"], field + ".rows");
  const std::size_t cols = dimension_from_json(j["cols"], field + ".cols");
  const Json& data = j["data"];
  if (!data.is_array() || data.size() != rows) {
    throw ParseError(field + ".data: expected " + std::to_string(rows) + " rows");
  }
  std::vector<GaussianRational> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_field = field + ".data[" + std::to_string(i) + "]";
    if (!data[i].is_array() || data[i].size() != cols) {
      throw ParseError(row_field + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      entries.push_back(scalar_from_json(data[i][k], row_field + "[" + std::to_string(k) + "]"));
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace iips::exact
