#pragma once

#include <optional>
#include <string>

#include "iips/core/mp_inverse.hpp"
#include "iips/exact/json_io.hpp"

namespace iips::core {

using exact::Json;

/// Contents of a weights file {"M": <matrix>, "N": <matrix>, "L": <matrix>?}.
struct WeightSet {
  Weight m;
  Weight n;
  std::optional<Weight> l;

  /// Throws ParseError naming "L" when the file had no L.
  WeightTriple triple() const;
};

/// Throws ParseError for a malformed matrix and WeightError (message prefixed
/// with the key) for a matrix that is not a valid weight.
WeightSet weights_from_json(const Json& j);
Json weights_to_json(const WeightTriple& w);

Json mp_result_to_json(const MpResult& r);

}  // namespace iips::core
