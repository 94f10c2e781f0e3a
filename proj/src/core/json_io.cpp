#include "iips/core/json_io.hpp"

#include "iips/errors.hpp"

namespace iips::core {

namespace {

Weight weight_field(const Json& j, const char* key) {
  Matrix h = exact::matrix_from_json(j[key], std::string("weights.") + key);
  try {
    return Weight::validate(std::move(h));
  } catch (const WeightError& e) {
    throw WeightError(e.kind(), std::string("weights.") + key + ": " + e.what());
  }
}

}  // namespace

WeightTriple WeightSet::triple() const {
  if (!l) throw ParseError("weights.L: required but missing");
  return {m, n, *l};
}

WeightSet weights_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("weights: expected an object");
  for (const char* key : {"M", "N"}) {
    if (!j.contains(key)) throw ParseError(std::string("weights: missing \"") + key + "\"");
  }
  WeightSet ws{weight_field(j, "M"), weight_field(j, "N"), std::nullopt};
  if (j.contains("L")) ws.l = weight_field(j, "L");
  return ws;
}

Json weights_to_json(const WeightTriple& w) {
  Json out;
  out["M"] = exact::matrix_to_json(w.m.h());
  out["N"] = exact::matrix_to_json(w.n.h());
  out["L"] = exact::matrix_to_json(w.l.h());
  return out;
}

Json mp_result_to_json(const MpResult& r) {
  Json out;
  out["exists"] = r.exists;
  out["rank_a"] = r.rank_a;
  out["rank_aastar"] = r.rank_aastar;
  out["rank_astara"] = r.rank_astara;
  out["inverse"] = r.inverse ? exact::matrix_to_json(*r.inverse) : Json(nullptr);
  return out;
}

}  // namespace iips::core
