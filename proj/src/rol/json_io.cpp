#include "iips/rol/json_io.hpp"

namespace iips::rol {

namespace {

Json optional_matrix(const std::optional<Matrix>& m) {
  return m ? exact::matrix_to_json(*m) : Json(nullptr);
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json greville_to_json(const GrevilleFlags& g) {
  Json out;
  out["range_hermitian"] = g.range_hermitian;
  out["range_inclusions"] = g.range_inclusions;
  out["projectors_range_hermitian"] = g.projectors_range_hermitian;
  out["absorption"] = g.absorption;
  return out;
}

Json rol_report_to_json(const RolReport& r) {
  Json out;
  out["status"] = std::string(to_string(r.status));
  out["a_exists"] = r.a_exists;
  out["b_exists"] = r.b_exists;
  out["ab_exists"] = r.ab_exists;
  out["greville"] = r.greville ? greville_to_json(*r.greville) : Json(nullptr);
  out["rank_criterion"] = optional_bool(r.rank_criterion);
  out["rank_hypothesis"] = optional_bool(r.rank_hypothesis);
  out["a_dag"] = optional_matrix(r.a_dag);
  out["b_dag"] = optional_matrix(r.b_dag);
  out["ab_dag"] = optional_matrix(r.ab_dag);
  out["bdag_adag"] = optional_matrix(r.bdag_adag);
  return out;
}

Json identity_instance_to_json(const IdentityInstance& inst) {
  Json out;
  out["identity"] = std::string(to_string(inst.id));
  out["lhs"] = inst.lhs;
  out["rhs"] = inst.rhs;
  out["holds"] = inst.holds;
  Json extra = Json::array();
  for (const auto& s : inst.extra) {
    extra.push_back({{"label", s.label}, {"lhs", s.lhs}, {"rhs", s.rhs}});
  }
  out["extra"] = std::move(extra);
  Json ops = Json::object();
  for (const auto& [name, m] : inst.operands) ops[name] = exact::matrix_to_json(m);
  out["operands"] = std::move(ops);
  out["weights"] = inst.weights ? core::weights_to_json(*inst.weights) : Json(nullptr);
  return out;
}

}  // namespace iips::rol
