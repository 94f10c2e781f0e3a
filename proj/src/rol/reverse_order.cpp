#include "iips/rol/reverse_order.hpp"

#include <array>
#include <string>

#include "pair_context.hpp"

namespace iips::rol {

using detail::PairContext;
using exact::block_assemble;
using exact::range_contains;
using exact::rank;

namespace {

constexpr std::array<std::pair<RolStatus, std::string_view>, 4> kStatusNames{{
    {RolStatus::FactorDagMissing, "FactorDagMissing"},
    {RolStatus::AbDagMissing, "AbDagMissing"},
    {RolStatus::HoldsEqual, "HoldsEqual"},
    {RolStatus::ExistsButUnequal, "ExistsButUnequal"},
}};

GrevilleFlags greville(const PairContext& c) {
  const Matrix& a = c.a;
  const Matrix& b = c.b;
  const Weight& n = c.w.n;
  const Matrix asa = c.a_star * a;
  const Matrix bbs = b * c.b_star;
  const Matrix asab = asa * b;
  const Matrix bbsas = bbs * c.a_star;
  const Matrix bbd = b * c.b_dag;
  const Matrix ada = c.a_dag * a;

  GrevilleFlags f;
  f.range_hermitian = core::is_range_hermitian(asa * bbs, n);
  f.range_inclusions = range_contains(b, asab) && range_contains(c.a_star, bbsas);
  f.projectors_range_hermitian =
      core::is_range_hermitian(bbd * asa, n) && core::is_range_hermitian(ada * bbs, n);
  f.absorption = bbd * asab == asab && ada * bbsas == bbsas;
  return f;
}

bool rank_criterion(const PairContext& c) {
  const Matrix d = c.a * c.b;
  const Matrix ds = core::adjoint(d, c.w.m, c.w.l);
  const Matrix block = block_assemble({
      {d, c.a * c.a_star * d},
      {d * c.b_star * c.b, d * ds * d},
  });
  return rank(block) == rank(d);
}

bool rank_hypothesis(const PairContext& c) {
  const Matrix block = block_assemble({
      {c.b_star * c.a_star, c.b_star * c.b},
      {c.a * c.a_star, c.a * c.b},
  });
  return rank(block) == rank(exact::hstack(c.a_star, c.b));
}

}  // namespace

std::string_view to_string(RolStatus s) {
  for (const auto& [status, name] : kStatusNames) {
    if (status == s) return name;
  }
  return "?";
}

RolStatus rol_status_from_string(std::string_view s) {
  for (const auto& [status, name] : kStatusNames) {
    if (name == s) return status;
  }
  throw ParseError("unknown ROL status \"" + std::string(s) + "\"");
}

GrevilleFlags greville_conditions(const Matrix& a, const Matrix& b, const WeightTriple& w) {
  return greville(PairContext::make(a, b, w));
}

bool rol_rank_criterion(const Matrix& a, const Matrix& b, const WeightTriple& w) {
  return rank_criterion(PairContext::make(a, b, w));
}

bool rol_rank_hypothesis(const Matrix& a, const Matrix& b, const WeightTriple& w) {
  return rank_hypothesis(PairContext::make(a, b, w));
}

RolReport rol_classify(const Matrix& a, const Matrix& b, const WeightTriple& w) {
  detail::require_pair_shapes(a, b, w);
  RolReport r;
  auto ar = core::mp_inverse(a, w.m, w.n);
  auto br = core::mp_inverse(b, w.n, w.l);
  auto abr = core::mp_inverse(a * b, w.m, w.l);
  r.a_exists = ar.exists;
  r.b_exists = br.exists;
  r.ab_exists = abr.exists;
  r.a_dag = ar.inverse;
  r.b_dag = br.inverse;
  r.ab_dag = abr.inverse;

  if (!ar.exists || !br.exists) {
    r.status = RolStatus::FactorDagMissing;
    return r;
  }

  const PairContext ctx(a, b, w, *ar.inverse, *br.inverse);
  r.greville = greville(ctx);
  r.rank_criterion = rank_criterion(ctx);
  r.rank_hypothesis = rank_hypothesis(ctx);
  r.bdag_adag = ctx.b_dag * ctx.a_dag;

  if (!abr.exists) {
    r.status = RolStatus::AbDagMissing;
  } else if (*abr.inverse == *r.bdag_adag) {
    r.status = RolStatus::HoldsEqual;
  } else {
    r.status = RolStatus::ExistsButUnequal;
  }
  return r;
}

}  // namespace iips::rol
