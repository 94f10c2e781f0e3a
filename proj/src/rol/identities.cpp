#include "iips/rol/identities.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "iips/core/mp_inverse.hpp"
#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::rol {

using core::adjoint;
using core::Weight;
using exact::block_assemble;
using exact::conj_transpose;
using exact::hstack;
using exact::vstack;

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 12> kNames{{
    {IdentityId::SchurGeneric, "SchurGeneric"},
    {IdentityId::SchurEuclideanMP, "SchurEuclideanMP"},
    {IdentityId::SchurWeightedMP, "SchurWeightedMP"},
    {IdentityId::BlockRankabcd, "BlockRankabcd"},
    {IdentityId::RangeIntersection, "RangeIntersection"},
    {IdentityId::IdempotentCommutator, "IdempotentCommutator"},
    {IdentityId::HermitianIdempotentCommutator, "HermitianIdempotentCommutator"},
    {IdentityId::AdjointSwap, "AdjointSwap"},
    {IdentityId::TripleProduct, "TripleProduct"},
    {IdentityId::GapCor13, "GapCor13"},
    {IdentityId::CommutatorThm15, "CommutatorThm15"},
    {IdentityId::CarlsonBlock, "CarlsonBlock"},
}};

long rk(const Matrix& m) { return static_cast<long>(exact::rank(m)); }

Matrix dagger(const Matrix& a, const Weight& m, const Weight& n, const char* name) {
  auto r = core::mp_inverse(a, m, n);
  if (!r.exists) throw NotExistsError(std::string(name) + "^[+] does not exist");
  return std::move(*r.inverse);
}

bool idempotent(const Matrix& p) { return p.is_square() && p * p == p; }

class Evaluator {
 public:
  Evaluator(IdentityId id, const Operands& ops, const std::optional<WeightTriple>& w)
      : id_(id), ops_(ops), w_(w) {}

  const Matrix& op(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) {
      throw DimensionError(std::string(to_string(id_)) + ": missing operand " + name);
    }
    return it->second;
  }

  const WeightTriple& weights() const {
    if (!w_) throw DimensionError(std::string(to_string(id_)) + ": weights are required");
    return *w_;
  }

  static void require_order(const Matrix& a, const Weight& rows, const Weight& cols, const char* what) {
    if (a.rows() != rows.order() || a.cols() != cols.order()) {
      throw DimensionError(std::string(what) + " does not match its weight orders");
    }
  }

  void run(IdentityInstance& out) const {
    switch (id_) {
      case IdentityId::SchurGeneric: schur_generic(out); break;
      case IdentityId::SchurEuclideanMP: schur_euclidean(out); break;
      case IdentityId::SchurWeightedMP: schur_weighted(out); break;
      case IdentityId::BlockRankabcd: block_rank_abcd(out); break;
      case IdentityId::RangeIntersection: range_intersection(out); break;
      case IdentityId::IdempotentCommutator: idempotent_commutator(out); break;
      case IdentityId::HermitianIdempotentCommutator: hermitian_idempotent_commutator(out); break;
      case IdentityId::AdjointSwap: adjoint_swap(out); break;
      case IdentityId::TripleProduct: triple_product(out); break;
      case IdentityId::GapCor13: gap_cor13(out); break;
      case IdentityId::CommutatorThm15: commutator_thm15(out); break;
      case IdentityId::CarlsonBlock: carlson_block(out); break;
    }
  }

 private:
  void schur_generic(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    out.lhs = rk(block_assemble({{a, a * b}, {c * a, d}}));
    out.rhs = rk(a) + rk(d - c * a * b);
  }

  void schur_euclidean(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    const Matrix as = conj_transpose(a);
    out.lhs = rk(block_assemble({{as * a * as, as * b}, {c * as, d}}));
    out.rhs = rk(a) + rk(d - c * exact::euclidean_pinv(a) * b);
  }

  void schur_weighted(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    const WeightTriple& w = weights();
    require_order(a, w.m, w.n, "A");
    const Matrix ad = dagger(a, w.m, w.n, "A");
    const Matrix as = adjoint(a, w.m, w.n);
    const Matrix asaas = as * a * as;
    const Matrix asb = as * b;
    const Matrix cas = c * as;
    out.lhs = rk(block_assemble({{asaas, asb}, {cas, d}}));
    out.extra.push_back({"swapped_orientation", rk(block_assemble({{d, cas}, {asb, asaas}})), 0});
    out.rhs = rk(a) + rk(d - c * ad * b);
    out.extra.back().rhs = out.rhs;
  }

  void block_rank_abcd(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    const long ra = rk(a);
    if (rk(block_assemble({{a, b}, {c, d}})) != ra || rk(b) != ra || rk(c) != ra) {
      throw PreconditionError("BlockRankabcd: requires rank[[A,B],[C,D]] = rank A = rank B = rank C");
    }
    out.lhs = ra;
    out.rhs = rk(d);
  }

  void range_intersection(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B");
    if (!a.is_square()) throw DimensionError("RangeIntersection: A must be square");
    const Matrix ab = a * b;
    if (exact::index(a) != 1) throw PreconditionError("RangeIntersection: requires ind(A) = 1");
    if (!exact::range_contains(b, ab)) throw PreconditionError("RangeIntersection: requires R(AB) in R(B)");
    out.lhs = rk(ab);
    out.rhs = rk(a) + rk(b) - rk(hstack(a, b));
  }

  void idempotent_commutator(IdentityInstance& out) const {
    const Matrix &p = op("P"), &q = op("Q");
    if (!idempotent(p) || !idempotent(q)) {
      throw PreconditionError("IdempotentCommutator: P and Q must be idempotent");
    }
    const Matrix pq = p * q;
    const Matrix qp = q * p;
    out.lhs = rk(pq - qp);
    out.rhs = rk(vstack(p, q)) + rk(hstack(p, q)) + rk(pq) + rk(qp) - 2 * rk(p) - 2 * rk(q);
  }

  void hermitian_idempotent_commutator(IdentityInstance& out) const {
    const Matrix &p = op("P"), &q = op("Q");
    const Weight& n = weights().n;
    require_order(p, n, n, "P");
    require_order(q, n, n, "Q");
    if (!idempotent(p) || !idempotent(q) || !core::is_w_hermitian(p, n) || !core::is_w_hermitian(q, n)) {
      throw PreconditionError("HermitianIdempotentCommutator: P and Q must be N-Hermitian idempotents");
    }
    const Matrix pq = p * q;
    out.lhs = rk(pq - q * p);
    out.rhs = 2 * rk(hstack(p, q)) + 2 * rk(pq) - 2 * rk(p) - 2 * rk(q);
  }

  void adjoint_swap(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B");
    const WeightTriple& w = weights();
    require_order(a, w.m, w.n, "A");
    require_order(b, w.m, w.l, "B");
    const Matrix as = adjoint(a, w.m, w.n);
    out.lhs = rk(hstack(a, b));
    out.rhs = rk(vstack(as, adjoint(b, w.m, w.l)));
    if (auto it = ops_.find("C"); it != ops_.end()) {
      const Matrix& c = it->second;
      require_order(c, w.l, w.n, "C");
      out.extra.push_back({"row_form", rk(vstack(a, c)), rk(hstack(as, adjoint(c, w.l, w.n)))});
    }
  }

  void triple_product(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    const Matrix &p = op("P"), &q = op("Q");
    const WeightTriple& w = weights();
    require_order(p, w.n, w.l, "P");
    require_order(q, w.m, w.n, "Q");
    const Matrix pd = dagger(p, w.n, w.l, "P");
    const Matrix qd = dagger(q, w.m, w.n, "Q");
    const Matrix ps = adjoint(p, w.n, w.l);
    const Matrix qs = adjoint(q, w.m, w.n);

    out.lhs = rk(d - c * pd * a * qd * b);

    const std::size_t l = w.l.order(), n = w.n.order(), m = w.m.order();
    const std::size_t bc = b.cols(), cr = c.rows();
    const Matrix block = block_assemble({
        {ps * a * qs, ps * p * ps, Matrix(l, bc)},
        {qs * q * qs, Matrix(n, n), qs * b},
        {Matrix(cr, m), c * ps, -d},
    });
    out.rhs = rk(block) - rk(p) - rk(q);
  }

  void gap_cor13(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B");
    const WeightTriple& w = weights();
    require_order(a, w.m, w.n, "A");
    require_order(b, w.n, w.l, "B");
    const Matrix ad = dagger(a, w.m, w.n, "A");
    const Matrix bd = dagger(b, w.n, w.l, "B");
    const Matrix as = adjoint(a, w.m, w.n);
    const Matrix bs = adjoint(b, w.n, w.l);
    const Matrix ab = a * b;
    out.lhs = rk(ab - ab * bd * ad * ab);
    out.rhs = rk(block_assemble({{bs * as, bs * b}, {a * as, ab}})) + rk(ab) - rk(a) - rk(b);
  }

  void commutator_thm15(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B");
    const WeightTriple& w = weights();
    require_order(a, w.m, w.n, "A");
    require_order(b, w.n, w.l, "B");
    const Matrix ad = dagger(a, w.m, w.n, "A");
    const Matrix bd = dagger(b, w.n, w.l, "B");
    const Matrix p = b * bd;
    const Matrix q = ad * a;
    out.lhs = rk(p * q - q * p);
    out.rhs = 2 * rk(hstack(adjoint(a, w.m, w.n), b)) + 2 * rk(a * b) - 2 * rk(a) - 2 * rk(b);
  }

  void carlson_block(IdentityInstance& out) const {
    const Matrix &a = op("A"), &b = op("B"), &c = op("C"), &d = op("D");
    const bool rank_equal = rk(block_assemble({{a, b}, {c, d}})) == rk(a);
    const bool schur_zero = (d - c * exact::euclidean_pinv(a) * b).is_zero();
    const bool kernel_in = exact::range_contains(conj_transpose(a), conj_transpose(c));
    const bool cokernel_in = exact::range_contains(a, b);
    out.lhs = rank_equal ? 1 : 0;
    out.rhs = (schur_zero && kernel_in && cokernel_in) ? 1 : 0;
  }

  IdentityId id_;
  const Operands& ops_;
  const std::optional<WeightTriple>& w_;
};

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [i, name] : kNames) {
    if (i == id) return name;
  }
  return "?";
}

IdentityId identity_from_string(std::string_view name) {
  for (const auto& [i, n] : kNames) {
    if (n == name) return i;
  }
  throw ParseError("unknown identity \"" + std::string(name) + "\"");
}

std::vector<std::string> identity_operands(IdentityId id) {
  switch (id) {
    case IdentityId::SchurGeneric:
    case IdentityId::SchurEuclideanMP:
    case IdentityId::SchurWeightedMP:
    case IdentityId::BlockRankabcd:
    case IdentityId::CarlsonBlock:
      return {"A", "B", "C", "D"};
    case IdentityId::IdempotentCommutator:
    case IdentityId::HermitianIdempotentCommutator:
      return {"P", "Q"};
    case IdentityId::TripleProduct:
      return {"A", "B", "C", "D", "P", "Q"};
    case IdentityId::RangeIntersection:
    case IdentityId::AdjointSwap:
    case IdentityId::GapCor13:
    case IdentityId::CommutatorThm15:
      return {"A", "B"};
  }
  return {};
}

std::vector<std::string> identity_optional_operands(IdentityId id) {
  if (id == IdentityId::AdjointSwap) return {"C"};
  return {};
}

bool identity_needs_weights(IdentityId id) {
  switch (id) {
    case IdentityId::SchurWeightedMP:
    case IdentityId::HermitianIdempotentCommutator:
    case IdentityId::AdjointSwap:
    case IdentityId::TripleProduct:
    case IdentityId::GapCor13:
    case IdentityId::CommutatorThm15:
      return true;
    default:
      return false;
  }
}

IdentityInstance evaluate_rank_identity(IdentityId id, const Operands& operands,
                                        const std::optional<WeightTriple>& weights) {
  IdentityInstance out;
  out.id = id;
  out.operands = operands;
  out.weights = weights;
  Evaluator(id, operands, weights).run(out);
  out.holds = out.lhs == out.rhs &&
              std::all_of(out.extra.begin(), out.extra.end(),
                          [](const SideCheck& s) { return s.lhs == s.rhs; });
  return out;
}

}  // namespace iips::rol
