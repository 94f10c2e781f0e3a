#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iips/core/weight.hpp"

namespace iips::rol {

using core::WeightTriple;
using exact::Matrix;

/// The rank identities of the catalog. Operands are named; ^[*] and ^[+] are
/// weighted, ^* and ^+ Euclidean.
enum class IdentityId {
  // rank[[A, AB], [CA, D]] = rank A + rank(D - CAB).              A, B, C, D
  SchurGeneric,
  // rank[[A^*AA^*, A^*B], [CA^*, D]] = rank A + rank(D - CA^+B).   A, B, C, D
  SchurEuclideanMP,
  // Both block orientations of
  // rank[[A^[*]AA^[*], A^[*]B], [CA^[*], D]] = rank A + rank(D - CA^[+]B).
  // A is m x n under (M, N).                                      A, B, C, D
  SchurWeightedMP,
  // rank[[A, B], [C, D]] = rank A = rank B = rank C  =>  rank A = rank D.
  BlockRankabcd,
  // ind A = 1 and R(AB) in R(B)  =>  rank AB = rank A + rank B - rank[A B].
  RangeIntersection,
  // P, Q idempotent: rank(PQ - QP) = rank[P; Q] + rank[P Q] + rank PQ
  //                                  + rank QP - 2 rank P - 2 rank Q.
  IdempotentCommutator,
  // P, Q N-Hermitian idempotent:
  // rank(PQ - QP) = 2 rank[P Q] + 2 rank PQ - 2 rank P - 2 rank Q.
  HermitianIdempotentCommutator,
  // rank[A B] = rank[A^[*]; B^[*]] for A m x n, B m x l; with optional C
  // (l x n) also rank[A; C] = rank[A^[*] C^[*]].
  AdjointSwap,
  // rank(D - CP^[+]AQ^[+]B) = rank[[P^[*]AQ^[*], P^[*]PP^[*], 0],
  //                                [Q^[*]QQ^[*], 0, Q^[*]B], [0, CP^[*], -D]]
  //                           - rank P - rank Q,
  // with P n x l under (N, L) and Q m x n under (M, N).
  TripleProduct,
  // rank(AB - ABB^[+]A^[+]AB) = rank[[B^[*]A^[*], B^[*]B], [AA^[*], AB]]
  //                             + rank AB - rank A - rank B.
  GapCor13,
  // rank(BB^[+]A^[+]A - A^[+]ABB^[+]) = 2 rank[A^[*] B] + 2 rank AB
  //                                     - 2 rank A - 2 rank B.
  CommutatorThm15,
  // rank[[A, B], [C, D]] = rank A  <=>  D = CA^+B, N(A) in N(C), N(A^*) in N(B^*).
  // lhs / rhs are the truth values (0 or 1) of the two sides.
  CarlsonBlock,
};

inline constexpr std::array<IdentityId, 12> kAllIdentities{
    IdentityId::SchurGeneric,         IdentityId::SchurEuclideanMP,
    IdentityId::SchurWeightedMP,      IdentityId::BlockRankabcd,
    IdentityId::RangeIntersection,    IdentityId::IdempotentCommutator,
    IdentityId::HermitianIdempotentCommutator, IdentityId::AdjointSwap,
    IdentityId::TripleProduct,        IdentityId::GapCor13,
    IdentityId::CommutatorThm15,      IdentityId::CarlsonBlock,
};

std::string_view to_string(IdentityId id);
/// Throws ParseError for an unknown name.
IdentityId identity_from_string(std::string_view name);

/// Required operand names, e.g. {"A", "B", "C", "D"}.
std::vector<std::string> identity_operands(IdentityId id);
/// Operand names accepted but not required (AdjointSwap's "C").
std::vector<std::string> identity_optional_operands(IdentityId id);
bool identity_needs_weights(IdentityId id);

/// A second equality evaluated alongside the main one.
struct SideCheck {
  std::string label;
  long lhs = 0;
  long rhs = 0;
};

struct IdentityInstance {
  IdentityId id{};
  std::map<std::string, Matrix> operands;
  std::optional<WeightTriple> weights;
  long lhs = 0;
  long rhs = 0;
  std::vector<SideCheck> extra;
  bool holds = false;  // lhs == rhs and every extra check balances
};

using Operands = std::map<std::string, Matrix>;

/// Evaluates both sides through independent code paths (block assembly and
/// rank on one side, formula arithmetic on the other).
/// Throws DimensionError for missing operands / weights or incompatible
/// shapes, NotExistsError for a missing MP inverse, and PreconditionError for
/// any other unmet hypothesis.
IdentityInstance evaluate_rank_identity(IdentityId id, const Operands& operands,
                                        const std::optional<WeightTriple>& weights);

}  // namespace iips::rol
