#pragma once

#include <optional>
#include <string_view>

#include "iips/core/mp_inverse.hpp"

namespace iips::rol {

using core::Weight;
using core::WeightTriple;
using exact::Matrix;

/// The four Greville-type conditions for A (m x n, weights M, N) and
/// B (n x l, weights N, L), with ^[*] the weighted adjoint:
///   (i)   A^[*]ABB^[*] is N-range Hermitian
///   (ii)  R(A^[*]AB) in R(B) and R(BB^[*]A^[*]) in R(A^[*])
///   (iii) BB^[+]A^[*]A and A^[+]ABB^[*] are N-range Hermitian
///   (iv)  BB^[+]A^[*]AB = A^[*]AB and A^[+]ABB^[*]A^[*] = BB^[*]A^[*]
/// Whenever A^[+] and B^[+] exist these are equivalent, so a report where
/// they disagree indicates a bug.
struct GrevilleFlags {
  bool range_hermitian = false;
  bool range_inclusions = false;
  bool projectors_range_hermitian = false;
  bool absorption = false;

  bool all() const { return range_hermitian && range_inclusions && projectors_range_hermitian && absorption; }
  bool any() const { return range_hermitian || range_inclusions || projectors_range_hermitian || absorption; }
  bool agree() const { return all() || !any(); }
};

enum class RolStatus {
  FactorDagMissing,  // A^[+] or B^[+] does not exist; the law is not posed
  AbDagMissing,      // both factors invertible in the MP sense, (AB)^[+] is not
  HoldsEqual,        // (AB)^[+] = B^[+] A^[+]
  ExistsButUnequal,  // (AB)^[+] exists and differs from B^[+] A^[+]
};

std::string_view to_string(RolStatus s);
RolStatus rol_status_from_string(std::string_view s);

struct RolReport {
  bool a_exists = false;
  bool b_exists = false;
  bool ab_exists = false;
  // Evaluated only when both A^[+] and B^[+] exist.
  std::optional<GrevilleFlags> greville;
  std::optional<bool> rank_criterion;
  std::optional<bool> rank_hypothesis;
  RolStatus status = RolStatus::FactorDagMissing;
  std::optional<Matrix> a_dag;
  std::optional<Matrix> b_dag;
  std::optional<Matrix> ab_dag;
  std::optional<Matrix> bdag_adag;
};

/// Throws NotExistsError if A^[+] or B^[+] is missing, DimensionError on
/// incompatible shapes.
GrevilleFlags greville_conditions(const Matrix& a, const Matrix& b, const WeightTriple& w);

/// With D = AB: rank [[D, AA^[*]D], [DB^[*]B, DD^[*]D]] == rank(D).
bool rol_rank_criterion(const Matrix& a, const Matrix& b, const WeightTriple& w);

/// rank [[B^[*]A^[*], B^[*]B], [AA^[*], AB]] == rank [A^[*], B].
bool rol_rank_hypothesis(const Matrix& a, const Matrix& b, const WeightTriple& w);

/// Full classification. Never throws for compatible shapes: missing
/// inverses are recorded in the flags and status.
RolReport rol_classify(const Matrix& a, const Matrix& b, const WeightTriple& w);

}  // namespace iips::rol
