#include "iips/core/weight.hpp"

#include <string>

#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::core {

using exact::conj_transpose;

Weight Weight::validate(Matrix h) {
  if (!h.is_square()) throw WeightError(WeightError::Kind::NotSquare, "weight is not square");
  if (conj_transpose(h) != h) throw WeightError(WeightError::Kind::NotHermitian, "weight is NotHermitian");
  try {
    Matrix inv = exact::inverse(h);
    return Weight(std::move(h), std::move(inv));
  } catch (const SingularError&) {
    throw WeightError(WeightError::Kind::Singular, "weight is Singular");
  }
}

Weight Weight::identity(std::size_t d) { return Weight(Matrix::identity(d), Matrix::identity(d)); }

Weight direct_sum(const Weight& a, const Weight& b) {
  const Matrix za(a.order(), b.order());
  const Matrix zb(b.order(), a.order());
  return Weight(exact::block_assemble({{a.h(), za}, {zb, b.h()}}),
                exact::block_assemble({{a.h_inverse(), za}, {zb, b.h_inverse()}}));
}

Matrix adjoint(const Matrix& a, const Weight& m, const Weight& n) {
  if (a.rows() != m.order() || a.cols() != n.order()) {
    throw DimensionError("adjoint: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " matrix with weights of order " + std::to_string(m.order()) + ", " +
                         std::to_string(n.order()));
  }
  return n.h_inverse() * conj_transpose(a) * m.h();
}

bool is_w_hermitian(const Matrix& a, const Weight& n) { return adjoint(a, n, n) == a; }

bool is_range_hermitian(const Matrix& a, const Weight& n) {
  Matrix as = adjoint(a, n, n);
  return exact::range_contains(a, as) && exact::range_contains(as, a);
}

}  // namespace iips::core
