#pragma once

#include <cstddef>

#include "iips/exact/matrix.hpp"

namespace iips::core {

using exact::GaussianRational;
using exact::Matrix;

/// An invertible Hermitian matrix defining the indefinite inner product
/// [x, y] = <x, H y> on C^d. Immutable; the exact inverse is computed once.
class Weight {
 public:
  /// Throws WeightError(NotSquare | NotHermitian | Singular).
  static Weight validate(Matrix h);
  static Weight identity(std::size_t d);

  const Matrix& h() const noexcept { return h_; }
  const Matrix& h_inverse() const noexcept { return h_inverse_; }
  std::size_t order() const noexcept { return h_.rows(); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.h_ == b.h_; }
  friend Weight direct_sum(const Weight& a, const Weight& b);

 private:
  Weight(Matrix h, Matrix h_inverse) : h_(std::move(h)), h_inverse_(std::move(h_inverse)) {}

  Matrix h_;
  Matrix h_inverse_;
};

/// Weights for A: C^n -> C^m (codomain m, domain n) and B: C^l -> C^n.
struct WeightTriple {
  Weight m;
  Weight n;
  Weight l;
};

/// Block-diagonal weight diag(a.h, b.h).
Weight direct_sum(const Weight& a, const Weight& b);

/// The MN-adjoint N^-1 A^* M of an m x n matrix, with `m` the codomain weight
/// and `n` the domain weight.
Matrix adjoint(const Matrix& a, const Weight& m, const Weight& n);

/// A^[*] == A with M = N = n.
bool is_w_hermitian(const Matrix& a, const Weight& n);

/// R(A) == R(A^[*]) with M = N = n.
bool is_range_hermitian(const Matrix& a, const Weight& n);

}  // namespace iips::core
