#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iips/exact/matrix.hpp"

namespace iips::exact {

Matrix conj_transpose(const Matrix& a);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank;
};

/// Reduced row echelon form. The pivot is always the top-most nonzero entry of
/// the left-most remaining column, so the output is deterministic.
RrefResult rref(const Matrix& a);

/// Exact rank (forward elimination only).
std::size_t rank(const Matrix& a);

/// Exact inverse. Throws DimensionError if not square, SingularError if rank < n.
Matrix inverse(const Matrix& a);

/// a = f * g with f of full column rank and g of full row rank. f holds the
/// pivot columns of a, g the nonzero rows of rref(a). Both are empty when a is
/// the zero matrix (rank 0 has no 0-width matrices to hold them).
struct FullRankFactorization {
  std::size_t rank = 0;
  std::optional<Matrix> f;
  std::optional<Matrix> g;
};

FullRankFactorization full_rank_factorization(const Matrix& a);

/// Ordinary (Euclidean) Moore-Penrose inverse, g*(gg*)^-1 (f*f)^-1 f*.
/// The zero matrix maps to the transpose-shaped zero matrix.
Matrix euclidean_pinv(const Matrix& a);

/// Concatenates a rectangular grid of blocks. Every block in a grid row must
/// share its height and every block in a grid column its width.
Matrix block_assemble(const std::vector<std::vector<Matrix>>& layout);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// True iff R(x) is a subspace of R(y).
bool range_contains(const Matrix& y, const Matrix& x);

/// Smallest p >= 1 with rank(a^p) == rank(a^(p+1)).
std::size_t index(const Matrix& a);

Matrix power(const Matrix& a, std::size_t p);

}  // namespace iips::exact
