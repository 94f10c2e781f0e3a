#include "iips/exact/linalg.hpp"

#include <string>
#include <utility>

#include "iips/errors.hpp"

namespace iips::exact {

namespace {

using Rows = std::vector<std::vector<GaussianRational>>;

Rows to_rows(const Matrix& a) {
  Rows rows(a.rows(), std::vector<GaussianRational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

// Gauss-Jordan on `rows`. With `reduce` false only the echelon form is built
// (pivot rows are neither normalised nor used to clear entries above).
std::vector<std::size_t> eliminate(Rows& rows, std::size_t cols, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);

    auto& pivot_row = rows[r];
    if (reduce) {
      GaussianRational inv = pivot_row[c].reciprocal();
      for (std::size_t j = c; j < cols; ++j) {
        if (!pivot_row[j].is_zero()) pivot_row[j] *= inv;
      }
    }
    GaussianRational pivot_inv = reduce ? GaussianRational(1) : pivot_row[c].reciprocal();

    for (std::size_t i = reduce ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      GaussianRational factor = rows[i][c] * pivot_inv;
      for (std::size_t j = c; j < cols; ++j) rows[i][j].sub_mul(factor, pivot_row[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix conj_transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  }
  return t;
}

RrefResult rref(const Matrix& a) {
  Rows rows = to_rows(a);
  auto pivots = eliminate(rows, a.cols(), true);
  Matrix reduced(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = std::move(rows[i][j]);
  }
  std::size_t r = pivots.size();
  return {std::move(reduced), std::move(pivots), r};
}

std::size_t rank(const Matrix& a) {
  // Eliminate along the shorter side.
  if (a.rows() > a.cols()) {
    Matrix t = conj_transpose(a);
    Rows rows = to_rows(t);
    return eliminate(rows, t.cols(), false).size();
  }
  Rows rows = to_rows(a);
  return eliminate(rows, a.cols(), false).size();
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Rows rows = to_rows(a);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(2 * n);
    rows[i][n + i] = 1;
  }
  auto pivots = eliminate(rows, 2 * n, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw SingularError("inverse: matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = std::move(rows[i][n + j]);
  }
  return inv;
}

FullRankFactorization full_rank_factorization(const Matrix& a) {
  auto red = rref(a);
  FullRankFactorization out;
  out.rank = red.rank;
  if (red.rank == 0) return out;

  Matrix f(a.rows(), red.rank);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < red.rank; ++k) f(i, k) = a(i, red.pivot_columns[k]);
  }
  Matrix g(red.rank, a.cols());
  for (std::size_t k = 0; k < red.rank; ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j) g(k, j) = red.reduced(k, j);
  }
  out.f = std::move(f);
  out.g = std::move(g);
  return out;
}

Matrix euclidean_pinv(const Matrix& a) {
  auto frf = full_rank_factorization(a);
  if (frf.rank == 0) return Matrix::zero(a.cols(), a.rows());
  const Matrix& f = *frf.f;
  const Matrix& g = *frf.g;
  Matrix fs = conj_transpose(f);
  Matrix gs = conj_transpose(g);
  return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

Matrix block_assemble(const std::vector<std::vector<Matrix>>& layout) {
  if (layout.empty() || layout.front().empty()) throw DimensionError("block_assemble: empty grid");
  const std::size_t grid_cols = layout.front().size();
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (const auto& block : layout.front()) total_cols += block.cols();

  for (std::size_t bi = 0; bi < layout.size(); ++bi) {
    const auto& row = layout[bi];
    if (row.size() != grid_cols) throw DimensionError("block_assemble: ragged grid");
    for (std::size_t bj = 0; bj < grid_cols; ++bj) {
      if (row[bj].rows() != row.front().rows()) {
        throw DimensionError("block_assemble: inconsistent heights in block row " + std::to_string(bi));
      }
      if (row[bj].cols() != layout.front()[bj].cols()) {
        throw DimensionError("block_assemble: inconsistent widths in block column " + std::to_string(bj));
      }
    }
    total_rows += row.front().rows();
  }

  Matrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& row : layout) {
    std::size_t c0 = 0;
    for (const auto& block : row) {
      for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) out(r0 + i, c0 + j) = block(i, j);
      }
      c0 += block.cols();
    }
    r0 += row.front().rows();
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) { return block_assemble({{a, b}}); }
Matrix vstack(const Matrix& a, const Matrix& b) { return block_assemble({{a}, {b}}); }

bool range_contains(const Matrix& y, const Matrix& x) {
  if (y.rows() != x.rows()) throw DimensionError("range_contains: row counts differ");
  return rank(hstack(y, x)) == rank(y);
}

Matrix power(const Matrix& a, std::size_t p) {
  if (!a.is_square()) throw DimensionError("power: matrix is not square");
  Matrix r = Matrix::identity(a.rows());
  for (std::size_t k = 0; k < p; ++k) r = r * a;
  return r;
}

std::size_t index(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("index: matrix is not square");
  Matrix ap = a;
  std::size_t rank_p = rank(ap);
  for (std::size_t p = 1;; ++p) {
    Matrix next = ap * a;
    std::size_t rank_next = rank(next);
    if (rank_next == rank_p) return p;
    ap = std::move(next);
    rank_p = rank_next;
  }
}

}  // namespace iips::exact
