#include "iips/hunter/sampling.hpp"

#include <string>

#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::hunter {

using exact::GaussianRational;

namespace {

constexpr long kHermitianBound = 2;

}  // namespace

std::string_view to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Signature: return "signature";
    case WeightKind::RandomHermitian: return "random_hermitian";
    case WeightKind::Identity: return "identity";
  }
  return "?";
}

WeightKind weight_kind_from_string(std::string_view s) {
  if (s == "signature") return WeightKind::Signature;
  if (s == "random_hermitian") return WeightKind::RandomHermitian;
  if (s == "identity") return WeightKind::Identity;
  throw ConfigError("unknown weight kind \"" + std::string(s) + "\"");
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  std::vector<GaussianRational> data;
  data.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    long re = rng.uniform(-bound, bound);
    long im = rng.uniform(-bound, bound);
    data.emplace_back(exact::Rational(re), exact::Rational(im));
  }
  return Matrix(rows, cols, std::move(data));
}

Matrix gen_matrix(std::uint64_t derived_seed, std::size_t rows, std::size_t cols, long bound) {
  Rng rng(derived_seed);
  return random_matrix(rng, rows, cols, bound);
}

Weight signature_weight(std::size_t dim, std::uint64_t pattern) {
  Matrix h(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) h(k, k) = (pattern >> k) & 1U ? -1 : 1;
  return Weight::validate(std::move(h));
}

Weight random_weight(Rng& rng, std::size_t dim, WeightKind kind) {
  switch (kind) {
    case WeightKind::Identity:
      return Weight::identity(dim);
    case WeightKind::Signature: {
      const long patterns = (1L << dim) - 1;
      return signature_weight(dim, static_cast<std::uint64_t>(rng.uniform(1, patterns)));
    }
    case WeightKind::RandomHermitian: {
      const Matrix g = random_matrix(rng, dim, dim, kHermitianBound);
      const Matrix base = g + exact::conj_transpose(g);
      for (long delta = 0;; ++delta) {
        Matrix h = base + GaussianRational(delta) * Matrix::identity(dim);
        if (exact::rank(h) == dim) return Weight::validate(std::move(h));
      }
    }
  }
  throw ConfigError("unknown weight kind");
}

Weight gen_weight(std::uint64_t derived_seed, std::size_t dim, WeightKind kind) {
  Rng rng(derived_seed);
  return random_weight(rng, dim, kind);
}

Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long bound) {
  if (r == 0) return Matrix(rows, cols);
  return random_matrix(rng, rows, r, bound) * random_matrix(rng, r, cols, bound);
}

Matrix random_mixed(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  const std::size_t full = std::min(rows, cols);
  if (rng.coin()) return random_matrix(rng, rows, cols, bound);
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(full) - 1));
  return random_low_rank(rng, rows, cols, r, bound);
}

Matrix random_idempotent(Rng& rng, std::size_t n, std::size_t r, long bound) {
  if (r == 0) return Matrix(n, n);
  for (;;) {
    Matrix f = random_matrix(rng, n, r, bound);
    Matrix g = random_matrix(rng, r, n, bound);
    Matrix gf = g * f;
    if (exact::rank(gf) == r) return f * exact::inverse(gf) * g;
  }
}

}  // namespace iips::hunter
