#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "iips/core/weight.hpp"
#include "iips/hunter/random.hpp"

namespace iips::hunter {

using core::Weight;
using exact::Matrix;

enum class WeightKind {
  Signature,        // diag(+-1) with at least one -1
  RandomHermitian,  // G + G^* + delta I, smallest delta >= 0 that is invertible
  Identity,
};

std::string_view to_string(WeightKind k);
/// Accepts "signature", "random_hermitian", "identity"; ConfigError otherwise.
WeightKind weight_kind_from_string(std::string_view s);

/// Gaussian-integer matrix, re and im parts uniform in [-bound, bound].
Matrix gen_matrix(std::uint64_t derived_seed, std::size_t rows, std::size_t cols, long bound);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

Weight gen_weight(std::uint64_t derived_seed, std::size_t dim, WeightKind kind);
Weight random_weight(Rng& rng, std::size_t dim, WeightKind kind);

/// Signature weight for a sign pattern: bit k of `pattern` set means entry k
/// is -1. `pattern` must be in [1, 2^dim).
Weight signature_weight(std::size_t dim, std::uint64_t pattern);

// Structured samplers used to reach the interesting (rank-deficient) part of
// the input space.

/// F * G with F rows x r and G r x cols; the product's rank is at most r.
Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long bound);

/// Full random with probability 1/2, otherwise random_low_rank with a rank
/// drawn uniformly from [0, min(rows, cols)).
Matrix random_mixed(Rng& rng, std::size_t rows, std::size_t cols, long bound);

/// Idempotent F (G F)^-1 G of rank r (0 gives the zero matrix).
Matrix random_idempotent(Rng& rng, std::size_t n, std::size_t r, long bound);

}  // namespace iips::hunter
