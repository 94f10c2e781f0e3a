#pragma once

#include <cstddef>
#include <optional>

#include "iips/hunter/sampling.hpp"
#include "iips/rol/identities.hpp"

namespace iips::testing {

using core::Weight;
using core::WeightTriple;
using exact::Matrix;
using hunter::Rng;

// Random inputs that reach the rank-deficient, indefinite part of the space,
// shared by the property tests and the acceptance suite.

hunter::WeightKind alternate_kind(std::size_t k);
std::size_t random_dim(Rng& rng, std::size_t max_dim);

struct WeightedMatrix {
  Matrix a;
  Weight m;
  Weight n;
};

/// Draws (A, M, N) until A^[+] exists.
WeightedMatrix random_invertible_mp(Rng& rng, std::size_t max_dim, long bound, hunter::WeightKind kind);

struct Pair {
  Matrix a;
  Matrix b;
  WeightTriple w;
};

/// Draws (A, B, M, N, L) until both A^[+] and B^[+] exist.
Pair random_mp_pair(Rng& rng, std::size_t max_dim, long bound, hunter::WeightKind kind);

struct IdentityCase {
  rol::Operands operands;
  std::optional<WeightTriple> weights;
};

/// One candidate instance of `id`, built so that its hypotheses usually hold.
/// Callers retry on PreconditionError (e.g. BlockRankabcd's rank premise).
IdentityCase draw_identity_case(Rng& rng, rol::IdentityId id, hunter::WeightKind kind);

}  // namespace iips::testing
