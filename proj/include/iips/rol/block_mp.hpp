#pragma once

#include "iips/core/weight.hpp"

namespace iips::rol {

using core::Weight;
using exact::Matrix;

/// Weights of the two blocks: A is m x n under (m_a, n_a), B is g x h under
/// (m_b, n_b).
struct BlockWeights {
  Weight m_a;
  Weight n_a;
  Weight m_b;
  Weight n_b;
};

enum class BlockLayout {
  Diagonal,      // T = [[A, 0], [0, B]], T^[+] = [[A^[+], 0], [0, B^[+]]]
  AntiDiagonal,  // T = [[0, A], [B, 0]], T^[+] = [[0, B^[+]], [A^[+], 0]]
};

/// Block matrix T for the layout, weighted by diag(m_a, m_b) on the codomain
/// and diag(n_a, n_b) (diagonal) or diag(n_b, n_a) (anti-diagonal) on the
/// domain.
Matrix block_matrix(const Matrix& a, const Matrix& b, BlockLayout layout);
Weight block_codomain_weight(const BlockWeights& w, BlockLayout layout);
Weight block_domain_weight(const BlockWeights& w, BlockLayout layout);

/// MP inverse of the block matrix, computed directly on T with block weights.
/// Throws NotExistsError when A^[+] or B^[+] is missing, and
/// InternalInconsistency if T^[+] differs from the blockwise formula.
Matrix block_mp(const Matrix& a, const Matrix& b, const BlockWeights& w, BlockLayout layout);

}  // namespace iips::rol
