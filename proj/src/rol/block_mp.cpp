#include "iips/rol/block_mp.hpp"

#include "iips/core/mp_inverse.hpp"
#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::rol {

using exact::block_assemble;

Matrix block_matrix(const Matrix& a, const Matrix& b, BlockLayout layout) {
  if (layout == BlockLayout::Diagonal) {
    return block_assemble({{a, Matrix(a.rows(), b.cols())}, {Matrix(b.rows(), a.cols()), b}});
  }
  return block_assemble({{Matrix(a.rows(), b.cols()), a}, {b, Matrix(b.rows(), a.cols())}});
}

Weight block_codomain_weight(const BlockWeights& w, BlockLayout) {
  return core::direct_sum(w.m_a, w.m_b);
}

Weight block_domain_weight(const BlockWeights& w, BlockLayout layout) {
  return layout == BlockLayout::Diagonal ? core::direct_sum(w.n_a, w.n_b)
                                         : core::direct_sum(w.n_b, w.n_a);
}

Matrix block_mp(const Matrix& a, const Matrix& b, const BlockWeights& w, BlockLayout layout) {
  const Matrix a_dag = core::mp_dagger(a, w.m_a, w.n_a);
  const Matrix b_dag = core::mp_dagger(b, w.m_b, w.n_b);

  const Matrix t = block_matrix(a, b, layout);
  const auto t_res = core::mp_inverse(t, block_codomain_weight(w, layout), block_domain_weight(w, layout));
  if (!t_res.exists) {
    throw InternalInconsistency("block_mp: block matrix has no MP inverse although both blocks do");
  }

  // diag(A,B)^+ = diag(A^+, B^+); [[0,A],[B,0]]^+ = [[0,B^+],[A^+,0]].
  const Matrix expected = layout == BlockLayout::Diagonal
                              ? block_matrix(a_dag, b_dag, BlockLayout::Diagonal)
                              : block_matrix(b_dag, a_dag, BlockLayout::AntiDiagonal);
  if (*t_res.inverse != expected) {
    throw InternalInconsistency("block_mp: block inverse differs from the blockwise formula");
  }
  return *t_res.inverse;
}

}  // namespace iips::rol
