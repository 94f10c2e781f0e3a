#pragma once

#include "iips/core/mp_inverse.hpp"
#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::rol::detail {

using core::Weight;
using core::WeightTriple;
using exact::Matrix;

inline void require_pair_shapes(const Matrix& a, const Matrix& b, const WeightTriple& w) {
  if (a.rows() != w.m.order() || a.cols() != w.n.order() || b.rows() != w.n.order() ||
      b.cols() != w.l.order()) {
    throw DimensionError("A must be m x n and B n x l for weights of orders (m, n, l)");
  }
}

// Adjoints and MP inverses of a pair (A, B) with both inverses existing.
struct PairContext {
  const Matrix& a;
  const Matrix& b;
  const WeightTriple& w;
  Matrix a_star;
  Matrix b_star;
  Matrix a_dag;
  Matrix b_dag;

  PairContext(const Matrix& a_, const Matrix& b_, const WeightTriple& w_, Matrix a_dag_, Matrix b_dag_)
      : a(a_),
        b(b_),
        w(w_),
        a_star(core::adjoint(a_, w_.m, w_.n)),
        b_star(core::adjoint(b_, w_.n, w_.l)),
        a_dag(std::move(a_dag_)),
        b_dag(std::move(b_dag_)) {}

  static PairContext make(const Matrix& a, const Matrix& b, const WeightTriple& w) {
    require_pair_shapes(a, b, w);
    auto ar = core::mp_inverse(a, w.m, w.n);
    if (!ar.exists) throw NotExistsError("A^[+] does not exist");
    auto br = core::mp_inverse(b, w.n, w.l);
    if (!br.exists) throw NotExistsError("B^[+] does not exist");
    return {a, b, w, std::move(*ar.inverse), std::move(*br.inverse)};
  }
};

}  // namespace iips::rol::detail
