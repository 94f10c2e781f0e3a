#pragma once

#include "iips/core/weight.hpp"
#include "iips/exact/gaussian_rational.hpp"

namespace iips::testing {

using core::Weight;
using core::WeightTriple;
using exact::GaussianRational;
using exact::Matrix;

inline GaussianRational frac(long p, long q) { return GaussianRational::fraction(p, q); }
inline GaussianRational cplx(long re, long im) { return {exact::Rational(re), exact::Rational(im)}; }

inline Weight sig2() { return Weight::validate(Matrix::diagonal({1, -1})); }
inline WeightTriple sig2_triple() { return {sig2(), sig2(), sig2()}; }
inline WeightTriple identity_triple(std::size_t m, std::size_t n, std::size_t l) {
  return {Weight::identity(m), Weight::identity(n), Weight::identity(l)};
}

// First worked example: A^[+], B^[+] exist, (AB)^[+] does not (M = N = L = diag(1, -1)).
inline Matrix ex1_a() { return {{1, 1}, {1, 0}}; }
inline Matrix ex1_b() { return {{0, 1}, {0, 0}}; }

// Second worked example: all three inverses exist but the reverse order law fails.
inline Matrix ex2_a() { return {{1, 2}, {0, 0}}; }
inline Matrix ex2_b() { return {{2, 1}, {0, 0}}; }

}  // namespace iips::testing
