#include "iips/core/mp_inverse.hpp"

#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"

namespace iips::core {

using exact::rank;

const Matrix& MpResult::value() const {
  if (!exists || !inverse) throw NotExistsError("Moore-Penrose inverse does not exist");
  return *inverse;
}

MpResult mp_exists(const Matrix& a, const Weight& m, const Weight& n) {
  Matrix as = adjoint(a, m, n);
  MpResult r;
  r.rank_a = rank(a);
  r.rank_aastar = rank(a * as);
  r.rank_astara = rank(as * a);
  r.exists = r.rank_a == r.rank_aastar && r.rank_a == r.rank_astara;
  return r;
}

MpResult mp_inverse(const Matrix& a, const Weight& m, const Weight& n) {
  MpResult r = mp_exists(a, m, n);
  if (r.rank_a == 0) {
    r.inverse = Matrix::zero(a.cols(), a.rows());
    return r;
  }

  auto frf = exact::full_rank_factorization(a);
  const Weight unit = Weight::identity(frf.rank);
  Matrix fs = adjoint(*frf.f, m, unit);
  Matrix gs = adjoint(*frf.g, unit, n);
  Matrix middle = fs * a * gs;
  const bool invertible = rank(middle) == frf.rank;
  if (invertible != r.exists) {
    throw InternalInconsistency("mp_inverse: middle-factor invertibility disagrees with the rank criterion");
  }
  if (!r.exists) return r;

  Matrix x = gs * exact::inverse(middle) * fs;
  if (!penrose_residuals(a, x, m, n).all()) {
    throw InternalInconsistency("mp_inverse: computed inverse fails the Penrose equations");
  }
  r.inverse = std::move(x);
  return r;
}

Matrix mp_dagger(const Matrix& a, const Weight& m, const Weight& n) {
  return mp_inverse(a, m, n).value();
}

PenroseFlags penrose_residuals(const Matrix& a, const Matrix& x, const Weight& m, const Weight& n) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("penrose_residuals: X must have the transposed shape of A");
  }
  Matrix ax = a * x;
  Matrix xa = x * a;
  PenroseFlags f;
  f.axa_eq_a = ax * a == a;
  f.xax_eq_x = x * ax == x;
  f.ax_w_hermitian = adjoint(ax, m, m) == ax;
  f.xa_w_hermitian = adjoint(xa, n, n) == xa;
  return f;
}

MpPropertyReport mp_property_report(const Matrix& a, const Weight& m, const Weight& n) {
  const Matrix ad = mp_dagger(a, m, n);
  const Matrix as = adjoint(a, m, n);
  const Matrix aas = a * as;
  const Matrix asa = as * a;

  MpPropertyReport rep;
  rep.adjoint_absorbs = as * a * ad == as && ad * a * as == as;

  // A^[*] maps C^m -> C^n, so its codomain weight is N and domain weight M.
  const MpResult as_dag = mp_inverse(as, n, m);
  rep.adjoint_dagger_commute = as_dag.exists && *as_dag.inverse == adjoint(ad, n, m);

  const MpResult aas_dag = mp_inverse(aas, m, m);
  const MpResult asa_dag = mp_inverse(asa, n, n);
  rep.gram_inverses = aas_dag.exists && asa_dag.exists && as_dag.exists &&
                      *aas_dag.inverse == *as_dag.inverse * ad &&
                      *asa_dag.inverse == ad * *as_dag.inverse;

  rep.closed_forms = aas_dag.exists && asa_dag.exists && ad == as * *aas_dag.inverse &&
                     ad == *asa_dag.inverse * as;

  if (aas_dag.exists) {
    const Matrix& g = *aas_dag.inverse;
    rep.gram_projects = g * aas * a == a && aas * g * a == a;
    rep.gram_commutes = g * aas == aas * g;
  }
  return rep;
}

}  // namespace iips::core
