#pragma once

#include <cstddef>
#include <optional>

#include "iips/core/weight.hpp"

namespace iips::core {

/// Existence data and, when it exists, the MN-Moore-Penrose inverse of A.
struct MpResult {
  bool exists = false;
  std::optional<Matrix> inverse;
  std::size_t rank_a = 0;
  std::size_t rank_aastar = 0;
  std::size_t rank_astara = 0;

  /// The inverse; throws NotExistsError when it does not exist.
  const Matrix& value() const;
};

/// rank(A), rank(A A^[*]), rank(A^[*] A) and the existence verdict; no inverse.
MpResult mp_exists(const Matrix& a, const Weight& m, const Weight& n);

/// Computes X = G^[*] (F^[*] A G^[*])^-1 F^[*] from the full-rank factorisation
/// A = F G, where F^[*] = F^* M and G^[*] = N^-1 G^*. The middle factor is
/// (F^* M F)(G N^-1 G^*), invertible exactly when rank(A) = rank(AA^[*]) =
/// rank(A^[*]A). Every returned inverse has passed all four Penrose equations;
/// a failure there throws InternalInconsistency.
MpResult mp_inverse(const Matrix& a, const Weight& m, const Weight& n);

/// Convenience: mp_inverse(a, m, n).value().
Matrix mp_dagger(const Matrix& a, const Weight& m, const Weight& n);

struct PenroseFlags {
  bool axa_eq_a = false;         // A X A = A
  bool xax_eq_x = false;         // X A X = X
  bool ax_w_hermitian = false;   // (A X)^[*] = A X
  bool xa_w_hermitian = false;   // (X A)^[*] = X A

  bool all() const { return axa_eq_a && xax_eq_x && ax_w_hermitian && xa_w_hermitian; }
};

PenroseFlags penrose_residuals(const Matrix& a, const Matrix& x, const Weight& m, const Weight& n);

/// Properties (i)-(vi) of the MN-Moore-Penrose inverse, each evaluated by
/// independent computation:
///   (i)   A^[*] = A^[*] A A^[+] = A^[+] A A^[*]
///   (ii)  (A^[*])^[+] = (A^[+])^[*]
///   (iii) (AA^[*])^[+], (A^[*]A)^[+] exist and equal (A^[*])^[+]A^[+], A^[+](A^[*])^[+]
///   (iv)  A^[+] = A^[*](AA^[*])^[+] = (A^[*]A)^[+]A^[*]
///   (v)   (AA^[*])^[+](AA^[*])A = A = (AA^[*])(AA^[*])^[+]A
///   (vi)  (AA^[*])^[+](AA^[*]) = (AA^[*])(AA^[*])^[+]
struct MpPropertyReport {
  bool adjoint_absorbs = false;        // (i)
  bool adjoint_dagger_commute = false; // (ii)
  bool gram_inverses = false;          // (iii)
  bool closed_forms = false;           // (iv)
  bool gram_projects = false;          // (v)
  bool gram_commutes = false;          // (vi)

  bool all() const {
    return adjoint_absorbs && adjoint_dagger_commute && gram_inverses && closed_forms &&
           gram_projects && gram_commutes;
  }
};

/// Throws NotExistsError when A^[+] does not exist.
MpPropertyReport mp_property_report(const Matrix& a, const Weight& m, const Weight& n);

}  // namespace iips::core
