#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace iips::exact {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0).
/// Returns false on anything else; never throws.
bool parse_rational(std::string_view text, Rational& out);

/// "p" when the denominator is 1, otherwise "p/q"; lowest terms.
std::string format_rational(const Rational& q);

/// Exact complex scalar re + im*i with rational parts, i.e. an element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational fraction(long num, long den);
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Multiplicative inverse; throws SingularError for zero.
  GaussianRational reciprocal() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// this -= a * b, without materialising the product.
  void sub_mul(const GaussianRational& a, const GaussianRational& b);
  /// this += a * b.
  void add_mul(const GaussianRational& a, const GaussianRational& b);

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace iips::exact
