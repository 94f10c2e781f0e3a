#include "iips/exact/gaussian_rational.hpp"

#include <ostream>

#include "iips/errors.hpp"

namespace iips::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) return false;
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) return false;

  mpz_class p(std::string(num), 10);
  mpz_class q(1);
  if (!den.empty()) {
    q = mpz_class(std::string(den), 10);
    if (sgn(q) == 0) return false;
  }
  out = Rational(p, q);
  out.canonicalize();
  return true;
}

std::string format_rational(const Rational& q) {
  // mpq_class::get_str already omits a unit denominator.
  return q.get_str(10);
}

GaussianRational GaussianRational::fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw SingularError("reciprocal of zero");
  if (is_real()) return GaussianRational(Rational(1 / re_));
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    re_ = 0;
    im_ = 0;
    return *this;
  }
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.reciprocal();
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this -= a * b;
}

void GaussianRational::add_mul(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return format_rational(re_);
  std::string s;
  if (sgn(re_) != 0) s = format_rational(re_) + (sgn(im_) > 0 ? "+" : "");
  return s + format_rational(im_) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace iips::exact
