#ifndef MOSVA_SCALAR_HPP
#define MOSVA_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mosva/rational.hpp"

namespace mosva {

/// Exact Gaussian rational re + im*sqrt(-1) with arbitrary-precision parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(const mpq_class& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

  static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }
  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_.is_one(); }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a) {
    a.re_ = -a.re_;
    if (!a.im_.is_zero()) a.im_ = -a.im_;
    return a;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Conversion to IEEE complex.
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (s.is_real()) return os << s.re_;
    if (s.re_.is_zero()) return os << s.im_ << "i";
    os << "(" << s.re_ << (s.im_.sign() > 0 ? "+" : "") << s.im_ << "i)";
    return os;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  Scalar num = *this * o.conj();
  re_ = num.re_ / n;
  im_ = num.im_ / n;
  return *this;
}

/// Generalized binomial coefficient C(top, k) for integer top and k >= 0.
inline Scalar binomial(long top, long k) {
  if (k < 0) return Scalar(0);
  mpz_class num = 1;
  mpz_class den = 1;
  for (long j = 0; j < k; ++j) {
    num *= (top - j);
    den *= (j + 1);
  }
  return Scalar(mpq_class(num, den));
}

}  // namespace mosva

#endif  // MOSVA_SCALAR_HPP
