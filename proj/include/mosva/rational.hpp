#ifndef MOSVA_RATIONAL_HPP
#define MOSVA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace mosva {

/// Arbitrary-precision rational. Values whose reduced numerator and denominator fit in int64 are
/// stored inline; anything larger is promoted to GMP and demoted again once it fits.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) { assign(static_cast<i128>(num), static_cast<i128>(den)); }
  explicit Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    set_mpz(q.get_num(), num_);
    set_mpz(q.get_den(), den_);
    return q;
  }

  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const {
    Rational r(*this);
    if (r.big_)
      *r.big_ = -*r.big_;
    else if (r.num_ == INT64_MIN)
      r.assign_big(-r.to_mpq());
    else
      r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
      if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(num_, o.num_, &s)) {
          num_ = s;
          return *this;
        }
      }
      assign(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
      return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }

  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      if (den_ == 1 && o.den_ == 1) {
        std::int64_t p;
        if (!__builtin_mul_overflow(num_, o.num_, &p)) {
          num_ = p;
          return *this;
        }
      }
      assign(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
      return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
      assign(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
      return *this;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // representations are canonical
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    if (r.big_) return os << *r.big_;
    os << r.num_;
    if (r.den_ != 1) os << "/" << r.den_;
    return os;
  }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 gcd(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool fits(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

  static void set_mpz(mpz_class& z, i128 v) {
    const bool neg = v < 0;
    u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    const auto hi = static_cast<std::uint64_t>(mag >> 64);
    const auto lo = static_cast<std::uint64_t>(mag);
    z = static_cast<unsigned long>(hi);
    z <<= 64;
    z += static_cast<unsigned long>(lo);
    if (neg) z = -z;
  }

  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      big_.reset();
      num_ = 0;
      den_ = 1;
      return;
    }
    const u128 g = gcd(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits(n) && fits(d)) {
      big_.reset();
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return;
    }
    mpq_class q;
    set_mpz(q.get_num(), n);
    set_mpz(q.get_den(), d);
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  void assign_big(mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      big_.reset();
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      return;
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace mosva

#endif  // MOSVA_RATIONAL_HPP
