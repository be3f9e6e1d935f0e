#ifndef MOSVA_GEOMETRY_EXPR_HPP
#define MOSVA_GEOMETRY_EXPR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mosva {

using Complex = std::complex<double>;

/// Immutable complex-valued expression over chart coordinates, with symbolic differentiation.
/// Sums and products are n-ary and kept in a canonical order, so like terms and equal factors merge.
class Expr {
 public:
  enum class Kind { Const, Var, Add, Mul, Pow, Sin, Cos, Exp, Log };

  Expr() : Expr(Complex(0.0)) {}
  Expr(double v) : Expr(Complex(v)) {}  // NOLINT(google-explicit-constructor)
  Expr(int v) : Expr(Complex(v)) {}     // NOLINT(google-explicit-constructor)
  Expr(Complex v) {                     // NOLINT(google-explicit-constructor)
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = v;
    node_ = finish(std::move(n));
  }

  static Expr variable(int index, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    n->name = std::move(name);
    return Expr(finish(std::move(n)));
  }

  Kind kind() const { return node_->kind; }
  bool is_const() const { return node_->kind == Kind::Const; }
  bool is_const(Complex v) const { return is_const() && node_->value == v; }
  bool is_zero() const { return is_const(Complex(0.0)); }
  Complex value() const { return node_->value; }
  int var() const { return node_->var; }
  const std::string& name() const { return node_->name; }
  const std::vector<Expr>& args() const { return node_->args; }
  std::uint64_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }

  template <class Point>
  Complex eval(const Point& x) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Const:
        return n.value;
      case Kind::Var:
        return Complex(x[n.var]);
      case Kind::Add: {
        Complex s = 0.0;
        for (const auto& a : n.args) s += a.eval(x);
        return s;
      }
      case Kind::Mul: {
        Complex p = 1.0;
        for (const auto& a : n.args) p *= a.eval(x);
        return p;
      }
      case Kind::Pow: {
        const Complex b = n.args[0].eval(x);
        const Expr& e = n.args[1];
        if (long k; integer_exponent(e, k)) return integer_power(b, k);
        return std::pow(b, e.eval(x));
      }
      case Kind::Sin:
        return std::sin(n.args[0].eval(x));
      case Kind::Cos:
        return std::cos(n.args[0].eval(x));
      case Kind::Exp:
        return std::exp(n.args[0].eval(x));
      case Kind::Log:
        return std::log(n.args[0].eval(x));
    }
    return 0.0;
  }

  /// Partial derivative with respect to the coordinate with the given index.
  Expr diff(int index) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Const:
        return Expr();
      case Kind::Var:
        return Expr(n.var == index ? 1.0 : 0.0);
      case Kind::Add: {
        std::vector<Expr> terms;
        for (const auto& a : n.args) terms.push_back(a.diff(index));
        return sum(std::move(terms));
      }
      case Kind::Mul: {
        std::vector<Expr> terms;
        for (std::size_t i = 0; i < n.args.size(); ++i) {
          Expr d = n.args[i].diff(index);
          if (d.is_zero()) continue;
          std::vector<Expr> factors{d};
          for (std::size_t j = 0; j < n.args.size(); ++j)
            if (j != i) factors.push_back(n.args[j]);
          terms.push_back(product(std::move(factors)));
        }
        return sum(std::move(terms));
      }
      case Kind::Pow: {
        const Expr& b = n.args[0];
        const Expr& e = n.args[1];
        if (e.is_const()) return product({e, power(b, Expr(e.value() - 1.0)), b.diff(index)});
        return product({*this, sum({product({e.diff(index), log(b)}), product({e, b.diff(index), power(b, -1)})})});
      }
      case Kind::Sin:
        return product({cos(n.args[0]), n.args[0].diff(index)});
      case Kind::Cos:
        return product({Expr(-1.0), sin(n.args[0]), n.args[0].diff(index)});
      case Kind::Exp:
        return product({*this, n.args[0].diff(index)});
      case Kind::Log:
        return product({n.args[0].diff(index), power(n.args[0], -1)});
    }
    return Expr();
  }

  std::string str() const {
    std::ostringstream os;
    print(os, 0);
    return os.str();
  }

  friend bool operator==(const Expr& a, const Expr& b) { return same(a, b); }
  friend bool operator!=(const Expr& a, const Expr& b) { return !same(a, b); }

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) { return sum({a, product({Expr(-1.0), b})}); }
  friend Expr operator-(const Expr& a) { return product({Expr(-1.0), a}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return product({a, power(b, -1)}); }
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  friend Expr power(const Expr& base, const Expr& exponent);
  friend Expr sin(const Expr& a) { return unary(Kind::Sin, a); }
  friend Expr cos(const Expr& a) { return unary(Kind::Cos, a); }
  friend Expr exp(const Expr& a) { return unary(Kind::Exp, a); }
  friend Expr log(const Expr& a) { return unary(Kind::Log, a); }
  friend Expr sqrt(const Expr& a) { return power(a, Expr(0.5)); }

 private:
  struct Node {
    Kind kind = Kind::Const;
    Complex value = 0.0;
    int var = -1;
    std::string name;
    std::vector<Expr> args;
    std::uint64_t hash = 0;
    std::size_t size = 1;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
  }
  static std::uint64_t bits(double d) {
    if (d == 0.0) d = 0.0;  // +0 and -0 hash alike
    std::uint64_t u;
    static_assert(sizeof u == sizeof d);
    std::memcpy(&u, &d, sizeof u);
    return u;
  }

  static std::shared_ptr<const Node> finish(std::shared_ptr<Node> n) {
    std::uint64_t h = mix(0x1234567ULL, static_cast<std::uint64_t>(n->kind));
    switch (n->kind) {
      case Kind::Const:
        h = mix(mix(h, bits(n->value.real())), bits(n->value.imag()));
        break;
      case Kind::Var:
        h = mix(h, static_cast<std::uint64_t>(n->var));
        break;
      default:
        for (const auto& a : n->args) {
          h = mix(h, a.hash());
          n->size += a.size();
        }
    }
    n->hash = h;
    return n;
  }

  static Expr make(Kind kind, std::vector<Expr> args) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->args = std::move(args);
    return Expr(finish(std::move(n)));
  }

  static bool same(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.args.size() != y.args.size()) return false;
    if (x.kind == Kind::Const) return x.value == y.value;
    if (x.kind == Kind::Var) return x.var == y.var;
    for (std::size_t i = 0; i < x.args.size(); ++i)
      if (!same(x.args[i], y.args[i])) return false;
    return true;
  }

  static bool canonical_less(const Expr& a, const Expr& b) {
    if (a.hash() != b.hash()) return a.hash() < b.hash();
    return a.size() < b.size();
  }

  static bool integer_exponent(const Expr& e, long& k) {
    if (!e.is_const() || e.value().imag() != 0.0) return false;
    const double r = e.value().real();
    if (std::abs(r) > 64.0 || std::floor(r) != r) return false;
    k = static_cast<long>(r);
    return true;
  }

  static Complex integer_power(Complex b, long k) {
    if (k < 0) return 1.0 / integer_power(b, -k);
    Complex r = 1.0;
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  static Expr unary(Kind kind, const Expr& a) {
    if (a.is_const()) {
      const Complex v = a.value();
      switch (kind) {
        case Kind::Sin:
          return Expr(std::sin(v));
        case Kind::Cos:
          return Expr(std::cos(v));
        case Kind::Exp:
          return Expr(std::exp(v));
        case Kind::Log:
          return Expr(std::log(v));
        default:
          break;
      }
    }
    return make(kind, {a});
  }

  void print(std::ostream& os, int parent) const;

  std::shared_ptr<const Node> node_;
};

inline Expr Expr::sum(std::vector<Expr> terms) {
  Complex constant = 0.0;
  std::vector<std::pair<Expr, Complex>> merged;  // (core, coefficient)
  std::vector<Expr> pending = std::move(terms);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Expr t = pending[i];
    if (t.kind() == Kind::Add) {
      for (const auto& a : t.args()) pending.push_back(a);
      continue;
    }
    if (t.is_const()) {
      constant += t.value();
      continue;
    }
    Complex coeff = 1.0;
    Expr core = t;
    if (t.kind() == Kind::Mul && t.args().front().is_const()) {
      coeff = t.args().front().value();
      std::vector<Expr> rest(t.args().begin() + 1, t.args().end());
      core = rest.size() == 1 ? rest.front() : make(Kind::Mul, std::move(rest));
    }
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return same(m.first, core); });
    if (it == merged.end())
      merged.emplace_back(core, coeff);
    else
      it->second += coeff;
  }
  std::vector<Expr> out;
  for (auto& [core, coeff] : merged) {
    if (coeff == Complex(0.0)) continue;
    out.push_back(coeff == Complex(1.0) ? core : product({Expr(coeff), core}));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  if (constant != Complex(0.0)) out.insert(out.begin(), Expr(constant));
  if (out.empty()) return Expr();
  if (out.size() == 1) return out.front();
  return make(Kind::Add, std::move(out));
}

inline Expr Expr::product(std::vector<Expr> factors) {
  Complex constant = 1.0;
  std::vector<std::pair<Expr, Expr>> merged;  // (base, exponent)
  std::vector<Expr> pending = std::move(factors);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Expr f = pending[i];
    if (f.kind() == Kind::Mul) {
      for (const auto& a : f.args()) pending.push_back(a);
      continue;
    }
    if (f.is_const()) {
      constant *= f.value();
      continue;
    }
    Expr base = f;
    Expr exponent(1.0);
    if (f.kind() == Kind::Pow && f.args()[1].is_const()) {
      base = f.args()[0];
      exponent = f.args()[1];
    }
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return same(m.first, base); });
    if (it == merged.end())
      merged.emplace_back(base, exponent);
    else
      it->second = Expr(it->second.value() + exponent.value());
  }
  if (constant == Complex(0.0)) return Expr();
  std::vector<Expr> out;
  for (auto& [base, exponent] : merged) {
    Expr p = power(base, exponent);
    if (p.is_const()) {
      constant *= p.value();
      continue;
    }
    if (p.kind() == Kind::Mul) {
      for (const auto& a : p.args()) {
        if (a.is_const())
          constant *= a.value();
        else
          out.push_back(a);
      }
      continue;
    }
    out.push_back(p);
  }
  if (constant == Complex(0.0)) return Expr();
  std::sort(out.begin(), out.end(), canonical_less);
  if (constant != Complex(1.0)) out.insert(out.begin(), Expr(constant));
  if (out.empty()) return Expr(constant);
  if (out.size() == 1) return out.front();
  return make(Kind::Mul, std::move(out));
}

inline Expr power(const Expr& base, const Expr& exponent) {
  if (exponent.is_zero()) return Expr(1.0);
  if (exponent.is_const(1.0)) return base;
  long k = 0;
  const bool integral = Expr::integer_exponent(exponent, k);
  if (base.is_const()) {
    if (integral) return Expr(Expr::integer_power(base.value(), k));
    return Expr(std::pow(base.value(), exponent.value()));
  }
  // (z^p)^n = z^(pn) for integer n and principal powers.
  if (integral && base.kind() == Expr::Kind::Pow && base.args()[1].is_const())
    return power(base.args()[0], Expr(base.args()[1].value() * static_cast<double>(k)));
  if (integral && base.kind() == Expr::Kind::Mul) {
    std::vector<Expr> factors;
    for (const auto& a : base.args()) factors.push_back(power(a, exponent));
    return Expr::product(std::move(factors));
  }
  return Expr::make(Expr::Kind::Pow, {base, exponent});
}

inline void Expr::print(std::ostream& os, int parent) const {
  // Precedence: 1 sum, 2 product, 3 power, 4 atom.
  const Node& n = *node_;
  auto number = [&](Complex v) {
    std::ostringstream s;
    s.precision(17);
    if (v.imag() == 0.0)
      s << v.real();
    else if (v.real() == 0.0)
      s << v.imag() << "i";
    else
      s << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
    return s.str();
  };
  auto open = [&](int prec) {
    if (prec < parent) os << "(";
  };
  auto close = [&](int prec) {
    if (prec < parent) os << ")";
  };
  switch (n.kind) {
    case Kind::Const: {
      const std::string s = number(n.value);
      const bool wrap = parent >= 2 && (n.value.real() < 0 || (n.value.imag() != 0.0 && n.value.real() == 0.0 && n.value.imag() < 0));
      os << (wrap ? "(" + s + ")" : s);
      return;
    }
    case Kind::Var:
      os << n.name;
      return;
    case Kind::Add:
      open(1);
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) os << " + ";
        n.args[i].print(os, 1);
      }
      close(1);
      return;
    case Kind::Mul:
      open(2);
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) os << "*";
        n.args[i].print(os, 3);
      }
      close(2);
      return;
    case Kind::Pow:
      open(3);
      n.args[0].print(os, 4);
      os << "^";
      n.args[1].print(os, 4);
      close(3);
      return;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Log: {
      static const char* names[] = {"sin", "cos", "exp", "log"};
      os << names[static_cast<int>(n.kind) - static_cast<int>(Kind::Sin)] << "(";
      n.args[0].print(os, 0);
      os << ")";
      return;
    }
  }
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_EXPR_HPP
