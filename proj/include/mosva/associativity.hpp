#ifndef MOSVA_ASSOCIATIVITY_HPP
#define MOSVA_ASSOCIATIVITY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "mosva/fock.hpp"
#include "mosva/vertex_operator.hpp"

namespace mosva {

/// Result of a weak associativity comparison. On failure `powers` holds the exponents (of x1, x2)
/// of the first differing coefficient in the pole-cleared product, `output_weight` its grade.
template <class Element>
struct AssociativityReport {
  bool pass = true;
  std::size_t compared = 0;
  struct Mismatch {
    int output_weight = 0;
    std::pair<int, int> powers{0, 0};
    Element lhs;
    Element rhs;
  };
  std::optional<Mismatch> first_mismatch;
};

namespace detail {

/// Coefficient cache for the iterated and product expansions of one homogeneous triple.
template <class Module>
class AssociativityProbe {
 public:
  using element_type = typename Module::element_type;

  /// Serves coefficients whose two powers sum to a value in [smin, smax].
  AssociativityProbe(const FockElement& u, const FockElement& v, const element_type& w, const Module& module, int smin,
                     int smax)
      : u_(u), v_(v), w_(w), module_(module), smin_(smin), smax_(smax) {}

  // [x1^a x2^b] Y(u,x1)Y(v,x2)w
  const element_type& product(int a, int b) {
    auto it = product_.find(b);
    if (it == product_.end())
      it = product_.emplace(b, vertex_operator(u_, mode_coefficient(v_, w_, b, module_), smin_ - b, smax_ - b, module_)).first;
    return it->second.coefficient(a);
  }

  // [x0^c x2^e] Y(Y(u,x0)v,x2)w
  const element_type& iterate(int c, int e) {
    auto it = iterate_.find(c);
    if (it == iterate_.end()) {
      const FockElement inner = mode_coefficient(u_, v_, c, FockModule(*fock_space(module_)));
      it = iterate_.emplace(c, vertex_operator(inner, w_, smin_ - c, smax_ - c, module_)).first;
    }
    return it->second.coefficient(e);
  }

 private:
  template <class M>
  static const FrameSpace* fock_space(const M& m) {
    return m.space;
  }

  const FockElement& u_;
  const FockElement& v_;
  const element_type& w_;
  const Module& module_;
  int smin_, smax_;
  std::map<int, Laurent<element_type>> product_;
  std::map<int, Laurent<element_type>> iterate_;
};

}  // namespace detail

/// Exact comparison of Y(u,x1)Y(v,x2)w (expanded in |x1|>|x2|) with Y(Y(u,x1-x2)v,x2)w (expanded
/// in |x2|>|x1-x2|) for homogeneous u, v, w.
///
/// Both are expansions of one rational function with poles of order at most wt u + wt w at x1 = 0,
/// wt v + wt w at x2 = 0 and wt u + wt v at x1 = x2. Multiplying the product expansion by
/// x1^a x2^b (x1-x2)^g and the iterate expansion by x0^g x2^b (x0+x2)^a (binomials exact, finite
/// sums) must give the same polynomial P(x1, x2) = P(x0+x2, x2). For every output weight N in
/// [0, K] the homogeneous component of degree wt u + wt v + wt w + N is compared, together with
/// the vanishing of all coefficients in a margin of width K outside the polynomial support.
template <class Module>
AssociativityReport<typename Module::element_type> check_weak_associativity_homogeneous(
    const FockElement& u, const FockElement& v, const typename Module::element_type& w, int K,
    const Module& module) {
  using element_type = typename Module::element_type;
  AssociativityReport<element_type> report;
  if (u.is_zero() || v.is_zero() || w.is_zero()) return report;
  const int wu = u.begin()->first.weight();
  const int wv = v.begin()->first.weight();
  const int ww = module.fock_weight(w.begin()->first);
  const int alpha = wu + ww;
  const int beta = wv + ww;
  const int gamma = wu + wv;
  const int total = wu + wv + ww;
  const int margin = K;

  detail::AssociativityProbe<Module> probe(u, v, w, module, total - alpha - beta - gamma,
                                           total + K - alpha - beta - gamma);

  for (int n = 0; n <= K; ++n) {
    const int degree = total + n;
    // Pole-cleared product side, indexed by the power of x1 (power of x2 is degree - A).
    std::map<int, element_type> from_product;
    for (int A = -margin; A <= degree + margin; ++A) {
      const int B = degree - A;
      element_type acc;
      for (int j = 0; j <= gamma; ++j) {
        const int b = B - beta - j;
        if (b < -beta) continue;  // lower truncation of Y(v, x2)w
        Scalar c = binomial(gamma, j);
        if (j % 2 == 1) c = -c;
        acc.add(probe.product(A - alpha - gamma + j, b), c);
      }
      from_product.emplace(A, std::move(acc));
    }
    // Pole-cleared iterate side in (x0, x2), then x0 = x1 - x2.
    std::map<int, element_type> from_iterate;
    for (int A = -margin; A <= degree + margin; ++A) from_iterate.emplace(A, element_type{});
    for (int C = -margin; C <= degree + margin; ++C) {
      const int E = degree - C;
      element_type acc;
      for (int i = 0; i <= alpha; ++i) {
        const int c = C - gamma - i;
        if (c < -gamma) continue;  // lower truncation of Y(u, x0)v
        acc.add(probe.iterate(c, E - beta - alpha + i), binomial(alpha, i));
      }
      if (acc.is_zero()) continue;
      if (C < 0 || E < 0) {
        // Not a polynomial: record against an impossible slot so the comparison below fails.
        report.pass = false;
        report.first_mismatch = {n, {C, E}, element_type{}, acc};
        return report;
      }
      for (int t = 0; t <= C; ++t) {
        Scalar c = binomial(C, t);
        if (t % 2 == 1) c = -c;
        from_iterate[C - t].add(acc, c);
      }
    }
    for (int A = -margin; A <= degree + margin; ++A) {
      ++report.compared;
      const auto& lhs = from_product[A];
      const auto& rhs = from_iterate[A];
      if (lhs != rhs) {
        report.pass = false;
        report.first_mismatch = {n, {A, degree - A}, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

/// Weak associativity for arbitrary inputs, by linearity over graded components.
template <class Module>
AssociativityReport<typename Module::element_type> check_weak_associativity(
    const FockElement& u, const FockElement& v, const typename Module::element_type& w, int K,
    const Module& module) {
  if (K < 1) throw std::invalid_argument("check_weak_associativity: K must be positive");
  AssociativityReport<typename Module::element_type> combined;
  for (const auto& [wu, uu] : graded_components(u))
    for (const auto& [wv, vv] : graded_components(v))
      for (const auto& [ww, wcomp] : graded_components(w)) {
        auto r = check_weak_associativity_homogeneous(uu, vv, wcomp, K, module);
        combined.compared += r.compared;
        if (!r.pass) {
          combined.pass = false;
          combined.first_mismatch = std::move(r.first_mismatch);
          return combined;
        }
      }
  return combined;
}

inline AssociativityReport<FockElement> check_weak_associativity(const FockElement& u, const FockElement& v,
                                                                 const FockElement& w, int K,
                                                                 const FrameSpace& space) {
  return check_weak_associativity(u, v, w, K, FockModule(space));
}

}  // namespace mosva

#endif  // MOSVA_ASSOCIATIVITY_HPP
