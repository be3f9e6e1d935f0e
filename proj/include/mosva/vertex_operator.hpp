#ifndef MOSVA_VERTEX_OPERATOR_HPP
#define MOSVA_VERTEX_OPERATOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mosva/fock.hpp"
#include "mosva/scalar.hpp"

namespace mosva {

/// Laurent coefficients of a series in x over a declared window of powers.
template <class Element>
struct Laurent {
  int pmin = 0;
  int pmax = 0;
  std::map<int, Element> coeffs;

  const Element& coefficient(int p) const {
    if (p < pmin || p > pmax) throw std::out_of_range("Laurent: power outside the declared range");
    return coeffs.at(p);
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.pmin == b.pmin && a.pmax == b.pmax && a.coeffs == b.coeffs;
  }
};

using FockLaurent = Laurent<FockElement>;

namespace detail {

/// Coefficient of x^{-m-n} in (1/(n-1)!) d^{n-1}/dx^{n-1} X(x), with X(x) = sum_m X(m) x^{-m-1}.
inline const Scalar& derivative_field_coefficient(int m, int n) {
  constexpr int kSpan = 64;  // direct table for |m| < kSpan, n < kSpan
  if (m > -kSpan && m < kSpan && n > 0 && n < kSpan) {
    thread_local std::vector<std::optional<Scalar>> table(static_cast<std::size_t>(2 * kSpan * kSpan));
    auto& slot = table[static_cast<std::size_t>((m + kSpan) * kSpan + n)];
    if (!slot) slot = binomial(-m - 1, n - 1);
    return *slot;
  }
  thread_local std::map<std::pair<int, int>, Scalar> cache;
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, binomial(-m - 1, n - 1)).first;
  return it->second;
}

/// Expansion of one normal-ordered product of fields applied to v, for all totals of mode levels in
/// [lo, hi] at once; the contraction of the annihilating modes is shared between totals.
template <class Module>
struct FieldExpansion {
  using key_type = typename Module::key_type;
  using element_type = typename Module::element_type;

  const CreationList& creations;
  const Module& module;
  int lo;
  int hi;
  std::map<int, element_type>& out;  // keyed by total level
  std::vector<int> levels = std::vector<int>(creations.size());
  std::vector<bool> creating = std::vector<bool>(creations.size());

  // Applies word[0..i) right to left, depth first.
  template <class Sink>
  void apply_word(const std::vector<BasisMode>& word, std::size_t i, const key_type& v, const Scalar& coeff,
                  Sink& sink) const {
    if (i == 0) {
      sink(v, coeff);
      return;
    }
    module.act_each(word[i - 1], v, coeff,
                    [&](const key_type& next, const Scalar& c) { apply_word(word, i - 1, next, c, sink); });
  }

  // Picks, for each mode, either a nonnegative level or "creation" (level fixed later). Positive
  // levels must match the depth of a creation still present in v, otherwise the contraction
  // vanishes; `depths` holds those, sorted. Levels -n+1..-1 have zero field coefficient.
  void choose(std::size_t j, int annihilated, std::vector<int>& depths, const Scalar& coeff, const key_type& v) {
    if (j == creations.size()) {
      finish(annihilated, coeff, v);
      return;
    }
    const int n = creations[j].depth;
    creating[j] = true;
    choose(j + 1, annihilated, depths, coeff, v);
    creating[j] = false;
    for (std::size_t i = 0; i < depths.size(); ++i) {
      if (i > 0 && depths[i] == depths[i - 1]) continue;
      const int m = depths[i];
      levels[j] = m;
      depths.erase(depths.begin() + static_cast<std::ptrdiff_t>(i));
      choose(j + 1, annihilated + m, depths, coeff * derivative_field_coefficient(m, n), v);
      depths.insert(depths.begin() + static_cast<std::ptrdiff_t>(i), m);
    }
    if (!Module::zero_modes_vanish) {
      levels[j] = 0;
      choose(j + 1, annihilated, depths, coeff * derivative_field_coefficient(0, n), v);
    }
  }

  void finish(int annihilated, const Scalar& coeff, const key_type& v) {
    // Creation modes need levels m_j <= -n_j; their sum is total - annihilated.
    int needed = 0;
    bool any_free = false;
    for (std::size_t j = 0; j < creations.size(); ++j)
      if (creating[j]) {
        any_free = true;
        needed += creations[j].depth;
      }
    const int top = any_free ? std::min(hi, annihilated - needed) : annihilated;
    const int bottom = any_free ? lo : annihilated;
    if (top < lo || bottom > hi || bottom > top) return;

    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < creations.size(); ++j)
      if (creating[j]) free.push_back(j);
    std::vector<BasisMode> annihilating;
    for (std::size_t j = 0; j < creations.size(); ++j)
      if (!creating[j]) annihilating.push_back({creations[j].index, levels[j]});
    element_type contracted;
    auto collect = [&](const key_type& k, const Scalar& c) { contracted.add(k, c); };
    apply_word(annihilating, annihilating.size(), v, coeff, collect);
    if (contracted.is_zero()) return;
    if (free.empty()) {
      out[annihilated].add(contracted);
      return;
    }
    std::vector<BasisMode> prefix(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) prefix[i].index = creations[free[i]].index;
    for (int total = bottom; total <= top; ++total) {
      element_type& target = out[total];
      auto emit = [&](const key_type& k, const Scalar& c) { target.add(k, c); };
      compose(free, prefix, 0, total - annihilated, needed, Scalar(1), contracted, emit);
    }
  }

  // Enumerates levels of the creation modes summing to `remaining`; they are normal ordered to the
  // left in their original order.
  template <class Sink>
  void compose(const std::vector<std::size_t>& free, std::vector<BasisMode>& prefix, std::size_t i, int remaining,
               int needed, const Scalar& coeff, const element_type& contracted, Sink& emit) const {
    const int n = creations[free[i]].depth;
    const int rest = needed - n;
    auto place = [&](int m) {
      prefix[i].level = m;
      const Scalar c = coeff * derivative_field_coefficient(m, n);
      if (i + 1 == free.size()) {
        for (const auto& [k, kc] : contracted) apply_word(prefix, prefix.size(), k, c * kc, emit);
      } else {
        compose(free, prefix, i + 1, remaining - m, rest, c, contracted, emit);
      }
    };
    if (i + 1 == free.size()) {
      place(remaining);
      return;
    }
    for (int m = -n; m >= remaining + rest; --m) place(m);
  }
};

}  // namespace detail

/// Coefficients of x^p, pmin <= p <= pmax, in Y(u, x)v for a vertex module: Y(u, x) for
/// u = X_1(-n_1)...X_k(-n_k)1 is the normal-ordered product of the fields
/// (1/(n_j-1)!) d^{n_j-1}/dx^{n_j-1} X_j(x).
template <class Module>
Laurent<typename Module::element_type> vertex_operator(const FockElement& u, const typename Module::element_type& v,
                                                       int pmin, int pmax, const Module& module) {
  if (pmin > pmax) throw std::invalid_argument("vertex_operator: pmin > pmax");
  using element_type = typename Module::element_type;
  Laurent<element_type> series{pmin, pmax, {}};
  for (int p = pmin; p <= pmax; ++p) series.coeffs.emplace(p, element_type{});
  for (const auto& [umon, uc] : u) {
    if (umon.is_vacuum()) {
      if (pmin <= 0 && 0 <= pmax) series.coeffs[0].add(v, uc);
      continue;
    }
    // The mode levels of a term contributing to x^p sum to -p - wt u.
    const int w = umon.weight();
    std::map<int, element_type> by_total;
    detail::FieldExpansion<Module> expansion{umon.creations, module, -pmax - w, -pmin - w, by_total};
    for (const auto& [vkey, vc] : v) {
      std::vector<int> depths;
      for (const auto& cr : module.fock_creations(vkey)) depths.push_back(cr.depth);
      std::sort(depths.begin(), depths.end());
      expansion.choose(0, 0, depths, uc * vc, vkey);
    }
    for (auto& [total, part] : by_total) series.coeffs[-total - w].add(part);
  }
  return series;
}

/// Coefficient of x^p in Y(u, x)v for a vertex module.
template <class Module>
typename Module::element_type mode_coefficient(const FockElement& u, const typename Module::element_type& v, int p,
                                               const Module& module) {
  return std::move(vertex_operator(u, v, p, p, module).coeffs[p]);
}

inline FockElement mode_coefficient(const FockElement& u, const FockElement& v, int p, const FrameSpace& space) {
  return mode_coefficient(u, v, p, FockModule(space));
}

inline FockLaurent vertex_operator(const FockElement& u, const FockElement& v, int pmin, int pmax,
                                   const FrameSpace& space) {
  return vertex_operator(u, v, pmin, pmax, FockModule(space));
}

/// D(X_1(-n_1)...X_k(-n_k)1) = sum_j n_j X_1(-n_1)...X_j(-n_j-1)...X_k(-n_k)1.
inline FockElement translate_D(const FockElement& u) {
  FockElement out;
  for (const auto& [m, c] : u) {
    for (std::size_t j = 0; j < m.creations.size(); ++j) {
      FockMonomial shifted = m;
      shifted.creations[j].depth += 1;
      out.add(shifted, c * Scalar(m.creations[j].depth));
    }
  }
  return out;
}

}  // namespace mosva

#endif  // MOSVA_VERTEX_OPERATOR_HPP
