#ifndef MOSVA_FOCK_HPP
#define MOSVA_FOCK_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "mosva/linear_combination.hpp"
#include "mosva/mode_algebra.hpp"

namespace mosva {

/// A creation mode e_index(-depth), depth >= 1.
struct Creation {
  int index = 0;
  int depth = 1;

  auto operator<=>(const Creation&) const = default;
};

using CreationList = std::vector<Creation>;

inline std::strong_ordering compare_creations(const CreationList& a, const CreationList& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// X_1(-n_1)...X_k(-n_k)1 over frame basis vectors; empty is the vacuum.
struct FockMonomial {
  CreationList creations;

  FockMonomial() = default;
  FockMonomial(std::initializer_list<Creation> c) : creations(c) {}
  explicit FockMonomial(CreationList c) : creations(std::move(c)) {}

  int weight() const {
    int w = 0;
    for (const auto& c : creations) w += c.depth;
    return w;
  }
  bool is_vacuum() const { return creations.empty(); }

  friend std::strong_ordering operator<=>(const FockMonomial& a, const FockMonomial& b) {
    return compare_creations(a.creations, b.creations);
  }
  friend bool operator==(const FockMonomial& a, const FockMonomial& b) { return a.creations == b.creations; }

  friend std::ostream& operator<<(std::ostream& os, const FockMonomial& m) {
    for (const auto& c : m.creations) os << "e" << (c.index + 1) << "(" << -c.depth << ")";
    return os << "1";
  }
};

using FockElement = LinearCombination<FockMonomial>;

inline FockElement vacuum() { return FockElement(FockMonomial{}); }

/// Basis monomial e_{i1}(-n1)...e_{ik}(-nk)1 from (index, depth) pairs.
inline FockElement fock_monomial(std::initializer_list<Creation> c) { return FockElement(FockMonomial(c)); }

inline bool is_homogeneous(const FockElement& v) {
  if (v.is_zero()) return true;
  const int w = v.begin()->first.weight();
  for (const auto& [m, c] : v)
    if (m.weight() != w) return false;
  return true;
}

inline int fock_weight_of(const FockMonomial& m) { return m.weight(); }

/// Splits an element into its graded components, keyed by weight.
template <class Key>
std::map<int, LinearCombination<Key>> graded_components(const LinearCombination<Key>& v) {
  std::map<int, LinearCombination<Key>> out;
  for (const auto& [k, c] : v) out[fock_weight_of(k)].add(k, c);
  return out;
}

/// Contraction of a positive basis mode through a list of creations: sum over matching positions of
/// level * (e_index, e_j), with that creation removed.
template <class Emit>
void contract_positive_mode(const BasisMode& mode, const CreationList& creations, const FrameSpace& space,
                            Emit&& emit) {
  for (std::size_t j = 0; j < creations.size(); ++j) {
    if (creations[j].depth != mode.level) continue;
    const Scalar& pairing = space.pairing(mode.index, creations[j].index);
    if (pairing.is_zero()) continue;
    CreationList rest;
    rest.reserve(creations.size() - 1);
    for (std::size_t i = 0; i < creations.size(); ++i)
      if (i != j) rest.push_back(creations[i]);
    emit(std::move(rest), Scalar(mode.level) * pairing);
  }
}

/// T(h_-) as the vacuum module: creations prepend, positive modes contract, zero modes and the
/// vacuum-annihilating part act as 0, k acts as 1.
struct FockModule {
  using key_type = FockMonomial;
  using element_type = FockElement;
  static constexpr bool zero_modes_vanish = true;

  const FrameSpace* space;

  explicit FockModule(const FrameSpace& s) : space(&s) {}

  int fock_weight(const FockMonomial& m) const { return m.weight(); }
  const CreationList& fock_creations(const FockMonomial& m) const { return m.creations; }

  /// Calls emit(key, coefficient) for every term of mode . (c m).
  template <class Emit>
  void act_each(const BasisMode& mode, const FockMonomial& m, const Scalar& c, Emit&& emit) const {
    if (mode.level < 0) {
      FockMonomial next;
      next.creations.reserve(m.creations.size() + 1);
      next.creations.push_back({mode.index, -mode.level});
      next.creations.insert(next.creations.end(), m.creations.begin(), m.creations.end());
      emit(std::move(next), c);
    } else if (mode.level > 0) {
      contract_positive_mode(mode, m.creations, *space,
                             [&](CreationList rest, const Scalar& f) { emit(FockMonomial(std::move(rest)), c * f); });
    }
  }

};

/// Applies a single basis mode to every term of an element of a vertex module.
template <class Module>
typename Module::element_type act_basis_mode(const BasisMode& mode, const typename Module::element_type& v,
                                             const Module& module) {
  typename Module::element_type out;
  for (const auto& [k, c] : v) module.act_each(mode, k, c, [&](const auto& key, const Scalar& f) { out.add(key, f); });
  return out;
}

/// Action of an arbitrary mode X(n) on the Fock space, by linearity in X.
inline FockElement act_on_fock(const Mode& m, const FockElement& v, const FrameSpace& space) {
  if (m.vec.size() != space.dim()) throw std::invalid_argument("act_on_fock: mode vector has wrong dimension");
  FockModule module(space);
  FockElement out;
  for (std::size_t i = 0; i < m.vec.size(); ++i) {
    if (m.vec[i].is_zero()) continue;
    out.add(act_basis_mode(BasisMode{static_cast<int>(i), m.level}, v, module), m.vec[i]);
  }
  return out;
}

/// All basis monomials of the given weight in dimension d, in lexicographic order.
inline std::vector<FockMonomial> fock_basis(std::size_t d, int weight) {
  std::vector<FockMonomial> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = 1; first <= weight; ++first)
    for (const auto& tail : fock_basis(d, weight - first))
      for (std::size_t i = 0; i < d; ++i) {
        FockMonomial m;
        m.creations.push_back({static_cast<int>(i), first});
        m.creations.insert(m.creations.end(), tail.creations.begin(), tail.creations.end());
        out.push_back(std::move(m));
      }
  return out;
}

inline std::vector<FockMonomial> fock_basis_up_to(std::size_t d, int max_weight) {
  std::vector<FockMonomial> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto part = fock_basis(d, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace mosva

#endif  // MOSVA_FOCK_HPP
