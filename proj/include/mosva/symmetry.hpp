#ifndef MOSVA_SYMMETRY_HPP
#define MOSVA_SYMMETRY_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "mosva/fock.hpp"
#include "mosva/mode_algebra.hpp"
#include "mosva/vertex_operator.hpp"

namespace mosva {

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<ScalarMatrix> exact_inverse(const ScalarMatrix& a) {
  const std::size_t n = a.size();
  ScalarMatrix m = a;
  ScalarMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar scale = Scalar(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline ScalarMatrix transpose(const ScalarMatrix& a) {
  ScalarMatrix t(a.empty() ? 0 : a[0].size(), ScalarVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix c(a.size(), ScalarVector(b.empty() ? 0 : b[0].size(), Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// True when A^T G A = G for the bilinear form G of the space.
inline bool preserves_form(const ScalarMatrix& a, const FrameSpace& space) {
  return multiply(multiply(transpose(a), space.form()), a) == space.form();
}

/// The functorial action X_1(-n_1)...X_k(-n_k)1 -> (AX_1)(-n_1)...(AX_k)(-n_k)1.
inline FockElement apply_linear_map(const ScalarMatrix& a, const FockElement& u) {
  const std::size_t d = a.size();
  for (const auto& row : a)
    if (row.size() != d) throw std::invalid_argument("apply_linear_map: matrix must be square");
  if (!exact_inverse(a)) throw std::invalid_argument("apply_linear_map: singular matrix");
  FockElement out;
  for (const auto& [m, c] : u) {
    FockElement acc(FockMonomial{}, c);
    for (const auto& cr : m.creations) {
      if (static_cast<std::size_t>(cr.index) >= d) throw std::invalid_argument("apply_linear_map: index out of range");
      FockElement next;
      for (const auto& [partial, pc] : acc)
        for (std::size_t r = 0; r < d; ++r) {
          const Scalar& entry = a[r][cr.index];
          if (entry.is_zero()) continue;
          FockMonomial extended = partial;
          extended.creations.push_back({static_cast<int>(r), cr.depth});
          next.add(extended, pc * entry);
        }
      acc = std::move(next);
    }
    out.add(acc);
  }
  return out;
}

/// sum_{ij} (G^{-1})^{ij} e_i(-k) e_j(-l) 1.
inline FockElement metric_inverse_element(int k, int l, const FrameSpace& space) {
  if (k < 1 || l < 1) throw std::invalid_argument("metric_inverse_element: levels must be positive");
  auto inv = exact_inverse(space.form());
  if (!inv) throw std::invalid_argument("metric_inverse_element: singular form");
  FockElement out;
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j)
      out.add(FockMonomial{{static_cast<int>(i), k}, {static_cast<int>(j), l}}, (*inv)[i][j]);
  return out;
}

/// Commutative monomial of creation modes; creations are kept sorted.
struct SymMonomial {
  CreationList creations;

  SymMonomial() = default;
  explicit SymMonomial(CreationList c) : creations(std::move(c)) {
    std::sort(creations.begin(), creations.end());
  }

  int weight() const {
    int w = 0;
    for (const auto& c : creations) w += c.depth;
    return w;
  }

  friend std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b) {
    return compare_creations(a.creations, b.creations);
  }
  friend bool operator==(const SymMonomial& a, const SymMonomial& b) { return a.creations == b.creations; }

  friend std::ostream& operator<<(std::ostream& os, const SymMonomial& m) {
    os << "[";
    for (const auto& c : m.creations) os << "e" << (c.index + 1) << "(" << -c.depth << ")";
    return os << "]";
  }
};

inline int fock_weight_of(const SymMonomial& m) { return m.weight(); }

using SymElement = LinearCombination<SymMonomial>;

/// The Heisenberg vertex algebra on S(h_-): same mode action as the Fock module with commuting creations.
struct SymModule {
  using key_type = SymMonomial;
  using element_type = SymElement;
  static constexpr bool zero_modes_vanish = true;

  const FrameSpace* space;

  explicit SymModule(const FrameSpace& s) : space(&s) {}

  int fock_weight(const SymMonomial& m) const { return m.weight(); }
  const CreationList& fock_creations(const SymMonomial& m) const { return m.creations; }

  template <class Emit>
  void act_each(const BasisMode& mode, const SymMonomial& m, const Scalar& c, Emit&& emit) const {
    if (mode.level < 0) {
      CreationList next = m.creations;
      next.push_back({mode.index, -mode.level});
      emit(SymMonomial(std::move(next)), c);
    } else if (mode.level > 0) {
      contract_positive_mode(mode, m.creations, *space,
                             [&](CreationList rest, const Scalar& f) { emit(SymMonomial(std::move(rest)), c * f); });
    }
  }

};

/// The quotient map T(h_-) -> S(h_-).
inline SymElement symmetrize(const FockElement& u) {
  SymElement out;
  for (const auto& [m, c] : u) out.add(SymMonomial(m.creations), c);
  return out;
}

/// Coefficient of x^p of the Heisenberg vertex operator Y(u, x)v on S(h_-).
inline SymElement sym_mode_coefficient(const SymElement& u, const SymElement& v, int p, const FrameSpace& space) {
  FockElement representative;
  for (const auto& [m, c] : u) representative.add(FockMonomial(m.creations), c);
  return mode_coefficient(representative, v, p, SymModule(space));
}

}  // namespace mosva

#endif  // MOSVA_SYMMETRY_HPP
