#ifndef MOSVA_GEOMETRY_TENSOR_HPP
#define MOSVA_GEOMETRY_TENSOR_HPP

#include <Eigen/Dense>

#include <compare>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "mosva/geometry/expr.hpp"
#include "mosva/linear_combination.hpp"

namespace mosva {

/// Ordered word e_{i_1} (x) ... (x) e_{i_m} over frame indices; empty is the unit.
struct TensorWord {
  std::vector<int> indices;

  TensorWord() = default;
  TensorWord(std::initializer_list<int> i) : indices(i) {}
  explicit TensorWord(std::vector<int> i) : indices(std::move(i)) {}

  int order() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }

  auto operator<=>(const TensorWord&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const TensorWord& w) {
    if (w.indices.empty()) return os << "1";
    for (std::size_t k = 0; k < w.indices.size(); ++k) os << (k ? "(x)" : "") << "e" << (w.indices[k] + 1);
    return os;
  }
};

using TensorElement = LinearCombination<TensorWord>;

inline TensorElement tensor_word(std::initializer_list<int> indices) { return TensorElement(TensorWord(indices)); }

inline TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      TensorWord w = wa;
      w.indices.insert(w.indices.end(), wb.indices.begin(), wb.indices.end());
      out.add(w, ca * cb);
    }
  return out;
}

/// sum_i e_i (x) e_i, the frame expression of the (inverse) metric.
inline TensorElement metric_tensor_element(std::size_t d) {
  TensorElement out;
  for (std::size_t i = 0; i < d; ++i) out.add(TensorWord{static_cast<int>(i), static_cast<int>(i)}, Scalar(1));
  return out;
}

/// All words of a given order over d indices, in lexicographic order.
inline std::vector<TensorWord> tensor_words(std::size_t d, int order) {
  std::vector<TensorWord> out{TensorWord{}};
  for (int k = 0; k < order; ++k) {
    std::vector<TensorWord> next;
    for (const auto& w : out)
      for (std::size_t i = 0; i < d; ++i) {
        TensorWord e = w;
        e.indices.push_back(static_cast<int>(i));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Dense order-m tensor over C^d, flattened with the first index most significant.
struct Tensor {
  int order = 0;
  std::size_t dim = 0;
  Eigen::VectorXcd components;

  static Tensor zero(int order, std::size_t dim) {
    std::size_t n = 1;
    for (int k = 0; k < order; ++k) n *= dim;
    return {order, dim, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n))};
  }

  std::size_t flat_index(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * dim + static_cast<std::size_t>(i);
    return f;
  }

  Complex& operator[](const std::vector<int>& idx) { return components[static_cast<Eigen::Index>(flat_index(idx))]; }
  Complex operator[](const std::vector<int>& idx) const {
    return components[static_cast<Eigen::Index>(flat_index(idx))];
  }

  double max_abs() const { return components.size() ? components.cwiseAbs().maxCoeff() : 0.0; }
};

/// Dense components of the order-m part of a tensor element.
inline Tensor to_tensor(const TensorElement& t, int order, std::size_t dim) {
  Tensor out = Tensor::zero(order, dim);
  for (const auto& [w, c] : t) {
    if (w.order() != order) continue;
    for (int i : w.indices)
      if (i < 0 || static_cast<std::size_t>(i) >= dim) throw std::invalid_argument("to_tensor: index out of range");
    out[w.indices] += c.to_complex();
  }
  return out;
}

/// Orders present in a tensor element, ascending.
inline std::vector<int> orders_of(const TensorElement& t) {
  std::vector<int> out;
  for (const auto& [w, c] : t)
    if (out.empty() || out.back() != w.order()) out.push_back(w.order());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Applies one d x d matrix to every index: (A^{(x)m} t).
inline Tensor apply_to_each_index(const Eigen::MatrixXcd& a, const Tensor& t) {
  Tensor cur = t;
  const auto d = static_cast<Eigen::Index>(t.dim);
  for (int slot = 0; slot < t.order; ++slot) {
    // View components as (outer, d, inner) with the current slot in the middle.
    Eigen::Index inner = 1;
    for (int k = slot + 1; k < t.order; ++k) inner *= d;
    const Eigen::Index outer = cur.components.size() / (d * inner);
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(cur.components.size());
    for (Eigen::Index o = 0; o < outer; ++o)
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index s = 0; s < d; ++s) {
          const Complex ars = a(r, s);
          if (ars == Complex(0.0)) continue;
          for (Eigen::Index in = 0; in < inner; ++in)
            next[(o * d + r) * inner + in] += ars * cur.components[(o * d + s) * inner + in];
        }
    cur.components = std::move(next);
  }
  return cur;
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_TENSOR_HPP
