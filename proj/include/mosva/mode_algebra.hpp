#ifndef MOSVA_MODE_ALGEBRA_HPP
#define MOSVA_MODE_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mosva/linear_combination.hpp"
#include "mosva/scalar.hpp"

namespace mosva {

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

inline ScalarMatrix identity_matrix(std::size_t d) {
  ScalarMatrix m(d, ScalarVector(d, Scalar(0)));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = Scalar(1);
  return m;
}

/// The complexified tangent space at the base point, in frame coordinates, with its bilinear form.
class FrameSpace {
 public:
  explicit FrameSpace(std::size_t dim) : form_(identity_matrix(dim)) {
    if (dim == 0) throw std::invalid_argument("FrameSpace: dimension must be positive");
  }
  explicit FrameSpace(ScalarMatrix form) : form_(std::move(form)) {
    const std::size_t d = form_.size();
    if (d == 0) throw std::invalid_argument("FrameSpace: dimension must be positive");
    for (const auto& row : form_)
      if (row.size() != d) throw std::invalid_argument("FrameSpace: form must be square");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (form_[i][j] != form_[j][i]) throw std::invalid_argument("FrameSpace: form must be symmetric");
  }

  std::size_t dim() const { return form_.size(); }
  const ScalarMatrix& form() const { return form_; }
  const Scalar& pairing(int i, int j) const { return form_[i][j]; }
  bool is_orthonormal() const { return form_ == identity_matrix(dim()); }

  ScalarVector basis_vector(int i) const {
    ScalarVector v(dim(), Scalar(0));
    v.at(static_cast<std::size_t>(i)) = Scalar(1);
    return v;
  }

 private:
  ScalarMatrix form_;
};

/// A mode e_index(level) for a frame basis vector.
struct BasisMode {
  int index = 0;
  int level = 0;

  auto operator<=>(const BasisMode&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const BasisMode& m) {
    return os << "e" << (m.index + 1) << "(" << m.level << ")";
  }
};

/// X(n) for an arbitrary vector X of h, stored in frame coordinates.
struct Mode {
  ScalarVector vec;
  int level = 0;

  static Mode basis(const FrameSpace& space, int index, int level) { return {space.basis_vector(index), level}; }
};

/// An ordered word in modes times a power of the central element k.
struct ModeWord {
  std::vector<Mode> modes;
  int central_power = 0;
};

/// A word in basis modes; as a NormalForm key it is PBW ordered.
struct BasisWord {
  std::vector<BasisMode> modes;
  int central_power = 0;

  auto operator<=>(const BasisWord&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const BasisWord& w) {
    if (w.modes.empty() && w.central_power == 0) return os << "1";
    bool first = true;
    for (const auto& m : w.modes) {
      if (!first) os << "*";
      first = false;
      os << m;
    }
    if (w.central_power > 0) os << (first ? "" : "*") << "k^" << w.central_power;
    return os;
  }
};

using NormalForm = LinearCombination<BasisWord>;

/// PBW class of a mode: creations, then annihilations, then zero modes.
inline int pbw_rank(int level) {
  if (level < 0) return 0;
  if (level > 0) return 1;
  return 2;
}

inline bool is_pbw_ordered(const std::vector<BasisMode>& modes) {
  for (std::size_t i = 1; i < modes.size(); ++i)
    if (pbw_rank(modes[i - 1].level) > pbw_rank(modes[i].level)) return false;
  return true;
}

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Multilinear expansion of a word in vector modes into basis-mode words.
inline LinearCombination<BasisWord> expand_word(const ModeWord& w, const FrameSpace& space) {
  LinearCombination<BasisWord> acc(BasisWord{{}, w.central_power});
  for (const Mode& m : w.modes) {
    if (m.vec.size() != space.dim()) throw std::invalid_argument("expand_word: mode vector has wrong dimension");
    LinearCombination<BasisWord> next;
    for (const auto& [word, c] : acc) {
      for (std::size_t i = 0; i < m.vec.size(); ++i) {
        if (m.vec[i].is_zero()) continue;
        BasisWord extended = word;
        extended.modes.push_back({static_cast<int>(i), m.level});
        next.add(extended, c * m.vec[i]);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

/// Rewrites a basis word into PBW normal form modulo the ideal relations:
///   X(m)Y(n) = Y(n)X(m) + m (X,Y) delta_{m+n,0} k   for m > 0 > n,
///   X(j)Y(0) = Y(0)X(j)                             for j != 0,
/// with k central. Creations, annihilations and zero modes keep their relative order.
inline NormalForm normalize_basis_word(const BasisWord& start, const Scalar& coeff, const FrameSpace& space,
                                       RewriteStrategy strategy = RewriteStrategy::LeftmostFirst) {
  NormalForm result;
  std::vector<std::pair<BasisWord, Scalar>> work{{start, coeff}};
  while (!work.empty()) {
    auto [word, c] = std::move(work.back());
    work.pop_back();
    const std::size_t n = word.modes.size();
    std::size_t pos = n;
    if (strategy == RewriteStrategy::LeftmostFirst) {
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (pbw_rank(word.modes[i].level) > pbw_rank(word.modes[i + 1].level)) {
          pos = i;
          break;
        }
    } else {
      for (std::size_t i = n; i-- > 1;)
        if (pbw_rank(word.modes[i - 1].level) > pbw_rank(word.modes[i].level)) {
          pos = i - 1;
          break;
        }
    }
    if (pos == n) {
      result.add(word, c);
      continue;
    }
    const BasisMode a = word.modes[pos];
    const BasisMode b = word.modes[pos + 1];
    if (a.level > 0 && b.level < 0 && a.level + b.level == 0) {
      Scalar contraction = Scalar(a.level) * space.pairing(a.index, b.index);
      if (!contraction.is_zero()) {
        BasisWord reduced;
        reduced.central_power = word.central_power + 1;
        reduced.modes.reserve(n - 2);
        for (std::size_t i = 0; i < n; ++i)
          if (i != pos && i != pos + 1) reduced.modes.push_back(word.modes[i]);
        work.emplace_back(std::move(reduced), c * contraction);
      }
    }
    std::swap(word.modes[pos], word.modes[pos + 1]);
    work.emplace_back(std::move(word), std::move(c));
  }
  return result;
}

inline NormalForm normalize_word(const ModeWord& w, const FrameSpace& space,
                                 RewriteStrategy strategy = RewriteStrategy::LeftmostFirst) {
  NormalForm result;
  for (const auto& [word, c] : expand_word(w, space)) result.add(normalize_basis_word(word, c, space, strategy));
  return result;
}

}  // namespace mosva

#endif  // MOSVA_MODE_ALGEBRA_HPP
