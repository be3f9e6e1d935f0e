#ifndef MOSVA_MODULE_W_HPP
#define MOSVA_MODULE_W_HPP

#include <Eigen/Dense>

#include <cmath>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mosva/fock.hpp"
#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/covariant.hpp"
#include "mosva/geometry/invariants.hpp"
#include "mosva/geometry/tensor.hpp"
#include "mosva/symmetry.hpp"
#include "mosva/vertex_operator.hpp"

namespace mosva {

/// The constant function 1, shared so that embedded Fock vectors compare equal.
inline const SmoothFunction& unit_function() {
  static const SmoothFunction one(Expr(1.0), "1");
  return one;
}

/// Basis vector (Fock monomial) (x) (tensor word) (x) f of the induced module.
struct WBasis {
  FockMonomial fock;
  TensorWord word;
  SmoothFunction fn = unit_function();

  int weight() const { return fock.weight(); }

  friend std::strong_ordering operator<=>(const WBasis& a, const WBasis& b) {
    if (auto c = a.fock <=> b.fock; c != 0) return c;
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.fn <=> b.fn;
  }
  friend bool operator==(const WBasis& a, const WBasis& b) {
    return a.fock == b.fock && a.word == b.word && a.fn == b.fn;
  }

  friend std::ostream& operator<<(std::ostream& os, const WBasis& b) {
    return os << "(" << b.fock << ", " << b.word << ", " << b.fn.label() << ")";
  }
};

using WElement = LinearCombination<WBasis>;
using WLaurent = Laurent<WElement>;

inline int fock_weight_of(const WBasis& b) { return b.weight(); }

/// The generator 1 (x) (1 (x) f).
inline WElement w_generator(const SmoothFunction& f) { return WElement(WBasis{FockMonomial{}, TensorWord{}, f}); }

inline WElement w_basis(FockMonomial fock, TensorWord word, const SmoothFunction& f) {
  return WElement(WBasis{std::move(fock), std::move(word), f});
}

/// v (x) (1 (x) 1) for a Fock vector v.
inline WElement embed(const FockElement& v) {
  WElement out;
  for (const auto& [m, c] : v) out.add(WBasis{m, TensorWord{}, unit_function()}, c);
  return out;
}

/// Terms with an empty bottom word and unit function, as a Fock vector.
inline FockElement fock_part(const WElement& w) {
  FockElement out;
  for (const auto& [b, c] : w)
    if (b.word.empty() && b.fn == unit_function()) out.add(b.fock, c);
  return out;
}

/// Mode action on the induced module: creations prepend to the Fock part, positive modes contract
/// through it and annihilate the bottom, zero modes pass the Fock part and prepend to the word.
struct WModule {
  using key_type = WBasis;
  using element_type = WElement;
  static constexpr bool zero_modes_vanish = false;

  const FrameSpace* space;

  explicit WModule(const FrameSpace& s) : space(&s) {}

  int fock_weight(const WBasis& b) const { return b.weight(); }
  const CreationList& fock_creations(const WBasis& b) const { return b.fock.creations; }

  template <class Emit>
  void act_each(const BasisMode& mode, const WBasis& b, const Scalar& c, Emit&& emit) const {
    if (mode.level < 0) {
      WBasis next{FockMonomial{}, b.word, b.fn};
      next.fock.creations.reserve(b.fock.creations.size() + 1);
      next.fock.creations.push_back({mode.index, -mode.level});
      next.fock.creations.insert(next.fock.creations.end(), b.fock.creations.begin(), b.fock.creations.end());
      emit(std::move(next), c);
    } else if (mode.level > 0) {
      contract_positive_mode(mode, b.fock.creations, *space, [&](CreationList rest, const Scalar& f) {
        emit(WBasis{FockMonomial(std::move(rest)), b.word, b.fn}, c * f);
      });
    } else {
      WBasis next{b.fock, TensorWord{}, b.fn};
      next.word.indices.reserve(b.word.indices.size() + 1);
      next.word.indices.push_back(mode.index);
      next.word.indices.insert(next.word.indices.end(), b.word.indices.begin(), b.word.indices.end());
      emit(std::move(next), c);
    }
  }
};

/// X(n) on a WElement, by linearity in X.
inline WElement w_act_mode(const Mode& m, const WElement& w, const FrameSpace& space) {
  if (m.vec.size() != space.dim()) throw std::invalid_argument("w_act_mode: mode vector has wrong dimension");
  WModule module(space);
  WElement out;
  for (std::size_t i = 0; i < m.vec.size(); ++i) {
    if (m.vec[i].is_zero()) continue;
    out.add(act_basis_mode(BasisMode{static_cast<int>(i), m.level}, w, module), m.vec[i]);
  }
  return out;
}

/// Raised when a vertex operator is requested for a vector that is not holonomy invariant.
class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest coefficient change of a Fock vector under the sampled holonomy, acting on every
/// creation index.
inline double fock_holonomy_defect(const FockElement& u, const HolonomySample& sample) {
  double worst = 0;
  for (const auto& a : sample.matrices) {
    std::map<FockMonomial, Complex> moved;
    for (const auto& [m, c] : u) {
      std::map<FockMonomial, Complex> acc{{FockMonomial{}, c.to_complex()}};
      for (const auto& cr : m.creations) {
        std::map<FockMonomial, Complex> next;
        for (const auto& [partial, pc] : acc)
          for (Eigen::Index r = 0; r < a.rows(); ++r) {
            const double entry = a(r, cr.index);
            if (entry == 0.0) continue;
            FockMonomial extended = partial;
            extended.creations.push_back({static_cast<int>(r), cr.depth});
            next[extended] += pc * entry;
          }
        acc = std::move(next);
      }
      for (const auto& [k, v] : acc) moved[k] += v;
    }
    for (const auto& [m, c] : u) moved[m] -= c.to_complex();
    for (const auto& [m, v] : moved) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

/// Y_W(u, x)w over the powers [pmin, pmax]. In strict mode u must be fixed by the sampled holonomy
/// to 1e-6, so that it lies in the invariant subalgebra.
inline WLaurent vertex_operator_W(const FockElement& u, const WElement& w, int pmin, int pmax, const FrameSpace& space,
                                  const HolonomySample& sample, bool strict = true) {
  if (strict) {
    const double defect = fock_holonomy_defect(u, sample);
    if (defect >= kFixedTolerance) {
      std::ostringstream os;
      os << "vertex_operator_W: " << u << " is not holonomy invariant (defect " << defect << ")";
      throw NotInvariant(os.str());
    }
  }
  return vertex_operator(u, w, pmin, pmax, WModule(space));
}

/// Outcome of reduce_bottom: the reduced element and the terms that could not be reduced.
struct Reduction {
  WElement element;
  std::vector<WBasis> irreducible;

  bool complete() const { return irreducible.empty(); }
};

/// Applies (word) (x) f = 1 (x) psi(word) f. Terms sharing a Fock part and function are reduced
/// together when their combined word is certified parallel; otherwise each parallel word is
/// reduced alone and the rest are kept and flagged irreducible. Only whole words are moved.
inline Reduction reduce_bottom(const WElement& w, const HolonomySample& sample, const Chart& chart,
                               const DerivativeOptions& opts = {}) {
  Reduction out;
  std::map<std::pair<FockMonomial, SmoothFunction>, TensorElement> groups;
  for (const auto& [b, c] : w) {
    if (b.word.empty()) {
      out.element.add(b, c);
      continue;
    }
    groups[{b.fock, b.fn}].add(b.word, c);
  }
  auto reduce = [&](const FockMonomial& fock, const SmoothFunction& f, const TensorElement& words) {
    out.element.add(WBasis{fock, TensorWord{}, psi_apply(words, f, chart, opts)}, Scalar(1));
  };
  for (const auto& [key, words] : groups) {
    const auto& [fock, f] = key;
    if (certify_parallel(words, chart, sample).parallel) {
      reduce(fock, f, words);
      continue;
    }
    for (const auto& [word, c] : words) {
      const TensorElement single(word, c);
      if (certify_parallel(single, chart, sample).parallel) {
        reduce(fock, f, single);
      } else {
        WBasis b{fock, word, f};
        out.element.add(b, c);
        out.irreducible.push_back(std::move(b));
      }
    }
  }
  return out;
}

/// Raised when evaluation meets a term with a Fock part or a bottom word.
class UnreducedElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum of coefficient * f(x) over a fully reduced element.
inline Complex evaluate_W(const WElement& w, const Point& x, const Chart& chart) {
  chart.require_admissible(x, "evaluate_W");
  Complex total = 0.0;
  for (const auto& [b, c] : w) {
    if (!b.fock.is_vacuum() || !b.word.empty()) {
      std::ostringstream os;
      os << "evaluate_W: term " << c << "*" << b << " is not reduced";
      throw UnreducedElement(os.str());
    }
    total += c.to_complex() * b.fn(x);
  }
  return total;
}

/// sum_i E_i(-k) E_i(k) w for the frame basis.
inline WElement paired_modes(int k, const WElement& w, const FrameSpace& space) {
  WModule module(space);
  WElement out;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const int idx = static_cast<int>(i);
    out.add(act_basis_mode(BasisMode{idx, -k}, act_basis_mode(BasisMode{idx, k}, w, module), module));
  }
  return out;
}

/// Coefficient of x^-2 in sum_i :E_i(x)E_i(x): w, computed through the field expansion and through
/// 2 sum_{k=1..K} E_i(-k)E_i(k) + E_i(0)E_i(0); both exact.
struct ModeIdentity {
  WElement field;
  WElement modes;

  bool holds() const { return field == modes; }
};

inline ModeIdentity mode_identity(const WElement& w, int K, const FrameSpace& space) {
  if (!space.is_orthonormal()) throw std::invalid_argument("mode_identity: frame must be orthonormal");
  ModeIdentity out;
  out.field = mode_coefficient(metric_inverse_element(1, 1, space), w, -2, WModule(space));
  for (int k = 1; k <= K; ++k) out.modes.add(paired_modes(k, w, space), Scalar(2));
  out.modes.add(paired_modes(0, w, space));
  return out;
}

struct LaplacianModeCheck {
  Complex lhs;
  Complex rhs;
  double error = 0;
  bool mode_identity_holds = false;
};

/// Extracts the x^-2 coefficient of Y_W(-metric_inverse_element(1,1), x) on 1 (x) (1 (x) f), reduces
/// it and evaluates at x; compares with the geometric Laplacian. The mode identity behind the
/// extraction is checked exactly on the same vector.
inline LaplacianModeCheck laplacian_mode_check(const SmoothFunction& f, const Point& x, const Chart& chart,
                                               const HolonomySample& sample, const DerivativeOptions& opts = {}) {
  const FrameSpace space(chart.dim());
  const WElement w = w_generator(f);
  const FockElement u = Scalar(-1) * metric_inverse_element(1, 1, space);
  const WElement coefficient = vertex_operator_W(u, w, -2, -2, space, sample).coefficient(-2);
  const Reduction reduced = reduce_bottom(coefficient, sample, chart, opts);
  LaplacianModeCheck out;
  out.lhs = evaluate_W(reduced.element, x, chart);
  out.rhs = laplacian(f, chart, x, opts);
  out.error = std::abs(out.lhs - out.rhs);
  const ModeIdentity identity = mode_identity(w, 2, space);
  out.mode_identity_holds = identity.holds() && identity.field == Scalar(-1) * coefficient;
  return out;
}

/// All basis WElements with Fock weight <= max_weight and the given bottom words and function.
inline std::vector<WBasis> w_basis_up_to(std::size_t d, int max_weight, const std::vector<TensorWord>& words,
                                         const SmoothFunction& f) {
  std::vector<WBasis> out;
  for (const auto& m : fock_basis_up_to(d, max_weight))
    for (const auto& word : words) out.push_back(WBasis{m, word, f});
  return out;
}

}  // namespace mosva

#endif  // MOSVA_MODULE_W_HPP
