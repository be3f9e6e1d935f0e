#ifndef MOSVA_GEOMETRY_COVARIANT_HPP
#define MOSVA_GEOMETRY_COVARIANT_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/expr.hpp"
#include "mosva/geometry/function.hpp"
#include "mosva/geometry/tensor.hpp"

namespace mosva {

inline constexpr int kMaxDerivativeOrder = 4;

/// Christoffel symbols Gamma^k_ij at a point.
struct Christoffel {
  std::size_t d = 0;
  std::vector<double> values;

  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return values[(k * d + i) * d + j]; }
};

/// How derivatives are taken: symbolically when both the function and the chart allow it, otherwise
/// by 4th-order central differences with the given step (0 selects the chart default).
struct DerivativeOptions {
  bool symbolic = true;
  double step = 0.0;
};

namespace detail {

inline double step_for(const Chart& chart, const DerivativeOptions& opts) { return opts.step > 0 ? opts.step : chart.fd_step; }

/// 4th-order central difference of a vector-valued map along coordinate i.
template <class Vec, class F>
Vec central_difference(F&& f, const Point& x, std::size_t i, double h) {
  Point p = x;
  auto at = [&](double s) {
    p = x;
    p[static_cast<Eigen::Index>(i)] += s;
    return f(p);
  };
  const Vec a = at(2 * h);
  const Vec b = at(h);
  const Vec c = at(-h);
  const Vec e = at(-2 * h);
  return (-a + 8.0 * b - 8.0 * c + e) / (12.0 * h);
}

inline std::size_t ipow(std::size_t d, int m) {
  std::size_t n = 1;
  for (int k = 0; k < m; ++k) n *= d;
  return n;
}

/// Digit s (0 = most significant) of a flat multi-index of length m in base d.
inline std::size_t digit(std::size_t flat, int s, int m, std::size_t d) { return (flat / ipow(d, m - 1 - s)) % d; }

inline std::size_t replace_digit(std::size_t flat, int s, int m, std::size_t d, std::size_t value) {
  const std::size_t p = ipow(d, m - 1 - s);
  return flat - digit(flat, s, m, d) * p + value * p;
}

}  // namespace detail

namespace detail {

inline Christoffel christoffel_fd_unchecked(const Chart& chart, const Point& x, double h) {
  const std::size_t d = chart.dim();
  std::vector<Eigen::MatrixXd> dg;
  for (std::size_t l = 0; l < d; ++l)
    dg.push_back(central_difference<Eigen::MatrixXd>([&](const Point& p) { return chart.metric(p); }, x, l, h));
  const Eigen::MatrixXd ginv = chart.metric(x).inverse();
  Christoffel out{d, std::vector<double>(d * d * d, 0.0)};
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        double s = 0;
        for (std::size_t l = 0; l < d; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        out.values[(k * d + i) * d + j] = 0.5 * s;
      }
  return out;
}

/// Christoffel symbols without the admissibility check, for points inside difference stencils.
inline Christoffel christoffel_unchecked(const Chart& chart, const Point& x) {
  if (!chart.christoffel_expr) return christoffel_fd_unchecked(chart, x, chart.fd_step);
  const std::size_t d = chart.dim();
  Christoffel out{d, std::vector<double>(d * d * d)};
  for (std::size_t n = 0; n < out.values.size(); ++n) out.values[n] = (*chart.christoffel_expr)[n].eval(x).real();
  return out;
}

/// Rejects x unless it is admissible and a stencil of the given reach stays inside the domain box.
inline void require_stencil(const Chart& chart, const Point& x, double reach, const std::string& op) {
  chart.require_admissible(x, op);
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    if (chart.periodic[i]) continue;
    const auto k = static_cast<Eigen::Index>(i);
    if (x[k] - reach <= chart.lower[k] || x[k] + reach >= chart.upper[k]) {
      std::ostringstream os;
      os << op << ": difference stencil of reach " << reach << " at (" << x.transpose() << ") leaves the domain of "
         << chart.name;
      throw DomainError(os.str());
    }
  }
}

}  // namespace detail

/// Christoffel symbols from 4th-order central differences of the metric.
inline Christoffel christoffel_fd(const Chart& chart, const Point& x, double step = 0.0) {
  const double h = step > 0 ? step : chart.fd_step;
  detail::require_stencil(chart, x, 2 * h, "christoffel");
  return detail::christoffel_fd_unchecked(chart, x, h);
}

/// Christoffel symbols of the Levi-Civita connection; analytic when the chart provides them.
inline Christoffel christoffel(const Chart& chart, const Point& x) {
  if (!chart.christoffel_expr) return christoffel_fd(chart, x);
  chart.require_admissible(x, "christoffel");
  return detail::christoffel_unchecked(chart, x);
}

/// Gram-Schmidt of the coordinate vectors in index order; result[j][i] is coordinate j of E_i.
template <class S, class Sqrt>
std::vector<std::vector<S>> gram_schmidt(const std::vector<std::vector<S>>& g, Sqrt&& square_root) {
  const std::size_t d = g.size();
  auto inner = [&](const std::vector<S>& a, const std::vector<S>& b) {
    S s(0.0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) s = s + a[p] * g[p][q] * b[q];
    return s;
  };
  std::vector<std::vector<S>> cols;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<S> v(d, S(0.0));
    v[i] = S(1.0);
    for (const auto& e : cols) {
      const S proj = inner(v, e);
      for (std::size_t p = 0; p < d; ++p) v[p] = v[p] - proj * e[p];
    }
    const S norm = square_root(inner(v, v));
    for (std::size_t p = 0; p < d; ++p) v[p] = v[p] / norm;
    cols.push_back(std::move(v));
  }
  std::vector<std::vector<S>> out(d, std::vector<S>(d, S(0.0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[j][i] = cols[i][j];
  return out;
}

/// Orthonormal frame at x; column i holds the coordinate components of E_i.
inline Eigen::MatrixXd frame(const Chart& chart, const Point& x) {
  const Eigen::MatrixXd g = chart.metric(x);
  const std::size_t d = chart.dim();
  std::vector<std::vector<double>> gv(d, std::vector<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gv[i][j] = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  const auto e = gram_schmidt(gv, [](double v) { return std::sqrt(v); });
  Eigen::MatrixXd out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = e[j][i];
  return out;
}

/// Symbolic orthonormal frame of a chart; entry [j][i] is coordinate j of E_i.
inline ExprMatrix frame_expr(const Chart& chart) {
  return gram_schmidt(chart.metric_expr, [](const Expr& v) { return sqrt(v); });
}

/// Coordinate components of the m-th covariant derivative of an expression, via
/// (nabla^{k+1} f)_{iJ} = d_i (nabla^k f)_J - sum_s Gamma^l_{i j_s} (nabla^k f)_{J[j_s -> l]}.
inline std::vector<Expr> nabla_coordinate_expr(const Expr& f, int m, const Chart& chart) {
  if (!chart.christoffel_expr) throw std::logic_error("nabla_coordinate_expr: chart has no analytic Christoffel symbols");
  const std::size_t d = chart.dim();
  const auto& gamma = *chart.christoffel_expr;
  std::vector<Expr> cur{f};
  for (int k = 0; k < m; ++k) {
    const std::size_t n = cur.size();
    std::vector<Expr> next(n * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t J = 0; J < n; ++J) {
        std::vector<Expr> terms{cur[J].diff(static_cast<int>(i))};
        for (int s = 0; s < k; ++s) {
          const std::size_t js = detail::digit(J, s, k, d);
          for (std::size_t l = 0; l < d; ++l) {
            const Expr& g = gamma[(l * d + i) * d + js];
            if (g.is_zero()) continue;
            terms.push_back(Expr(-1.0) * g * cur[detail::replace_digit(J, s, k, d, l)]);
          }
        }
        next[i * n + J] = Expr::sum(std::move(terms));
      }
    cur = std::move(next);
  }
  return cur;
}

/// Contracts every slot of a coordinate tensor with the frame: out_W = sum_J prod_s E[j_s][w_s] in_J.
template <class S, class M>
std::vector<S> coordinate_to_frame(std::vector<S> comps, int m, std::size_t d, const M& e) {
  for (int s = 0; s < m; ++s) {
    std::vector<S> next(comps.size(), S(0.0));
    for (std::size_t W = 0; W < comps.size(); ++W) {
      const std::size_t w = detail::digit(W, s, m, d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto& ejw = e[j][w];
        next[W] = next[W] + ejw * comps[detail::replace_digit(W, s, m, d, j)];
      }
    }
    comps = std::move(next);
  }
  return comps;
}

/// Coordinate components of nabla^m f by nested central differences.
inline std::vector<Complex> nabla_coordinate_numeric(const std::function<Complex(const Point&)>& f, int m,
                                                     const Chart& chart, const Point& x, double h) {
  const std::size_t d = chart.dim();
  std::function<Eigen::VectorXcd(int, const Point&)> level = [&](int k, const Point& y) -> Eigen::VectorXcd {
    if (k == 0) return Eigen::VectorXcd::Constant(1, f(y));
    const Eigen::VectorXcd prev = level(k - 1, y);
    const auto n = static_cast<std::size_t>(prev.size());
    const Christoffel gamma = detail::christoffel_unchecked(chart, y);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(n * d));
    for (std::size_t i = 0; i < d; ++i) {
      const Eigen::VectorXcd di =
          detail::central_difference<Eigen::VectorXcd>([&](const Point& p) { return level(k - 1, p); }, y, i, h);
      for (std::size_t J = 0; J < n; ++J) {
        Complex v = di[static_cast<Eigen::Index>(J)];
        for (int s = 0; s < k - 1; ++s) {
          const std::size_t js = detail::digit(J, s, k - 1, d);
          for (std::size_t l = 0; l < d; ++l)
            v -= gamma(l, i, js) * prev[static_cast<Eigen::Index>(detail::replace_digit(J, s, k - 1, d, l))];
        }
        out[static_cast<Eigen::Index>(i * n + J)] = v;
      }
    }
    return out;
  };
  const Eigen::VectorXcd top = level(m, x);
  return std::vector<Complex>(top.data(), top.data() + top.size());
}

inline bool uses_symbolic(const SmoothFunction& f, const Chart& chart, const DerivativeOptions& opts) {
  return opts.symbolic && f.is_symbolic() && chart.christoffel_expr.has_value();
}

/// Frame components of nabla^m f at x.
inline Tensor nabla_m_f(const SmoothFunction& f, int m, const Chart& chart, const Point& x,
                        const DerivativeOptions& opts = {}) {
  if (m < 0 || m > kMaxDerivativeOrder) throw std::invalid_argument("nabla_m_f: order must lie in [0, 4]");
  chart.require_admissible(x, "nabla_m_f");
  const std::size_t d = chart.dim();
  Tensor out = Tensor::zero(m, d);
  if (uses_symbolic(f, chart, opts)) {
    const auto comps = coordinate_to_frame(nabla_coordinate_expr(f.expr(), m, chart), m, d, frame_expr(chart));
    for (std::size_t n = 0; n < comps.size(); ++n) out.components[static_cast<Eigen::Index>(n)] = comps[n].eval(x);
    return out;
  }
  const double h = detail::step_for(chart, opts);
  detail::require_stencil(chart, x, 2 * h * (m + (chart.christoffel_expr ? 0 : 1)), "nabla_m_f");
  const auto coords = nabla_coordinate_numeric([&](const Point& p) { return f(p); }, m, chart, x, h);
  const Eigen::MatrixXd e = frame(chart, x);
  std::vector<std::vector<double>> ev(d, std::vector<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) ev[j][i] = e(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
  const auto comps = coordinate_to_frame(coords, m, d, ev);
  for (std::size_t n = 0; n < comps.size(); ++n) out.components[static_cast<Eigen::Index>(n)] = comps[n];
  return out;
}

namespace detail {

inline Complex imaginary_power(int m) {
  static const Complex powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[m % 4];
}

inline void check_word_orders(const TensorElement& word, std::size_t d, const char* op) {
  for (const auto& [w, c] : word) {
    if (w.order() > kMaxDerivativeOrder) throw std::invalid_argument(std::string(op) + ": word order exceeds 4");
    for (int i : w.indices)
      if (i < 0 || static_cast<std::size_t>(i) >= d) throw std::invalid_argument(std::string(op) + ": frame index out of range");
  }
}

inline std::string describe(const TensorElement& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

}  // namespace detail

/// psi(word) f = (sqrt(-1))^m (nabla^m f)(word), extended linearly over the words of the element.
/// The result is symbolic whenever f is and the chart has analytic Christoffel symbols.
inline SmoothFunction psi_apply(const TensorElement& word, const SmoothFunction& f, const Chart& chart,
                                const DerivativeOptions& opts = {}) {
  const std::size_t d = chart.dim();
  detail::check_word_orders(word, d, "psi_apply");
  const std::string label = "psi(" + detail::describe(word) + ")[" + f.label() + "]";
  if (uses_symbolic(f, chart, opts)) {
    const ExprMatrix e = frame_expr(chart);
    std::vector<Expr> terms;
    for (int m : orders_of(word)) {
      const auto comps = coordinate_to_frame(nabla_coordinate_expr(f.expr(), m, chart), m, d, e);
      Tensor index_helper = Tensor::zero(m, d);
      for (const auto& [w, c] : word) {
        if (w.order() != m) continue;
        terms.push_back(Expr(c.to_complex() * detail::imaginary_power(m)) * comps[index_helper.flat_index(w.indices)]);
      }
    }
    return SmoothFunction(Expr::sum(std::move(terms)), label);
  }
  return SmoothFunction(
      [word, f, chart, opts](const Point& x) {
        Complex total = 0.0;
        for (int m : orders_of(word)) {
          const Tensor t = nabla_m_f(f, m, chart, x, opts);
          for (const auto& [w, c] : word)
            if (w.order() == m) total += c.to_complex() * detail::imaginary_power(m) * t[w.indices];
        }
        return total;
      },
      label);
}

/// Rough Laplacian: frame trace of the covariant Hessian.
inline Complex laplacian(const SmoothFunction& f, const Chart& chart, const Point& x, const DerivativeOptions& opts = {}) {
  const Tensor h = nabla_m_f(f, 2, chart, x, opts);
  Complex s = 0.0;
  for (std::size_t i = 0; i < chart.dim(); ++i) s += h[{static_cast<int>(i), static_cast<int>(i)}];
  return s;
}

/// Coordinate formula (1/sqrt|g|) d_i (sqrt|g| g^{ij} d_j f); the outer derivative is a central difference.
inline Complex laplacian_coordinate(const SmoothFunction& f, const Chart& chart, const Point& x, double step = 0.0) {
  const std::size_t d = chart.dim();
  const double h = step > 0 ? step : chart.fd_step;
  detail::require_stencil(chart, x, 4 * h, "laplacian_coordinate");
  std::vector<SmoothFunction> partials;
  if (f.is_symbolic())
    for (std::size_t j = 0; j < d; ++j) partials.push_back(f.partial(static_cast<int>(j)));
  auto gradient = [&](const Point& p) {
    Eigen::VectorXcd df(static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j)
      df[static_cast<Eigen::Index>(j)] =
          f.is_symbolic() ? partials[j](p)
                          : detail::central_difference<Eigen::VectorXcd>(
                                [&](const Point& q) { return Eigen::VectorXcd::Constant(1, f(q)); }, p, j, h)[0];
    return df;
  };
  auto flux = [&](const Point& p) -> Eigen::VectorXcd {
    const Eigen::MatrixXd g = chart.metric(p);
    const Eigen::VectorXcd df = gradient(p);
    return std::sqrt(std::abs(g.determinant())) * (g.inverse().cast<Complex>() * df);
  };
  Complex div = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    div += detail::central_difference<Eigen::VectorXcd>(flux, x, i, h)[static_cast<Eigen::Index>(i)];
  return div / std::sqrt(std::abs(chart.metric(x).determinant()));
}

/// Tensor field given by frame components, and a vector field by coordinate components.
using TensorField = std::function<Tensor(const Point&)>;
using VectorField = std::function<Eigen::VectorXd(const Point&)>;

/// nabla_X T at x, in frame components. On order 0 this is the directional derivative X(f).
inline Tensor covariant_derivative_tensor(const TensorField& t, const VectorField& x_field, const Chart& chart,
                                          const Point& x, const DerivativeOptions& opts = {}) {
  const std::size_t d = chart.dim();
  const double h = detail::step_for(chart, opts);
  detail::require_stencil(chart, x, 2 * h, "covariant_derivative_tensor");
  const Tensor t0 = t(x);
  const int m = t0.order;
  auto coordinates = [&](const Point& p) -> Eigen::VectorXcd {
    return apply_to_each_index(frame(chart, p).cast<Complex>(), t(p)).components;
  };
  const Eigen::VectorXcd c = coordinates(x);
  const Christoffel gamma = detail::christoffel_unchecked(chart, x);
  const Eigen::VectorXd xv = x_field(x);
  Tensor r = Tensor::zero(m, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double xi = xv[static_cast<Eigen::Index>(i)];
    if (xi == 0.0) continue;
    const Eigen::VectorXcd di = detail::central_difference<Eigen::VectorXcd>(coordinates, x, i, h);
    for (std::size_t J = 0; J < static_cast<std::size_t>(c.size()); ++J) {
      Complex v = di[static_cast<Eigen::Index>(J)];
      for (int s = 0; s < m; ++s) {
        const std::size_t js = detail::digit(J, s, m, d);
        for (std::size_t l = 0; l < d; ++l)
          v += gamma(js, i, l) * c[static_cast<Eigen::Index>(detail::replace_digit(J, s, m, d, l))];
      }
      r.components[static_cast<Eigen::Index>(J)] += xi * v;
    }
  }
  return apply_to_each_index(frame(chart, x).inverse().cast<Complex>(), r);
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_COVARIANT_HPP
