#ifndef MOSVA_GEOMETRY_CHART_HPP
#define MOSVA_GEOMETRY_CHART_HPP

#include <Eigen/Dense>

#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/geometry/expr.hpp"
#include "mosva/geometry/function.hpp"
#include "mosva/geometry/parser.hpp"

namespace mosva {

/// A point (or curve) outside the admissible part of a chart domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An unrecognized manifold preset name.
class UnknownManifold : public std::invalid_argument {
 public:
  explicit UnknownManifold(const std::string& name) : std::invalid_argument("unknown manifold '" + name + "'") {}
};

using ExprMatrix = std::vector<std::vector<Expr>>;

/// A single coordinate chart with a Riemannian metric. Points are admissible when every
/// non-periodic coordinate lies at least `margin` inside the domain box.
struct Chart {
  std::string name;
  std::vector<std::string> coordinates;
  Point lower;
  Point upper;
  std::vector<bool> periodic;
  double margin = 0.1;
  double fd_step = 1e-3;
  /// Symbolic metric components g_ij.
  ExprMatrix metric_expr;
  /// Analytic Christoffel symbols, index (k*d + i)*d + j for Gamma^k_ij.
  std::optional<std::vector<Expr>> christoffel_expr;
  /// Default base point for holonomy sampling.
  Point base_point;

  std::size_t dim() const { return coordinates.size(); }

  Eigen::MatrixXd metric(const Point& x) const {
    const std::size_t d = dim();
    Eigen::MatrixXd g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g(i, j) = metric_expr[i][j].eval(x).real();
    return g;
  }

  bool is_admissible(const Point& x, double extra = 0.0) const {
    if (static_cast<std::size_t>(x.size()) != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!std::isfinite(x[i])) return false;
      if (periodic[i]) continue;
      if (x[i] < lower[i] + margin - extra || x[i] > upper[i] - margin + extra) return false;
    }
    return true;
  }

  void require_admissible(const Point& x, const std::string& op) const {
    if (is_admissible(x)) return;
    std::ostringstream os;
    os << op << ": point (" << x.transpose() << ") outside the domain of " << name;
    throw DomainError(os.str());
  }

  /// Parses an expression over this chart's coordinates.
  SmoothFunction function(const std::string& text) const { return SmoothFunction(parse_expression(text, coordinates), text); }

  Expr coordinate(int i) const { return Expr::variable(i, coordinates[static_cast<std::size_t>(i)]); }
};

/// Chart with a metric given by expression strings; Christoffel symbols come from finite differences.
inline Chart chart_from_metric(std::string name, std::vector<std::string> coordinates,
                               const std::vector<std::vector<std::string>>& metric, Point lower, Point upper,
                               std::vector<bool> periodic, Point base) {
  Chart c;
  c.name = std::move(name);
  c.coordinates = std::move(coordinates);
  const std::size_t d = c.coordinates.size();
  if (metric.size() != d) throw std::invalid_argument("chart_from_metric: metric has wrong size");
  for (const auto& row : metric) {
    if (row.size() != d) throw std::invalid_argument("chart_from_metric: metric has wrong size");
    std::vector<Expr> r;
    for (const auto& text : row) r.push_back(parse_expression(text, c.coordinates));
    c.metric_expr.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c.metric_expr[i][j] != c.metric_expr[j][i]) throw std::invalid_argument("chart_from_metric: metric not symmetric");
  c.lower = std::move(lower);
  c.upper = std::move(upper);
  c.periodic = std::move(periodic);
  c.base_point = std::move(base);
  return c;
}

namespace detail {

inline std::vector<Expr> zero_christoffel(std::size_t d) { return std::vector<Expr>(d * d * d, Expr()); }

inline Chart flat_chart(std::string name, Point lower, Point upper, std::vector<bool> periodic, Point base) {
  Chart c;
  c.name = std::move(name);
  c.coordinates = {"x", "y"};
  c.metric_expr = {{Expr(1.0), Expr(0.0)}, {Expr(0.0), Expr(1.0)}};
  c.christoffel_expr = zero_christoffel(2);
  c.lower = std::move(lower);
  c.upper = std::move(upper);
  c.periodic = std::move(periodic);
  c.base_point = std::move(base);
  return c;
}

}  // namespace detail

/// Flat R^2 on the box [-5, 5]^2.
inline Chart flat_plane() {
  return detail::flat_chart("flat", Eigen::Vector2d(-5, -5), Eigen::Vector2d(5, 5), {false, false},
                            Eigen::Vector2d(0.3, 0.2));
}

/// Flat torus: the unit square with both coordinates periodic.
inline Chart flat_torus() {
  return detail::flat_chart("torus", Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1), {true, true},
                            Eigen::Vector2d(0.3, 0.6));
}

/// Round unit sphere in (theta, phi) with metric diag(1, sin^2 theta); phi is periodic.
inline Chart round_sphere() {
  Chart c;
  c.name = "s2";
  c.coordinates = {"theta", "phi"};
  const Expr theta = c.coordinate(0);
  const Expr s = sin(theta);
  const Expr co = cos(theta);
  c.metric_expr = {{Expr(1.0), Expr(0.0)}, {Expr(0.0), power(s, 2)}};
  auto gamma = detail::zero_christoffel(2);
  gamma[(0 * 2 + 1) * 2 + 1] = -(s * co);  // Gamma^theta_{phi phi}
  gamma[(1 * 2 + 0) * 2 + 1] = co / s;     // Gamma^phi_{theta phi}
  gamma[(1 * 2 + 1) * 2 + 0] = co / s;     // Gamma^phi_{phi theta}
  c.christoffel_expr = gamma;
  c.lower = Eigen::Vector2d(0, 0);
  c.upper = Eigen::Vector2d(std::numbers::pi, 2 * std::numbers::pi);
  c.periodic = {false, true};
  c.base_point = Eigen::Vector2d(1.0, 0.5);
  return c;
}

/// Upper half-plane (x, y), y > 0, with metric y^-2 I.
inline Chart hyperbolic_half_plane() {
  Chart c;
  c.name = "hyperbolic";
  c.coordinates = {"x", "y"};
  const Expr y = c.coordinate(1);
  const Expr inv = power(y, -1);
  c.metric_expr = {{power(y, -2), Expr(0.0)}, {Expr(0.0), power(y, -2)}};
  auto gamma = detail::zero_christoffel(2);
  gamma[(0 * 2 + 0) * 2 + 1] = -inv;  // Gamma^x_{xy}
  gamma[(0 * 2 + 1) * 2 + 0] = -inv;  // Gamma^x_{yx}
  gamma[(1 * 2 + 0) * 2 + 0] = inv;   // Gamma^y_{xx}
  gamma[(1 * 2 + 1) * 2 + 1] = -inv;  // Gamma^y_{yy}
  c.christoffel_expr = gamma;
  c.lower = Eigen::Vector2d(-5, 0);
  c.upper = Eigen::Vector2d(5, 5);
  c.periodic = {false, false};
  c.base_point = Eigen::Vector2d(0.2, 1.0);
  return c;
}

inline std::vector<std::string> preset_names() { return {"flat", "hyperbolic", "s2", "torus"}; }

inline Chart make_preset(const std::string& name) {
  if (name == "flat") return flat_plane();
  if (name == "torus") return flat_torus();
  if (name == "s2") return round_sphere();
  if (name == "hyperbolic") return hyperbolic_half_plane();
  throw UnknownManifold(name);
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_CHART_HPP
