#ifndef MOSVA_GEOMETRY_TRANSPORT_HPP
#define MOSVA_GEOMETRY_TRANSPORT_HPP

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/covariant.hpp"

namespace mosva {

/// A curve t in [0, 1] -> chart point, with its analytic velocity.
struct Curve {
  std::function<Point(double)> position;
  std::function<Eigen::VectorXd(double)> velocity;
};

/// A closed piecewise curve, traversed segment by segment.
struct Loop {
  std::string description;
  std::vector<Curve> segments;
};

/// Solves dv^k/dt + Gamma^k_ij x'^i v^j = 0 with classical RK4 for every column of v0.
inline Eigen::MatrixXd parallel_transport(const Chart& chart, const Curve& curve, const Eigen::MatrixXd& v0,
                                          int steps = 1000) {
  if (steps < 1) throw std::invalid_argument("parallel_transport: steps must be positive");
  const std::size_t d = chart.dim();
  auto rhs = [&](double t, const Eigen::MatrixXd& v) {
    const Point x = curve.position(t);
    if (!chart.is_admissible(x)) throw DomainError("parallel_transport: curve leaves the domain of " + chart.name);
    const Eigen::VectorXd xd = curve.velocity(t);
    const Christoffel g = detail::christoffel_unchecked(chart, x);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(v.rows(), v.cols());
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        const double xi = xd[static_cast<Eigen::Index>(i)];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const double gk = g(k, i, j);
          if (gk == 0.0) continue;
          out.row(static_cast<Eigen::Index>(k)) -= gk * xi * v.row(static_cast<Eigen::Index>(j));
        }
      }
    return out;
  };
  Eigen::MatrixXd v = v0;
  const double dt = 1.0 / steps;
  for (int n = 0; n < steps; ++n) {
    const double t = n * dt;
    const Eigen::MatrixXd k1 = rhs(t, v);
    const Eigen::MatrixXd k2 = rhs(t + dt / 2, v + dt / 2 * k1);
    const Eigen::MatrixXd k3 = rhs(t + dt / 2, v + dt / 2 * k2);
    const Eigen::MatrixXd k4 = rhs(t + dt, v + dt * k3);
    v += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return v;
}

inline Eigen::VectorXd parallel_transport(const Chart& chart, const Curve& curve, const Eigen::VectorXd& v0,
                                          int steps = 1000) {
  return parallel_transport(chart, curve, Eigen::MatrixXd(v0), steps).col(0);
}

namespace detail {

/// Coordinate distance respecting periodic directions.
inline double chart_distance(const Chart& chart, const Point& a, const Point& b) {
  double m = 0;
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    double diff = std::abs(a[static_cast<Eigen::Index>(i)] - b[static_cast<Eigen::Index>(i)]);
    if (chart.periodic[i]) {
      const double period = chart.upper[static_cast<Eigen::Index>(i)] - chart.lower[static_cast<Eigen::Index>(i)];
      diff = std::fmod(diff, period);
      diff = std::min(diff, period - diff);
    }
    m = std::max(m, diff);
  }
  return m;
}

}  // namespace detail

/// Holonomy of a closed loop in frame coordinates: A_ij = g(E_i(p), P(E_j(p))).
inline Eigen::MatrixXd holonomy_loop(const Chart& chart, const Loop& loop, int steps = 1000) {
  if (loop.segments.empty()) throw std::invalid_argument("holonomy_loop: empty loop");
  constexpr double kClosure = 1e-9;
  for (std::size_t s = 0; s + 1 < loop.segments.size(); ++s)
    if (detail::chart_distance(chart, loop.segments[s].position(1.0), loop.segments[s + 1].position(0.0)) > kClosure)
      throw std::invalid_argument("holonomy_loop: segments of '" + loop.description + "' do not join");
  const Point p = loop.segments.front().position(0.0);
  if (detail::chart_distance(chart, loop.segments.back().position(1.0), p) > kClosure)
    throw std::invalid_argument("holonomy_loop: loop '" + loop.description + "' is not closed");
  chart.require_admissible(p, "holonomy_loop");
  const Eigen::MatrixXd e = frame(chart, p);
  Eigen::MatrixXd v = e;
  for (const auto& seg : loop.segments) v = parallel_transport(chart, seg, v, steps);
  return e.transpose() * chart.metric(p) * v;
}

/// Straight coordinate segment from a to b.
inline Curve line_segment(const Point& a, const Point& b) {
  return {[a, b](double t) -> Point { return a + t * (b - a); }, [a, b](double) -> Eigen::VectorXd { return b - a; }};
}

/// Closed polygon through the given vertices (straight coordinate segments).
inline Loop polygon_loop(std::string description, const std::vector<Point>& vertices) {
  Loop loop{std::move(description), {}};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    loop.segments.push_back(line_segment(vertices[i], vertices[(i + 1) % vertices.size()]));
  return loop;
}

/// Coordinate rectangle with corner p and sides a, b along the first two coordinates.
inline Loop coordinate_rectangle(const Point& p, double a, double b) {
  Point q1 = p, q2 = p, q3 = p;
  q1[0] += a;
  q2[0] += a;
  q2[1] += b;
  q3[1] += b;
  return polygon_loop("rectangle " + std::to_string(a) + " x " + std::to_string(b), {p, q1, q2, q3});
}

/// Constant loop at p.
inline Loop constant_loop(const Point& p) {
  return {"constant", {{[p](double) -> Point { return p; },
                        [p](double) -> Eigen::VectorXd { return Eigen::VectorXd::Zero(p.size()); }}}};
}

/// Unit vector of the embedded sphere at (theta, phi).
inline Eigen::Vector3d sphere_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Great-circle arc on the round sphere chart between two unit vectors (not antipodal).
inline Curve great_circle_arc(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double omega = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  const Eigen::Vector3d u = a;
  const Eigen::Vector3d w = (b - a.dot(b) * a).normalized();
  auto embedded = [=](double t) { return Eigen::Vector3d(std::cos(omega * t) * u + std::sin(omega * t) * w); };
  auto embedded_velocity = [=](double t) {
    return Eigen::Vector3d(omega * (-std::sin(omega * t) * u + std::cos(omega * t) * w));
  };
  Curve c;
  c.position = [=](double t) -> Point {
    const Eigen::Vector3d x = embedded(t);
    double phi = std::atan2(x.y(), x.x());
    if (phi < 0) phi += 2 * std::numbers::pi;
    return Eigen::Vector2d(std::acos(std::clamp(x.z(), -1.0, 1.0)), phi);
  };
  c.velocity = [=](double t) -> Eigen::VectorXd {
    const Eigen::Vector3d x = embedded(t);
    const Eigen::Vector3d v = embedded_velocity(t);
    const double rho2 = x.x() * x.x() + x.y() * x.y();
    return Eigen::Vector2d(-v.z() / std::sqrt(rho2), (x.x() * v.y() - x.y() * v.x()) / rho2);
  };
  return c;
}

/// Geodesic triangle on the round sphere chart through three unit vectors.
inline Loop spherical_triangle(std::string description, const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                               const Eigen::Vector3d& c) {
  return {std::move(description), {great_circle_arc(a, b), great_circle_arc(b, c), great_circle_arc(c, a)}};
}

/// The octant triangle with three right angles, rotated about the x-axis by alpha so that it
/// avoids the coordinate poles; base point (pi/2, 0).
inline Loop sphere_octant_triangle(double alpha = -0.5) {
  const Eigen::Vector3d e1(1, 0, 0);
  const Eigen::Vector3d e2(0, std::cos(alpha), std::sin(alpha));
  const Eigen::Vector3d e3(0, -std::sin(alpha), std::cos(alpha));
  return spherical_triangle("octant triangle", e1, e2, e3);
}

/// Circle of constant colatitude theta0 starting at phi0, traversed once.
inline Loop colatitude_circle(double theta0, double phi0 = 0.0) {
  Curve c;
  c.position = [=](double t) -> Point { return Eigen::Vector2d(theta0, phi0 + 2 * std::numbers::pi * t); };
  c.velocity = [](double) -> Eigen::VectorXd { return Eigen::Vector2d(0, 2 * std::numbers::pi); };
  return {"colatitude circle", {c}};
}

/// Hyperbolic geodesic from a to b in the half-plane: a vertical segment or an arc of a circle
/// centred on the x-axis.
inline Curve hyperbolic_geodesic(const Point& a, const Point& b) {
  if (std::abs(a[0] - b[0]) < 1e-12) return line_segment(a, b);
  const double c = (b[0] * b[0] + b[1] * b[1] - a[0] * a[0] - a[1] * a[1]) / (2 * (b[0] - a[0]));
  const double r = std::hypot(a[0] - c, a[1]);
  const double ta = std::atan2(a[1], a[0] - c);
  const double tb = std::atan2(b[1], b[0] - c);
  Curve curve;
  curve.position = [=](double t) -> Point {
    const double s = ta + t * (tb - ta);
    return Eigen::Vector2d(c + r * std::cos(s), r * std::sin(s));
  };
  curve.velocity = [=](double t) -> Eigen::VectorXd {
    const double s = ta + t * (tb - ta);
    return Eigen::Vector2d(-r * std::sin(s) * (tb - ta), r * std::cos(s) * (tb - ta));
  };
  return curve;
}

inline Loop hyperbolic_triangle(std::string description, const Point& a, const Point& b, const Point& c) {
  return {std::move(description), {hyperbolic_geodesic(a, b), hyperbolic_geodesic(b, c), hyperbolic_geodesic(c, a)}};
}

/// Default loop family at the chart's base point: coordinate rectangles at three scales followed
/// by two geodesic triangles. Prefixes of the family form nested samples.
inline std::vector<Loop> loop_family(const Chart& chart) {
  const Point p = chart.base_point;
  std::vector<Loop> loops;
  for (double s : {0.05, 0.1, 0.2}) loops.push_back(coordinate_rectangle(p, s, s));
  auto offset = [&](double dx, double dy) -> Point {
    Point q = p;
    q[0] += dx;
    q[1] += dy;
    return q;
  };
  if (chart.name == "s2") {
    const Eigen::Vector3d a = sphere_point(p[0], p[1]);
    loops.push_back(spherical_triangle("geodesic triangle 1", a, sphere_point(p[0] + 0.3, p[1]),
                                       sphere_point(p[0], p[1] + 0.4)));
    loops.push_back(spherical_triangle("geodesic triangle 2", a, sphere_point(p[0] - 0.2, p[1] + 0.3),
                                       sphere_point(p[0] + 0.25, p[1] + 0.2)));
  } else if (chart.name == "hyperbolic") {
    loops.push_back(hyperbolic_triangle("geodesic triangle 1", p, offset(0.3, 0), offset(0.1, 0.4)));
    loops.push_back(hyperbolic_triangle("geodesic triangle 2", p, offset(-0.2, 0.3), offset(0.25, 0.5)));
  } else {
    loops.push_back(polygon_loop("geodesic triangle 1", {p, offset(0.1, 0), offset(0, 0.1)}));
    loops.push_back(polygon_loop("geodesic triangle 2", {p, offset(0.2, 0.1), offset(-0.1, 0.15)}));
  }
  return loops;
}

/// Rotation angle of a 2x2 holonomy matrix.
inline double rotation_angle(const Eigen::MatrixXd& a) { return std::atan2(a(1, 0), a(0, 0)); }

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_TRANSPORT_HPP
