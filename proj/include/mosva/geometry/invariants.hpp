#ifndef MOSVA_GEOMETRY_INVARIANTS_HPP
#define MOSVA_GEOMETRY_INVARIANTS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/covariant.hpp"
#include "mosva/geometry/tensor.hpp"
#include "mosva/geometry/transport.hpp"

namespace mosva {

/// Holonomy matrices (frame coordinates) at a base point, one per sampled loop.
struct HolonomySample {
  Point base;
  std::vector<Eigen::MatrixXd> matrices;
  std::vector<std::string> loops;

  std::size_t dim() const { return static_cast<std::size_t>(base.size()); }
};

inline HolonomySample holonomy_sample(const Chart& chart, const std::vector<Loop>& loops, int steps = 1000) {
  if (loops.empty()) throw std::invalid_argument("holonomy_sample: no loops");
  HolonomySample s;
  s.base = loops.front().segments.front().position(0.0);
  for (const auto& loop : loops) {
    if (detail::chart_distance(chart, loop.segments.front().position(0.0), s.base) > 1e-9)
      throw std::invalid_argument("holonomy_sample: loop '" + loop.description + "' has a different base point");
    s.matrices.push_back(holonomy_loop(chart, loop, steps));
    s.loops.push_back(loop.description);
  }
  return s;
}

/// Sample over the chart's default loop family.
inline HolonomySample default_holonomy_sample(const Chart& chart, int steps = 1000) {
  return holonomy_sample(chart, loop_family(chart), steps);
}

/// Kronecker power A^{(x)m}; index order matches Tensor (first index most significant).
inline Eigen::MatrixXd kronecker_power(const Eigen::MatrixXd& a, int m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int k = 0; k < m; ++k) {
    Eigen::MatrixXd next(out.rows() * a.rows(), out.cols() * a.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * a.rows(), j * a.cols(), a.rows(), a.cols()) = out(i, j) * a;
    out = std::move(next);
  }
  return out;
}

inline constexpr double kNullspaceThreshold = 1e-8;
inline constexpr double kFixedTolerance = 1e-6;
inline constexpr double kParallelDerivativeTolerance = 1e-5;

/// Orthonormal basis of the order-m tensors fixed by every sampled matrix: the nullspace of the
/// stacked system (A^{(x)m} - I), singular values below 1e-8 counted as zero.
inline std::vector<Tensor> invariant_tensors(const HolonomySample& sample, int m) {
  if (sample.matrices.empty()) throw std::invalid_argument("invariant_tensors: empty sample");
  if (m < 0 || m > kMaxDerivativeOrder) throw std::invalid_argument("invariant_tensors: order must lie in [0, 4]");
  const std::size_t d = sample.dim();
  const auto n = static_cast<Eigen::Index>(detail::ipow(d, m));
  Eigen::MatrixXd stacked(n * static_cast<Eigen::Index>(sample.matrices.size()), n);
  for (std::size_t k = 0; k < sample.matrices.size(); ++k)
    stacked.block(static_cast<Eigen::Index>(k) * n, 0, n, n) =
        kronecker_power(sample.matrices[k], m) - Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<Tensor> out;
  for (Eigen::Index c = 0; c < n; ++c) {
    const bool null = c >= sv.size() || sv[c] < kNullspaceThreshold;
    if (!null) continue;
    Tensor t = Tensor::zero(m, d);
    t.components = svd.matrixV().col(c).cast<Complex>();
    out.push_back(std::move(t));
  }
  return out;
}

/// Largest |A^{(x)m} t - t| over the sample.
inline double holonomy_defect(const Tensor& t, const HolonomySample& sample) {
  double worst = 0;
  for (const auto& a : sample.matrices)
    worst = std::max(worst, (apply_to_each_index(a.cast<Complex>(), t).components - t.components).cwiseAbs().maxCoeff());
  return worst;
}

/// Distance from t to the span of an orthonormal real basis.
inline double distance_to_span(const Tensor& t, const std::vector<Tensor>& basis) {
  Eigen::VectorXcd r = t.components;
  for (const auto& b : basis) r -= b.components.dot(t.components) * b.components;
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

/// Outcome of the two-sided parallel test.
struct ParallelCertificate {
  bool parallel = false;
  double holonomy_defect = 0;
  double derivative_norm = 0;
};

/// Deterministic admissible sample points of a chart.
inline std::vector<Point> random_admissible_points(const Chart& chart, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Point> out;
  const std::size_t d = chart.dim();
  while (out.size() < count) {
    Point p(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      const double lo = chart.periodic[i] ? chart.lower[k] : chart.lower[k] + chart.margin;
      const double hi = chart.periodic[i] ? chart.upper[k] : chart.upper[k] - chart.margin;
      p[k] = std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// A tensor element with constant frame coefficients is accepted as parallel iff it is fixed by
/// every sampled holonomy matrix to 1e-6 and its covariant derivative along every coordinate
/// direction at 5 seeded random points is below 1e-5.
inline ParallelCertificate certify_parallel(const TensorElement& t, const Chart& chart, const HolonomySample& sample,
                                            std::uint32_t seed = 20240611) {
  ParallelCertificate cert;
  const std::size_t d = chart.dim();
  const auto points = random_admissible_points(chart, 5, seed);
  for (int m : orders_of(t)) {
    const Tensor dense = to_tensor(t, m, d);
    cert.holonomy_defect = std::max(cert.holonomy_defect, holonomy_defect(dense, sample));
    if (m == 0) continue;
    const TensorField field = [dense](const Point&) { return dense; };
    for (const auto& p : points)
      for (std::size_t i = 0; i < d; ++i) {
        const VectorField direction = [i, d](const Point&) {
          Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
          v[static_cast<Eigen::Index>(i)] = 1.0;
          return v;
        };
        cert.derivative_norm =
            std::max(cert.derivative_norm, covariant_derivative_tensor(field, direction, chart, p).max_abs());
      }
  }
  cert.parallel = cert.holonomy_defect < kFixedTolerance && cert.derivative_norm < kParallelDerivativeTolerance;
  return cert;
}

/// Raised when a computation requires a parallel tensor and certification fails.
class NotParallel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// max over the grid of |psi(X (x) Y) f - psi(X)(psi(Y) f)|; Y must certify as parallel.
inline double check_psi_homomorphism(const TensorElement& x, const TensorElement& y, const SmoothFunction& f,
                                     const Chart& chart, const HolonomySample& sample, const std::vector<Point>& grid,
                                     const DerivativeOptions& opts = {}) {
  int order = 0;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) order = std::max(order, wx.order() + wy.order());
  if (order > kMaxDerivativeOrder) throw std::invalid_argument("check_psi_homomorphism: combined order exceeds 4");
  const ParallelCertificate cert = certify_parallel(y, chart, sample);
  if (!cert.parallel) {
    std::ostringstream os;
    os << "check_psi_homomorphism: Y = " << y << " is not parallel (holonomy defect " << cert.holonomy_defect
       << ", covariant derivative " << cert.derivative_norm << ")";
    throw NotParallel(os.str());
  }
  const SmoothFunction lhs = psi_apply(tensor_product(x, y), f, chart, opts);
  const SmoothFunction rhs = psi_apply(x, psi_apply(y, f, chart, opts), chart, opts);
  double worst = 0;
  for (const auto& p : grid) worst = std::max(worst, std::abs(lhs(p) - rhs(p)));
  return worst;
}

/// n^d grid of admissible points covering the admissible box (periodic directions: [lower, upper)).
inline std::vector<Point> admissible_grid(const Chart& chart, int n) {
  std::vector<Point> out;
  auto coord = [&](std::size_t i, int k) {
    const auto a = static_cast<Eigen::Index>(i);
    if (chart.periodic[i]) return chart.lower[a] + (chart.upper[a] - chart.lower[a]) * (k + 0.5) / n;
    const double lo = chart.lower[a] + chart.margin;
    const double hi = chart.upper[a] - chart.margin;
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (n - 1);
  };
  const std::size_t d = chart.dim();
  std::vector<int> k(d, 0);
  while (true) {
    Point p(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) p[static_cast<Eigen::Index>(i)] = coord(i, k[i]);
    out.push_back(std::move(p));
    std::size_t i = d;
    while (i > 0 && ++k[i - 1] == n) k[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_INVARIANTS_HPP
