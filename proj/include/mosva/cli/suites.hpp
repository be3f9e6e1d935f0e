#ifndef MOSVA_CLI_SUITES_HPP
#define MOSVA_CLI_SUITES_HPP

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/associativity.hpp"
#include "mosva/fock.hpp"
#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/covariant.hpp"
#include "mosva/geometry/invariants.hpp"
#include "mosva/geometry/parser.hpp"
#include "mosva/geometry/transport.hpp"
#include "mosva/module_w.hpp"
#include "mosva/symmetry.hpp"
#include "mosva/vertex_operator.hpp"

namespace mosva::cli {

using json = nlohmann::json;

inline constexpr const char* kReportVersion = "1";

/// Invalid configuration: unknown key or suite, unknown manifold, unparsable function, bad value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"associativity",  "core-axioms",      "equivariance", "holonomy",
                                              "invariants-dim", "laplacian-mode", "psi-homomorphism"};
  return names;
}

/// Suite parameters; unset optionals take per-suite defaults.
struct SuiteConfig {
  std::string suite;
  std::string manifold = "s2";
  std::optional<std::string> function;
  std::size_t dim = 2;
  std::optional<int> max_weight;
  std::optional<int> order;
  std::optional<double> tol;
  int steps = 1000;
  int point_count = 10;
  std::vector<Point> points;
  int grid = 5;
  std::string out;
};

/// Reads a JSON config; unknown keys are rejected.
inline void merge_config(SuiteConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "suite") cfg.suite = value.get<std::string>();
      else if (key == "manifold") cfg.manifold = value.get<std::string>();
      else if (key == "function") cfg.function = value.get<std::string>();
      else if (key == "dim") cfg.dim = value.get<std::size_t>();
      else if (key == "max_weight") cfg.max_weight = value.get<int>();
      else if (key == "order" || key == "K") cfg.order = value.get<int>();
      else if (key == "tol") cfg.tol = value.get<double>();
      else if (key == "steps") cfg.steps = value.get<int>();
      else if (key == "grid") cfg.grid = value.get<int>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "points") {
        if (value.is_number_integer()) {
          cfg.point_count = value.get<int>();
        } else {
          cfg.points.clear();
          for (const auto& p : value) {
            const auto coords = p.get<std::vector<double>>();
            cfg.points.push_back(Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size())));
          }
        }
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

inline std::string default_function(const std::string& manifold) {
  if (manifold == "s2") return "cos(theta)";
  if (manifold == "torus") return "sin(2*pi*x)*cos(2*pi*y)";
  if (manifold == "hyperbolic") return "x^2*y+exp(x)";
  return "x^2+y^2";
}

/// Checks everything that can be checked before running; throws ConfigError.
inline void validate(const SuiteConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  Chart chart;
  try {
    chart = make_preset(cfg.manifold);
  } catch (const UnknownManifold& e) {
    throw ConfigError(e.what());
  }
  try {
    if (cfg.function) parse_expression(*cfg.function, chart.coordinates);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("cannot parse function: ") + e.what());
  }
  if (cfg.dim < 1 || cfg.dim > 4) throw ConfigError("dim must lie in [1, 4]");
  if (cfg.max_weight && (*cfg.max_weight < 0 || *cfg.max_weight > 6)) throw ConfigError("max_weight must lie in [0, 6]");
  if (cfg.order && (*cfg.order < 0 || *cfg.order > 8)) throw ConfigError("order must lie in [0, 8]");
  if (cfg.tol && !(*cfg.tol > 0)) throw ConfigError("tol must be positive");
  if (cfg.steps < 1) throw ConfigError("steps must be positive");
  if (cfg.grid < 1 || cfg.grid > 50) throw ConfigError("grid must lie in [1, 50]");
  if (cfg.point_count < 1 || cfg.point_count > 1000) throw ConfigError("points must lie in [1, 1000]");
  for (const auto& p : cfg.points)
    if (!chart.is_admissible(p)) {
      std::ostringstream os;
      os << "point (" << p.transpose() << ") outside the domain of " << chart.name;
      throw ConfigError(os.str());
    }
}

struct Case {
  std::string name;
  std::string status;  // pass | fail | error
  std::optional<double> max_error;
  json details = json::object();
};

struct Report {
  std::string suite;
  std::vector<Case> cases;

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.status == "pass"; });
  }

  json to_json() const {
    std::vector<Case> sorted = cases;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
    json out = {{"suite", suite}, {"version", kReportVersion}, {"cases", json::array()}};
    for (const auto& c : sorted)
      out["cases"].push_back({{"name", c.name},
                              {"status", c.status},
                              {"max_error", c.max_error ? json(*c.max_error) : json(nullptr)},
                              {"details", c.details}});
    return out;
  }
};

namespace detail {

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string padded(std::size_t i, int width = 4) {
  std::string s = std::to_string(i);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

inline Case exact_case(std::string name, bool ok, json details) {
  return {std::move(name), ok ? "pass" : "fail", std::nullopt, std::move(details)};
}

inline Case tolerance_case(std::string name, double error, double tol, json details = json::object()) {
  details["tolerance"] = tol;
  const bool ok = std::isfinite(error) && error < tol;
  return {std::move(name), ok ? "pass" : "fail", error, std::move(details)};
}

/// Runs body; an exception becomes an error case with the message in details.
template <class Body>
Case guarded(const std::string& name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, "error", std::nullopt, {{"message", e.what()}}};
  }
}

inline ScalarMatrix rational_rotation(std::size_t d) {
  ScalarMatrix a = identity_matrix(d);
  if (d >= 2) {
    a[0][0] = Scalar::rational(3, 5);
    a[0][1] = Scalar::rational(-4, 5);
    a[1][0] = Scalar::rational(4, 5);
    a[1][1] = Scalar::rational(3, 5);
  }
  return a;
}

/// Count of +-1 sequences of length m summing to zero.
inline std::size_t balanced_sign_sequences(int m) {
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (2 * __builtin_popcount(mask) == m) ++count;
  return count;
}

inline std::vector<TensorElement> words_up_to(std::size_t d, int order) {
  std::vector<TensorElement> out;
  for (int m = 0; m <= order; ++m)
    for (auto& w : tensor_words(d, m)) out.emplace_back(std::move(w));
  return out;
}

}  // namespace detail

/// Vacuum, creation, D-derivative, grading, non-commutativity and symmetrization checks.
inline Report run_core_axioms(const SuiteConfig& cfg) {
  const int mw = cfg.max_weight.value_or(4);
  const FrameSpace space(cfg.dim);
  const auto basis = fock_basis_up_to(cfg.dim, mw);
  Report r{"core-axioms", {}};

  r.cases.push_back(detail::guarded("vacuum", [&] {
    std::size_t checked = 0;
    for (const auto& vm : basis) {
      const FockElement v(vm);
      const auto y = vertex_operator(vacuum(), v, -mw - 2, mw + 2, space);
      for (int p = -mw - 2; p <= mw + 2; ++p, ++checked)
        if (y.coefficient(p) != (p == 0 ? v : FockElement{}))
          return detail::exact_case("vacuum", false, {{"vector", detail::show(vm)}, {"power", p}});
    }
    return detail::exact_case("vacuum", true, {{"checked", checked}});
  }));

  r.cases.push_back(detail::guarded("creation", [&] {
    std::size_t checked = 0;
    for (const auto& um : basis) {
      const FockElement u(um);
      const int lo = -um.weight() - 2;
      const auto y = vertex_operator(u, vacuum(), lo, 1, space);
      for (int p = lo; p < 0; ++p, ++checked)
        if (!y.coefficient(p).is_zero())
          return detail::exact_case("creation", false, {{"vector", detail::show(um)}, {"power", p}});
      checked += 2;
      if (y.coefficient(0) != u || y.coefficient(1) != translate_D(u))
        return detail::exact_case("creation", false, {{"vector", detail::show(um)}, {"power", 0}});
    }
    return detail::exact_case("creation", true, {{"checked", checked}});
  }));

  r.cases.push_back(detail::guarded("d-derivative", [&] {
    std::size_t checked = 0;
    for (const auto& um : basis) {
      const FockElement u(um);
      const FockElement du = translate_D(u);
      for (const auto& vm : basis) {
        const FockElement v(vm);
        const int lo = -(um.weight() + vm.weight()) - 3;
        const auto yd = vertex_operator(du, v, lo, 1, space);
        const auto y = vertex_operator(u, v, lo + 1, 2, space);
        for (int p = lo; p <= 1; ++p, ++checked)
          if (yd.coefficient(p) != Scalar(p + 1) * y.coefficient(p + 1))
            return detail::exact_case("d-derivative", false,
                                      {{"u", detail::show(um)}, {"v", detail::show(vm)}, {"power", p}});
      }
    }
    return detail::exact_case("d-derivative", true, {{"checked", checked}});
  }));

  r.cases.push_back(detail::guarded("grading", [&] {
    std::size_t checked = 0;
    const auto small = fock_basis_up_to(cfg.dim, std::min(mw, 3));
    for (const auto& um : small)
      for (const auto& vm : small) {
        const int wsum = um.weight() + vm.weight();
        const auto y = vertex_operator(FockElement(um), FockElement(vm), -wsum - 3, 2, space);
        for (int p = -wsum - 3; p <= 2; ++p, ++checked) {
          const auto& c = y.coefficient(p);
          bool ok = p >= -wsum || c.is_zero();
          for (const auto& [k, kc] : c) ok = ok && k.weight() == wsum + p;
          if (!ok)
            return detail::exact_case("grading", false,
                                      {{"u", detail::show(um)}, {"v", detail::show(vm)}, {"power", p}});
        }
      }
    return detail::exact_case("grading", true, {{"checked", checked}});
  }));

  if (cfg.dim >= 2)
    r.cases.push_back(detail::guarded("non-commutativity", [&] {
      const FockElement u = fock_monomial({{0, 1}});
      const FockElement v = fock_monomial({{1, 1}});
      const FockElement uv = mode_coefficient(u, mode_coefficient(v, vacuum(), 0, space), 0, space);
      const FockElement vu = mode_coefficient(v, mode_coefficient(u, vacuum(), 0, space), 0, space);
      const bool ok = uv == fock_monomial({{0, 1}, {1, 1}}) && vu == fock_monomial({{1, 1}, {0, 1}}) && uv != vu;
      return detail::exact_case("non-commutativity", ok, {{"uv", detail::show(uv)}, {"vu", detail::show(vu)}});
    }));

  r.cases.push_back(detail::guarded("symmetrization", [&] {
    std::size_t checked = 0;
    const auto small = fock_basis_up_to(cfg.dim, std::min(mw, 3));
    for (const auto& um : small)
      for (const auto& vm : small) {
        const FockElement u(um), v(vm);
        const int wsum = um.weight() + vm.weight();
        for (int p = -wsum - 1; p <= 1; ++p, ++checked)
          if (symmetrize(mode_coefficient(u, v, p, space)) !=
              sym_mode_coefficient(symmetrize(u), symmetrize(v), p, space))
            return detail::exact_case("symmetrization", false,
                                      {{"u", detail::show(um)}, {"v", detail::show(vm)}, {"power", p}});
      }
    return detail::exact_case("symmetrization", true, {{"checked", checked}});
  }));
  return r;
}

/// Weak associativity on every homogeneous basis triple up to max_weight.
inline Report run_associativity(const SuiteConfig& cfg) {
  const int mw = cfg.max_weight.value_or(2);
  const int K = cfg.order.value_or(4);
  if (K < 1) throw ConfigError("associativity needs order K >= 1");
  const FrameSpace space(cfg.dim);
  const auto basis = fock_basis_up_to(cfg.dim, mw);
  Report r{"associativity", {}};
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const std::string name = detail::padded(a) + "/" + detail::padded(b) + "/" + detail::padded(c);
        r.cases.push_back(detail::guarded(name, [&] {
          const auto rep = check_weak_associativity(FockElement(basis[a]), FockElement(basis[b]),
                                                    FockElement(basis[c]), K, space);
          json details = {{"u", detail::show(basis[a])},
                          {"v", detail::show(basis[b])},
                          {"w", detail::show(basis[c])},
                          {"compared", rep.compared}};
          if (rep.first_mismatch) {
            details["output_weight"] = rep.first_mismatch->output_weight;
            details["powers"] = {rep.first_mismatch->powers.first, rep.first_mismatch->powers.second};
          }
          return detail::exact_case(name, rep.pass, std::move(details));
        }));
      }
  return r;
}

/// A * mode_coefficient(u, v, p) = mode_coefficient(Au, Av, p) for the rotation (3/5, 4/5).
inline Report run_equivariance(const SuiteConfig& cfg) {
  const int mw = cfg.max_weight.value_or(3);
  const int pmax = cfg.order.value_or(6);
  const FrameSpace space(cfg.dim);
  const ScalarMatrix a = detail::rational_rotation(cfg.dim);
  const auto basis = fock_basis_up_to(cfg.dim, mw);
  Report r{"equivariance", {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::string name = detail::padded(i) + "/" + detail::padded(j);
      r.cases.push_back(detail::guarded(name, [&] {
        const FockElement u(basis[i]), v(basis[j]);
        const auto lhs = vertex_operator(u, v, -pmax, pmax, space);
        const auto rhs = vertex_operator(apply_linear_map(a, u), apply_linear_map(a, v), -pmax, pmax, space);
        for (int p = -pmax; p <= pmax; ++p)
          if (apply_linear_map(a, lhs.coefficient(p)) != rhs.coefficient(p))
            return detail::exact_case(name, false,
                                      {{"u", detail::show(basis[i])}, {"v", detail::show(basis[j])}, {"power", p}});
        return detail::exact_case(name, true, {{"u", detail::show(basis[i])}, {"v", detail::show(basis[j])}});
      }));
    }
  return r;
}

/// Orthogonality of sampled holonomy, transport isometry and the closed-form holonomy examples.
inline Report run_holonomy(const SuiteConfig& cfg) {
  const Chart chart = make_preset(cfg.manifold);
  const double tol = cfg.tol.value_or(1e-6);
  Report r{"holonomy", {}};
  const auto loops = loop_family(chart);
  const bool flat = chart.name == "flat" || chart.name == "torus";
  for (std::size_t k = 0; k < loops.size(); ++k) {
    const std::string name = "loop " + detail::padded(k, 2) + " " + loops[k].description;
    r.cases.push_back(detail::guarded(name, [&] {
      const Eigen::MatrixXd a = holonomy_loop(chart, loops[k], cfg.steps);
      const auto id = Eigen::MatrixXd::Identity(a.rows(), a.cols());
      const double orth = (a.transpose() * a - id).cwiseAbs().maxCoeff();
      json details = {{"orthogonality_defect", orth}, {"angle", rotation_angle(a)}};
      if (flat) {
        const double idd = (a - id).cwiseAbs().maxCoeff();
        details["identity_defect"] = idd;
        return detail::tolerance_case(name, std::max(orth, idd), std::min(tol, 1e-9), details);
      }
      return detail::tolerance_case(name, orth, tol, details);
    }));
  }
  r.cases.push_back(detail::guarded("transport isometry", [&] {
    double drift = 0;
    for (const auto& loop : loops)
      for (const auto& seg : loop.segments) {
        const Point a = seg.position(0.0), b = seg.position(1.0);
        const Eigen::MatrixXd e = frame(chart, a);
        const Eigen::MatrixXd v = parallel_transport(chart, seg, e, cfg.steps);
        const Eigen::MatrixXd gram = v.transpose() * chart.metric(b) * v;
        drift = std::max(drift, (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff());
      }
    return detail::tolerance_case("transport isometry", drift, 1e-8);
  }));
  if (chart.name == "s2") {
    r.cases.push_back(detail::guarded("octant triangle", [&] {
      const double angle = rotation_angle(holonomy_loop(chart, sphere_octant_triangle(), cfg.steps));
      return detail::tolerance_case("octant triangle", std::abs(std::abs(angle) - std::numbers::pi / 2), 1e-3,
                                    {{"angle", angle}});
    }));
    r.cases.push_back(detail::guarded("colatitude circle", [&] {
      const double th = 1.0;
      const double expected = std::remainder(2 * std::numbers::pi * (1 - std::cos(th)), 2 * std::numbers::pi);
      const double angle = rotation_angle(holonomy_loop(chart, colatitude_circle(th), cfg.steps));
      return detail::tolerance_case("colatitude circle",
                                    std::abs(std::remainder(angle - expected, 2 * std::numbers::pi)), tol,
                                    {{"angle", angle}, {"expected", expected}});
    }));
  }
  r.cases.push_back(detail::guarded("constant loop", [&] {
    const Eigen::MatrixXd a = holonomy_loop(chart, constant_loop(chart.base_point), cfg.steps);
    return detail::tolerance_case("constant loop", (a - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff(),
                                  1e-12);
  }));
  return r;
}

/// psi(X (x) Y) f = psi(X) psi(Y) f over all frame words X and certified parallel Y.
inline Report run_psi_homomorphism(const SuiteConfig& cfg) {
  const Chart chart = make_preset(cfg.manifold);
  const SmoothFunction f = chart.function(cfg.function.value_or(default_function(cfg.manifold)));
  const int order = cfg.order.value_or(4);
  const bool flat = chart.name == "flat" || chart.name == "torus";
  const double tol = cfg.tol.value_or(flat ? 1e-5 : 1e-4);
  const HolonomySample sample = default_holonomy_sample(chart, cfg.steps);
  const auto grid = cfg.points.empty() ? admissible_grid(chart, cfg.grid) : cfg.points;
  const std::size_t d = chart.dim();

  std::vector<TensorElement> ys = detail::words_up_to(d, 2);
  ys.push_back(metric_tensor_element(d));
  std::vector<TensorElement> parallel;
  for (const auto& y : ys)
    if (certify_parallel(y, chart, sample).parallel) parallel.push_back(y);

  Report r{"psi-homomorphism", {}};
  for (const auto& x : detail::words_up_to(d, 2))
    for (const auto& y : parallel) {
      int ox = 0, oy = 0;
      for (const auto& [w, c] : x) ox = std::max(ox, w.order());
      for (const auto& [w, c] : y) oy = std::max(oy, w.order());
      if (ox + oy > order) continue;
      const std::string name = "X=" + detail::show(x) + " Y=" + detail::show(y);
      r.cases.push_back(detail::guarded(name, [&] {
        const double e = check_psi_homomorphism(x, y, f, chart, sample, grid);
        return detail::tolerance_case(name, e, tol, {{"grid_points", grid.size()}, {"function", f.label()}});
      }));
    }
  return r;
}

/// The Laplacian extracted from the x^-2 mode of Y_W against the geometric Laplacian.
inline Report run_laplacian_mode(const SuiteConfig& cfg) {
  const Chart chart = make_preset(cfg.manifold);
  const SmoothFunction f = chart.function(cfg.function.value_or(default_function(cfg.manifold)));
  const double tol = cfg.tol.value_or(1e-6);
  const HolonomySample sample = default_holonomy_sample(chart, cfg.steps);
  const auto points = cfg.points.empty()
                          ? random_admissible_points(chart, static_cast<std::size_t>(cfg.point_count), 20240611)
                          : cfg.points;
  Report r{"laplacian-mode", {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string name = "point " + detail::padded(i, 3);
    r.cases.push_back(detail::guarded(name, [&] {
      const auto check = laplacian_mode_check(f, points[i], chart, sample);
      std::vector<double> x(points[i].data(), points[i].data() + points[i].size());
      Case c = detail::tolerance_case(name, check.error, tol,
                                      {{"point", x},
                                       {"mode_value", {check.lhs.real(), check.lhs.imag()}},
                                       {"laplacian", {check.rhs.real(), check.rhs.imag()}},
                                       {"mode_identity", check.mode_identity_holds}});
      if (!check.mode_identity_holds) c.status = "fail";
      return c;
    }));
  }
  r.cases.push_back(detail::guarded("mode identity", [&] {
    const FrameSpace space(chart.dim());
    const int K = cfg.max_weight.value_or(4);
    std::size_t checked = 0;
    for (const auto& b : w_basis_up_to(chart.dim(), K, {TensorWord{}, TensorWord{0}}, f)) {
      ++checked;
      if (!mode_identity(WElement(b), K, space).holds())
        return detail::exact_case("mode identity", false, {{"vector", detail::show(b)}});
    }
    return detail::exact_case("mode identity", true, {{"checked", checked}, {"K", K}});
  }));
  return r;
}

/// Invariant-tensor dimensions of the sampled holonomy, against the expected counts.
inline Report run_invariants_dim(const SuiteConfig& cfg) {
  const Chart chart = make_preset(cfg.manifold);
  const int order = cfg.order.value_or(4);
  if (order > kMaxDerivativeOrder) throw ConfigError("invariants-dim supports order <= 4");
  const HolonomySample sample = default_holonomy_sample(chart, cfg.steps);
  const bool flat = chart.name == "flat" || chart.name == "torus";
  Report r{"invariants-dim", {}};
  for (int m = 0; m <= order; ++m) {
    const std::string name = "order " + std::to_string(m);
    r.cases.push_back(detail::guarded(name, [&] {
      const auto basis = invariant_tensors(sample, m);
      const std::size_t expected =
          flat ? mosva::detail::ipow(chart.dim(), m) : detail::balanced_sign_sequences(m);
      double defect = 0;
      for (const auto& t : basis) defect = std::max(defect, holonomy_defect(t, sample));
      Case c = detail::exact_case(name, basis.size() == expected && defect < kFixedTolerance,
                                  {{"dimension", basis.size()}, {"expected", expected}, {"holonomy_defect", defect}});
      return c;
    }));
  }
  if (order >= 2)
    r.cases.push_back(detail::guarded("metric in span", [&] {
      const double dist =
          distance_to_span(to_tensor(metric_tensor_element(chart.dim()), 2, chart.dim()), invariant_tensors(sample, 2));
      return detail::tolerance_case("metric in span", dist, 1e-6);
    }));
  return r;
}

/// Validates the config and runs its suite.
inline Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  if (cfg.suite == "core-axioms") return run_core_axioms(cfg);
  if (cfg.suite == "associativity") return run_associativity(cfg);
  if (cfg.suite == "equivariance") return run_equivariance(cfg);
  if (cfg.suite == "holonomy") return run_holonomy(cfg);
  if (cfg.suite == "psi-homomorphism") return run_psi_homomorphism(cfg);
  if (cfg.suite == "laplacian-mode") return run_laplacian_mode(cfg);
  return run_invariants_dim(cfg);
}

}  // namespace mosva::cli

#endif  // MOSVA_CLI_SUITES_HPP
