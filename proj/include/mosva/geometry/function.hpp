#ifndef MOSVA_GEOMETRY_FUNCTION_HPP
#define MOSVA_GEOMETRY_FUNCTION_HPP

#include <Eigen/Dense>

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "mosva/geometry/expr.hpp"

namespace mosva {

using Point = Eigen::VectorXd;

/// A complex smooth function on a chart, backed either by an expression (symbolic derivatives
/// available) or by a native callback. Copies share one immutable body and one identity.
class SmoothFunction {
 public:
  using Callback = std::function<Complex(const Point&)>;

  SmoothFunction() : SmoothFunction(Expr(0.0), "0") {}

  explicit SmoothFunction(Expr e, std::string label = {}) {
    auto b = std::make_shared<Body>();
    if (label.empty()) label = e.str();
    b->label = std::move(label);
    b->expr = std::move(e);
    b->id = next_id();
    body_ = std::move(b);
  }

  SmoothFunction(Callback f, std::string label) {
    auto b = std::make_shared<Body>();
    b->label = std::move(label);
    b->callback = std::move(f);
    b->id = next_id();
    body_ = std::move(b);
  }

  Complex operator()(const Point& x) const { return body_->expr ? body_->expr->eval(x) : body_->callback(x); }

  bool is_symbolic() const { return body_->expr.has_value(); }
  const Expr& expr() const { return *body_->expr; }
  const std::string& label() const { return body_->label; }

  /// Creation order of the underlying body; stable within a process run.
  std::uint64_t id() const { return body_->id; }

  /// Analytic partial derivative; only for symbolic functions.
  SmoothFunction partial(int index) const {
    if (!is_symbolic()) throw std::logic_error("SmoothFunction: no analytic derivative for '" + label() + "'");
    return SmoothFunction(body_->expr->diff(index));
  }

  friend bool operator==(const SmoothFunction& a, const SmoothFunction& b) { return a.id() == b.id(); }
  friend auto operator<=>(const SmoothFunction& a, const SmoothFunction& b) { return a.id() <=> b.id(); }

 private:
  struct Body {
    std::string label;
    std::optional<Expr> expr;
    Callback callback;
    std::uint64_t id = 0;
  };

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
  }

  std::shared_ptr<const Body> body_;
};

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_FUNCTION_HPP
