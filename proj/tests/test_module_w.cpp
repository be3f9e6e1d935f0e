#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mosva/associativity.hpp"
#include "mosva/module_w.hpp"
#include "oracles.hpp"

namespace mosva {
namespace {

constexpr double kPi = std::numbers::pi;

Point pt(double a, double b) { return Eigen::Vector2d(a, b); }

Mode mode(const FrameSpace& space, int i, int level) { return Mode::basis(space, i - 1, level); }

/// One shared sphere sample; computing it once keeps the suite quick.
const HolonomySample& sphere_sample() {
  static const HolonomySample s = default_holonomy_sample(round_sphere());
  return s;
}

HolonomySample identity_sample() { return {pt(0, 0), {Eigen::MatrixXd::Identity(2, 2)}, {"identity"}}; }

TEST(WActMode, ZeroModeStartsTheWord) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  EXPECT_EQ(w_act_mode(mode(space, 1, 0), w_generator(f), space), w_basis({}, TensorWord{0}, f));
}

TEST(WActMode, CreationPrepends) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  EXPECT_EQ(w_act_mode(mode(space, 1, -2), w_generator(f), space), w_basis({{0, 2}}, TensorWord{}, f));
}

TEST(WActMode, AnnihilationContractsThenKillsTheBottom) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  const WElement w = w_basis({{0, 1}}, TensorWord{1}, f);
  EXPECT_EQ(w_act_mode(mode(space, 1, 1), w, space), w_basis({}, TensorWord{1}, f));
  EXPECT_TRUE(w_act_mode(mode(space, 1, 1), w_generator(f), space).is_zero());
  EXPECT_TRUE(w_act_mode(mode(space, 2, 1), w, space).is_zero());
}

TEST(WActMode, LaterZeroModesStandLeft) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  // The operator word e1(0) e2(0): e2(0) acts first.
  const WElement w = w_act_mode(mode(space, 1, 0), w_act_mode(mode(space, 2, 0), w_generator(f), space), space);
  EXPECT_EQ(w, w_basis({}, TensorWord{0, 1}, f));
}

TEST(WActMode, ZeroModesCommuteWithNonzeroModes) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("sin(phi)");
  const WElement w = w_basis({{0, 1}, {1, 2}, {0, 2}}, TensorWord{1}, f);
  for (int level : {-2, -1, 1, 2})
    for (int i : {1, 2}) {
      const WElement a = w_act_mode(mode(space, 2, 0), w_act_mode(mode(space, i, level), w, space), space);
      const WElement b = w_act_mode(mode(space, i, level), w_act_mode(mode(space, 2, 0), w, space), space);
      EXPECT_EQ(a, b) << i << " " << level;
    }
}

TEST(WActMode, LinearInTheModeVector) {
  FrameSpace space(2);
  const SmoothFunction f = flat_plane().function("x");
  const Mode m{{Scalar(2), Scalar::rational(-1, 3)}, 0};
  WElement expected = w_basis({}, TensorWord{0}, f) * Scalar(2);
  expected.add(w_basis({}, TensorWord{1}, f), Scalar::rational(-1, 3));
  EXPECT_EQ(w_act_mode(m, w_generator(f), space), expected);
}

TEST(VertexOperatorW, VacuumIsIdentity) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  const WElement w = w_basis({{1, 2}}, TensorWord{0, 1}, f);
  const WLaurent y = vertex_operator_W(vacuum(), w, -3, 3, space, sphere_sample());
  for (int p = -3; p <= 3; ++p) EXPECT_EQ(y.coefficient(p), p == 0 ? w : WElement{}) << p;
}

TEST(VertexOperatorW, SingleCreationGivesZeroModeAtFirstPole) {
  FrameSpace space(2);
  const SmoothFunction f = flat_torus().function("sin(2*pi*x)");
  const WLaurent y =
      vertex_operator_W(fock_monomial({{0, 1}}), w_generator(f), -1, 1, space, identity_sample());
  EXPECT_EQ(y.coefficient(-1), w_basis({}, TensorWord{0}, f));
  EXPECT_EQ(y.coefficient(0), w_basis({{0, 1}}, TensorWord{}, f));
  EXPECT_EQ(y.coefficient(1), w_basis({{0, 2}}, TensorWord{}, f));
}

TEST(VertexOperatorW, StrictModeRefusesNonInvariantVectors) {
  FrameSpace space(2);
  const WElement w = w_generator(round_sphere().function("cos(theta)"));
  EXPECT_THROW(vertex_operator_W(fock_monomial({{0, 1}}), w, -2, 0, space, sphere_sample()), NotInvariant);
  EXPECT_NO_THROW(vertex_operator_W(fock_monomial({{0, 1}}), w, -2, 0, space, sphere_sample(), false));
  EXPECT_NO_THROW(vertex_operator_W(metric_inverse_element(1, 2, space), w, -2, 0, space, sphere_sample()));
  EXPECT_LT(fock_holonomy_defect(metric_inverse_element(2, 1, space), sphere_sample()), 1e-12);
}

TEST(VertexOperatorW, RestrictsToTheFockVertexOperator) {
  FrameSpace space(2);
  const WModule module(space);
  const auto basis = fock_basis_up_to(2, 4);
  for (const auto& u : fock_basis_up_to(2, 2))
    for (const auto& v : basis) {
      if (u.weight() + v.weight() > 4) continue;
      const FockElement uu(u), vv(v);
      const WLaurent yw = vertex_operator(uu, embed(vv), -6, 6, module);
      const FockLaurent yf = vertex_operator(uu, vv, -6, 6, space);
      for (int p = -6; p <= 6; ++p) ASSERT_EQ(fock_part(yw.coefficient(p)), yf.coefficient(p)) << u << " " << v << " " << p;
    }
}

TEST(VertexOperatorW, AgreesWithPbwOracleWhenWordsAreIgnored) {
  // The Fock part of a W coefficient only sees modes that never reach zero level.
  FrameSpace space(2);
  const FockElement u = fock_monomial({{0, 1}, {1, 2}});
  const FockElement v = fock_monomial({{1, 1}, {0, 1}});
  for (int p = -5; p <= 2; ++p)
    EXPECT_EQ(fock_part(mode_coefficient(u, embed(v), p, WModule(space))),
              oracle::mode_coefficient_brute(u, v, p, space, 8))
        << p;
}

TEST(VertexOperatorW, LinearInBothArguments) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  const SmoothFunction g = round_sphere().function("sin(phi)");
  FockElement u = fock_monomial({{0, 1}, {1, 1}});
  u.add(FockMonomial{{1, 2}}, Scalar::rational(3, 2));
  WElement w = w_basis({{0, 1}}, TensorWord{}, f);
  w.add(w_basis({}, TensorWord{1}, g), Scalar(-2));
  const WModule module(space);
  for (int p = -4; p <= 1; ++p) {
    WElement split;
    for (const auto& [um, uc] : u)
      for (const auto& [wb, wc] : w)
        split.add(mode_coefficient(FockElement(um), WElement(wb), p, module), uc * wc);
    EXPECT_EQ(mode_coefficient(u, w, p, module), split) << p;
  }
}

TEST(ModuleWeakAssociativity, SymbolicBottomWords) {
  FrameSpace space(2);
  const WModule module(space);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  const WElement w = w_generator(f);
  std::size_t triples = 0;
  for (const auto& u : fock_basis_up_to(2, 2))
    for (const auto& v : fock_basis_up_to(2, 2)) {
      const auto report = check_weak_associativity(FockElement(u), FockElement(v), w, 4, module);
      ASSERT_TRUE(report.pass) << u << " " << v;
      ++triples;
    }
  EXPECT_EQ(triples, 81u);
}

TEST(ModuleWeakAssociativity, NontrivialBottomVector) {
  FrameSpace space(2);
  const WModule module(space);
  const SmoothFunction f = flat_torus().function("sin(2*pi*x)");
  const WElement w = w_basis({{1, 1}}, TensorWord{0}, f);
  for (const auto& u : fock_basis_up_to(2, 2))
    for (const auto& v : fock_basis(2, 1))
      ASSERT_TRUE(check_weak_associativity(FockElement(u), FockElement(v), w, 3, module).pass) << u << " " << v;
}

TEST(ModeIdentity, AllBasisVectorsUpToWeightSix) {
  FrameSpace space(2);
  const SmoothFunction f = round_sphere().function("cos(theta)");
  const std::vector<TensorWord> words{TensorWord{}, TensorWord{1}, TensorWord{0, 1}};
  const auto basis = w_basis_up_to(2, 6, words, f);
  ASSERT_EQ(basis.size(), 729u * 3);
  for (const auto& b : basis) {
    const ModeIdentity id = mode_identity(WElement(b), 6, space);
    ASSERT_TRUE(id.holds()) << b << "\n" << id.field << "\n" << id.modes;
  }
}

TEST(ModeIdentity, TruncationBelowTheWeightFails) {
  FrameSpace space(2);
  const WElement w = w_basis({{0, 3}}, TensorWord{}, unit_function());
  EXPECT_FALSE(mode_identity(w, 2, space).holds());
  EXPECT_TRUE(mode_identity(w, 3, space).holds());
}

TEST(ReduceBottom, MetricWordBecomesMinusLaplacian) {
  const Chart c = round_sphere();
  const SmoothFunction f = c.function("cos(theta)");
  WElement w = w_basis({}, TensorWord{0, 0}, f);
  w.add(w_basis({}, TensorWord{1, 1}, f), Scalar(1));
  const Reduction r = reduce_bottom(w, sphere_sample(), c);
  ASSERT_TRUE(r.complete());
  ASSERT_EQ(r.element.size(), 1u);
  const Point x = pt(kPi / 3, 0.4);
  EXPECT_NEAR(evaluate_W(r.element, x, c).real(), 1.0, 1e-12);
  EXPECT_NEAR(evaluate_W(r.element, x, c).real(), -laplacian(f, c, x).real(), 1e-12);
}

TEST(ReduceBottom, EmptyWordUnchanged) {
  const Chart c = round_sphere();
  const WElement w = w_generator(c.function("cos(theta)")) + w_basis({{0, 1}}, TensorWord{}, c.function("sin(phi)"));
  const Reduction r = reduce_bottom(w, sphere_sample(), c);
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.element, w);
}

TEST(ReduceBottom, NonParallelWordIsFlagged) {
  const Chart c = round_sphere();
  const WElement w = w_basis({}, TensorWord{0}, c.function("cos(theta)"));
  const Reduction r = reduce_bottom(w, sphere_sample(), c);
  EXPECT_EQ(r.element, w);
  ASSERT_EQ(r.irreducible.size(), 1u);
  EXPECT_EQ(r.irreducible.front(), w.begin()->first);
  EXPECT_THROW(evaluate_W(r.element, pt(1, 1), c), UnreducedElement);
}

TEST(ReduceBottom, PartialReductionKeepsTheRest) {
  const Chart c = round_sphere();
  const SmoothFunction f = c.function("cos(theta)");
  WElement w = w_basis({}, TensorWord{0}, f);
  w.add(w_generator(f), Scalar(5));
  const Reduction r = reduce_bottom(w, sphere_sample(), c);
  EXPECT_EQ(r.irreducible.size(), 1u);
  EXPECT_EQ(r.element, w);
}

TEST(ReduceBottom, FlatWordsReduceOneByOne) {
  // On the torus every word is parallel; reduction equals applying psi directly.
  const Chart c = flat_torus();
  const HolonomySample s = default_holonomy_sample(c);
  const SmoothFunction f = c.function("sin(2*pi*x)*cos(2*pi*y)");
  WElement w = w_basis({}, TensorWord{0, 1}, f);
  w.add(w_basis({}, TensorWord{1}, f), Scalar::rational(1, 2));
  const Reduction r = reduce_bottom(w, s, c);
  ASSERT_TRUE(r.complete());
  for (const auto& x : admissible_grid(c, 4)) {
    // Independent recomputation: i^2 d_x d_y f + (i/2) d_y f.
    const double a = 2 * kPi * x[0], b = 2 * kPi * x[1];
    const Complex direct = -(-4 * kPi * kPi * std::cos(a) * std::sin(b)) + Complex(0, 0.5) * (-2 * kPi * std::sin(a) * std::sin(b));
    EXPECT_LT(std::abs(evaluate_W(r.element, x, c) - direct), 1e-8);
  }
}

TEST(ReduceBottom, SoundOnTheSphere) {
  const Chart c = round_sphere();
  const SmoothFunction f = c.function("cos(theta)*sin(phi)+sin(theta)^2");
  WElement w = w_basis({}, TensorWord{0, 0}, f);
  w.add(w_basis({}, TensorWord{1, 1}, f), Scalar(1));
  const Reduction r = reduce_bottom(w, sphere_sample(), c);
  ASSERT_TRUE(r.complete());
  for (const auto& x : admissible_grid(c, 4)) {
    const Tensor h = nabla_m_f(f, 2, c, x, {false, 0.0});
    const Complex direct = -(h[std::vector<int>{0, 0}] + h[std::vector<int>{1, 1}]);
    EXPECT_LT(std::abs(evaluate_W(r.element, x, c) - direct), 1e-6);
  }
}

TEST(EvaluateW, LinearOverReducedTerms) {
  const Chart c = flat_plane();
  const SmoothFunction f = c.function("x^2");
  const SmoothFunction g = c.function("y");
  WElement w = w_generator(f);
  w.add(w_generator(g), Scalar::rational(-1, 4));
  EXPECT_NEAR(evaluate_W(w, pt(3, 2), c).real(), 9 - 0.5, 1e-14);
  EXPECT_THROW(evaluate_W(w_basis({{0, 1}}, TensorWord{}, f), pt(0, 0), c), UnreducedElement);
}

TEST(EvaluateW, ErrorNamesTheTerm) {
  const Chart c = flat_plane();
  try {
    evaluate_W(w_basis({}, TensorWord{1}, c.function("x")), pt(0, 0), c);
    FAIL();
  } catch (const UnreducedElement& e) {
    EXPECT_NE(std::string(e.what()).find("e2"), std::string::npos) << e.what();
  }
}

TEST(LaplacianMode, SphereEigenfunction) {
  const Chart c = round_sphere();
  const auto check = laplacian_mode_check(c.function("cos(theta)"), pt(kPi / 3, 0.4), c, sphere_sample());
  EXPECT_NEAR(check.lhs.real(), -1.0, 1e-6);
  EXPECT_NEAR(check.rhs.real(), -1.0, 1e-6);
  EXPECT_LT(check.error, 1e-6);
  EXPECT_TRUE(check.mode_identity_holds);
}

TEST(LaplacianMode, FlatAndTorus) {
  const Chart plane = flat_plane();
  const auto a = laplacian_mode_check(plane.function("x^2+y^2"), pt(0.3, -1.0), plane, default_holonomy_sample(plane));
  EXPECT_NEAR(a.lhs.real(), 4.0, 1e-9);
  const Chart t = flat_torus();
  const auto b = laplacian_mode_check(t.function("sin(2*pi*x)"), pt(0.1, 0.7), t, default_holonomy_sample(t));
  EXPECT_NEAR(b.lhs.real(), -4 * kPi * kPi * std::sin(0.2 * kPi), 1e-6);
  EXPECT_LT(b.error, 1e-6);
}

}  // namespace
}  // namespace mosva
