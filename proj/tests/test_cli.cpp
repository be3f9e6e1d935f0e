#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mosva/cli/suites.hpp"

namespace mosva::cli {
namespace {

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "mosva_" + name; }

/// Runs the CLI binary and returns its exit status.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(MOSVA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

void expect_schema(const json& r) {
  ASSERT_TRUE(r.is_object());
  ASSERT_TRUE(r.at("suite").is_string());
  ASSERT_TRUE(r.at("version").is_string());
  ASSERT_TRUE(r.at("cases").is_array());
  EXPECT_EQ(r.size(), 3u);
  std::string previous;
  for (const auto& c : r.at("cases")) {
    ASSERT_TRUE(c.at("name").is_string());
    const std::string status = c.at("status");
    EXPECT_TRUE(status == "pass" || status == "fail" || status == "error") << status;
    EXPECT_TRUE(c.at("max_error").is_number() || c.at("max_error").is_null());
    EXPECT_TRUE(c.at("details").is_object());
    EXPECT_EQ(c.size(), 4u);
    EXPECT_LE(previous, c.at("name").get<std::string>());
    previous = c.at("name");
  }
}

TEST(Config, RejectsUnknownKeys) {
  SuiteConfig cfg;
  EXPECT_THROW(merge_config(cfg, json{{"suite", "holonomy"}, {"colour", "red"}}), ConfigError);
  EXPECT_THROW(merge_config(cfg, json{{"steps", "many"}}), ConfigError);
  EXPECT_THROW(merge_config(cfg, json::array()), ConfigError);
}

TEST(Config, ReadsEveryKey) {
  SuiteConfig cfg;
  merge_config(cfg, json{{"suite", "laplacian-mode"},
                         {"manifold", "torus"},
                         {"function", "sin(2*pi*x)"},
                         {"dim", 3},
                         {"max_weight", 2},
                         {"K", 5},
                         {"tol", 1e-7},
                         {"steps", 200},
                         {"grid", 4},
                         {"points", {{0.1, 0.7}, {0.5, 0.5}}},
                         {"out", "r.json"}});
  EXPECT_EQ(cfg.suite, "laplacian-mode");
  EXPECT_EQ(cfg.manifold, "torus");
  EXPECT_EQ(*cfg.function, "sin(2*pi*x)");
  EXPECT_EQ(cfg.dim, 3u);
  EXPECT_EQ(*cfg.max_weight, 2);
  EXPECT_EQ(*cfg.order, 5);
  EXPECT_DOUBLE_EQ(*cfg.tol, 1e-7);
  EXPECT_EQ(cfg.steps, 200);
  EXPECT_EQ(cfg.grid, 4);
  ASSERT_EQ(cfg.points.size(), 2u);
  EXPECT_DOUBLE_EQ(cfg.points[0][1], 0.7);
  EXPECT_EQ(cfg.out, "r.json");
  merge_config(cfg, json{{"points", 3}});
  EXPECT_EQ(cfg.point_count, 3);
}

TEST(Config, ValidationNamesTheProblem) {
  SuiteConfig cfg;
  cfg.suite = "laplacian-mode";
  cfg.manifold = "banana";
  try {
    validate(cfg);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown manifold"), std::string::npos);
  }
  cfg.manifold = "s2";
  cfg.function = "cos(theta";
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.function = "cos(x)";
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.function.reset();
  cfg.points = {Eigen::Vector2d(0.01, 1.0)};
  EXPECT_THROW(validate(cfg), ConfigError);
  cfg.points.clear();
  cfg.suite = "everything";
  EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(Suites, LaplacianModeOnTheSphere) {
  SuiteConfig cfg;
  cfg.suite = "laplacian-mode";
  cfg.manifold = "s2";
  cfg.function = "cos(theta)";
  const Report r = run_suite(cfg);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.cases.size(), 11u);
  for (const auto& c : r.cases)
    if (c.max_error) EXPECT_LT(*c.max_error, 1e-6);
  expect_schema(r.to_json());
}

TEST(Suites, AssociativityCaseCountIsTheTripleCount) {
  SuiteConfig cfg;
  cfg.suite = "associativity";
  cfg.max_weight = 1;
  cfg.order = 3;
  const Report r = run_suite(cfg);
  const std::size_t n = fock_basis_up_to(2, 1).size();
  EXPECT_EQ(r.cases.size(), n * n * n);
  EXPECT_TRUE(r.all_pass());
}

TEST(Suites, FailingToleranceFailsTheCase) {
  SuiteConfig cfg;
  cfg.suite = "holonomy";
  cfg.manifold = "s2";
  cfg.tol = 1e-30;
  const Report r = run_suite(cfg);
  EXPECT_FALSE(r.all_pass());
}

TEST(Suites, InvariantDimensions) {
  for (const std::string m : {"s2", "torus", "hyperbolic"}) {
    SuiteConfig cfg;
    cfg.suite = "invariants-dim";
    cfg.manifold = m;
    const Report r = run_suite(cfg);
    EXPECT_TRUE(r.all_pass()) << m << " " << r.to_json().dump();
  }
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("laplacian-check --manifold s2 --function 'cos(theta)'"), 0);
  EXPECT_EQ(run_cli("laplacian-check --manifold banana"), 2);
  EXPECT_EQ(run_cli("laplacian-check --manifold s2 --function 'cos(theta'"), 2);
  EXPECT_EQ(run_cli("holonomy --manifold s2 --tol 1e-30"), 1);
  EXPECT_EQ(run_cli("no-such-command"), 2);
  EXPECT_EQ(run_cli(""), 2);
}

TEST(Binary, ConfigFile) {
  const std::string cfg = temp_path("cfg.json");
  const std::string out = temp_path("cfg_report.json");
  write(cfg, json{{"suite", "laplacian-mode"}, {"manifold", "s2"}, {"function", "cos(theta)"}, {"points", 10}, {"out", out}}
                 .dump());
  EXPECT_EQ(run_cli("run --config " + cfg), 0);
  const json r = json::parse(slurp(out));
  expect_schema(r);
  EXPECT_EQ(r.at("suite"), "laplacian-mode");
  write(cfg, R"({"suite": "laplacian-mode", "manifold": "s2", "extra": true})");
  EXPECT_EQ(run_cli("run --config " + cfg), 2);
  write(cfg, R"({"suite": "holonomy"})");
  EXPECT_EQ(run_cli("laplacian-check --config " + cfg), 2);
  EXPECT_EQ(run_cli("run --config " + temp_path("missing.json")), 2);
}

TEST(Binary, ReportsAreDeterministic) {
  for (const std::string cmd : {"psi-check --manifold torus", "verify-core --max-weight 2", "holonomy --manifold s2"}) {
    const std::string a = temp_path("det_a.json");
    const std::string b = temp_path("det_b.json");
    ASSERT_EQ(run_cli(cmd + " --out " + a), 0) << cmd;
    ASSERT_EQ(run_cli(cmd + " --out " + b), 0) << cmd;
    const std::string ta = slurp(a);
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta, slurp(b)) << cmd;
    expect_schema(json::parse(ta));
  }
}

}  // namespace
}  // namespace mosva::cli
