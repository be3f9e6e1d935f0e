#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "mosva/cli/suites.hpp"

namespace {

using mosva::cli::ConfigError;
using mosva::cli::SuiteConfig;

struct Flags {
  std::string config;
  std::string manifold;
  std::string function;
  std::size_t dim = 0;
  int max_weight = -1;
  int order = -1;
  double tol = 0;
  int steps = 0;
  std::string out;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--manifold", f.manifold, "Manifold preset: flat, torus, s2, hyperbolic");
  cmd->add_option("--function", f.function, "Function in the chart coordinates, e.g. cos(theta)");
  cmd->add_option("--dim", f.dim, "Frame dimension for the algebraic suites");
  cmd->add_option("--max-weight", f.max_weight, "Largest Fock weight enumerated");
  cmd->add_option("--order", f.order, "Truncation order K, largest tensor order, or power window");
  cmd->add_option("--tol", f.tol, "Tolerance for numerical cases");
  cmd->add_option("--steps", f.steps, "RK4 steps per curve");
  cmd->add_option("--out", f.out, "Write the JSON report here instead of stdout");
}

SuiteConfig build_config(const std::string& suite, const Flags& f) {
  SuiteConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot open config '" + f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("cannot read config: ") + e.what());
    }
    mosva::cli::merge_config(cfg, j);
  }
  if (!suite.empty()) {
    if (!cfg.suite.empty() && cfg.suite != suite)
      throw ConfigError("config names suite '" + cfg.suite + "' but the command runs '" + suite + "'");
    cfg.suite = suite;
  }
  if (cfg.suite.empty()) throw ConfigError("no suite given");
  if (!f.manifold.empty()) cfg.manifold = f.manifold;
  if (!f.function.empty()) cfg.function = f.function;
  if (f.dim) cfg.dim = f.dim;
  if (f.max_weight >= 0) cfg.max_weight = f.max_weight;
  if (f.order >= 0) cfg.order = f.order;
  if (f.tol > 0) cfg.tol = f.tol;
  if (f.steps > 0) cfg.steps = f.steps;
  if (!f.out.empty()) cfg.out = f.out;
  return cfg;
}

int run(const std::string& suite, const Flags& flags) {
  SuiteConfig cfg;
  mosva::cli::Report report;
  try {
    cfg = build_config(suite, flags);
    report = mosva::cli::run_suite(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    os << text;
  }
  std::size_t passed = 0;
  for (const auto& c : report.cases) passed += c.status == "pass";
  std::cerr << report.suite << ": " << passed << "/" << report.cases.size() << " cases pass\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the tensor-algebra vertex algebra of a Riemannian manifold"};
  app.require_subcommand(1);
  const std::map<std::string, std::string> commands{
      {"verify-core", "core-axioms"},   {"associativity", "associativity"},     {"equivariance", "equivariance"},
      {"holonomy", "holonomy"},         {"psi-check", "psi-homomorphism"},      {"laplacian-check", "laplacian-mode"},
      {"invariants-dim", "invariants-dim"}, {"run", ""}};
  std::map<std::string, Flags> flags;
  for (const auto& [command, suite] : commands) {
    CLI::App* sub = app.add_subcommand(command, suite.empty() ? "Run the suite named in --config" : "Run the " + suite + " suite");
    add_flags(sub, flags[command]);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [command, suite] : commands)
    if (app.got_subcommand(command)) return run(suite, flags[command]);
  return 2;
}
