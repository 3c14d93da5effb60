#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reflekta/config.hpp"
#include "reflekta/parser.hpp"
#include "reflekta/rewrite.hpp"
#include "reflekta/saito.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyArgs {
  std::string system;
  std::optional<int> param;
  std::string config_path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> cap;
};

struct ExprArgs {
  std::string system;
  std::optional<int> param;
  std::string expr;
};

std::optional<std::uint64_t> env_seed() {
  const char* value = std::getenv("REFLEKTA_SEED");
  if (!value) return std::nullopt;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw reflekta::ConfigError("REFLEKTA_SEED is not a valid integer");
  }
}

int run_catalog() {
  for (const auto& entry : reflekta::list_systems()) {
    std::cout << entry.name;
    if (entry.param_range)
      std::cout << "  (param " << entry.param_range->first << ".." << entry.param_range->second
                << ")";
    std::cout << "  - " << entry.note << "\n";
  }
  return kExitPass;
}

int run_verify(const VerifyArgs& args) {
  reflekta::RunOptions options;
  std::optional<reflekta::InvariantSystem> system;
  if (!args.config_path.empty()) {
    reflekta::RunConfig config = reflekta::load_config_file(args.config_path);
    system = reflekta::config_to_system(config, "config:" + args.config_path);
    if (config.seed) options.seed = *config.seed;
    if (config.cap) options.conclusion_cap = *config.cap;
  } else {
    system = reflekta::build_system(args.system, args.param);
  }
  // Seed precedence: flag > REFLEKTA_SEED > config file.
  if (auto s = env_seed()) options.seed = *s;
  if (args.seed) options.seed = *args.seed;
  if (args.cap) options.conclusion_cap = *args.cap;

  reflekta::VerificationReport report = reflekta::run_report(*system, options);
  if (args.json)
    std::cout << reflekta::report_to_json(report) << "\n";
  else
    std::cout << reflekta::report_to_text(report);
  return report.passed() ? kExitPass : kExitFail;
}

int run_rewrite(const ExprArgs& args) {
  reflekta::InvariantSystem system = reflekta::build_system(args.system, args.param);
  reflekta::Polynomial p = reflekta::parse_polynomial(args.expr, system.x_space());
  reflekta::Rewrite result = reflekta::express_in_basis(p, system);
  switch (result.status) {
    case reflekta::Rewrite::Status::Success:
      std::cout << reflekta::render(result.expression) << "\n";
      return kExitPass;
    case reflekta::Rewrite::Status::NotInSubring:
      std::cout << "NOT-IN-SUBRING\n";
      return kExitFail;
    default:
      std::cout << "BASIS-DEPENDENT\n";
      return kExitFail;
  }
}

int run_reynolds(const ExprArgs& args) {
  reflekta::InvariantSystem system = reflekta::build_system(args.system, args.param);
  if (!system.group) {
    std::cerr << system.display_name() << " carries no group; reynolds is unavailable\n";
    return kExitFail;
  }
  reflekta::Polynomial p = reflekta::parse_polynomial(args.expr, system.x_space());
  std::cout << reflekta::render(reflekta::reynolds(p, *system.group)) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of gradient-product closure for invariant systems"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in systems");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification pipeline");
  auto* vs = verify_cmd->add_option("--system", verify_args.system, "catalog system name");
  verify_cmd->add_option("--param", verify_args.param, "system parameter");
  auto* vc = verify_cmd->add_option("--config", verify_args.config_path, "config file (TOML)");
  verify_cmd->add_flag("--json", verify_args.json, "emit the JSON report");
  verify_cmd->add_option("--seed", verify_args.seed, "seed for sampled checks");
  verify_cmd->add_option("--cap", verify_args.cap, "degree cap for the conclusion sample");
  vs->excludes(vc);

  ExprArgs rewrite_args;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "express an x-expression in the basis");
  rewrite_cmd->add_option("--system", rewrite_args.system, "catalog system name")->required();
  rewrite_cmd->add_option("--param", rewrite_args.param, "system parameter");
  rewrite_cmd->add_option("--expr", rewrite_args.expr, "polynomial expression")->required();

  ExprArgs reynolds_args;
  auto* reynolds_cmd = app.add_subcommand("reynolds", "group-average an x-expression");
  reynolds_cmd->add_option("--system", reynolds_args.system, "catalog system name")->required();
  reynolds_cmd->add_option("--param", reynolds_args.param, "system parameter");
  reynolds_cmd->add_option("--expr", reynolds_args.expr, "polynomial expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (catalog_cmd->parsed()) return run_catalog();
    if (verify_cmd->parsed()) {
      if (verify_args.system.empty() && verify_args.config_path.empty()) {
        std::cerr << "verify needs --system or --config\n";
        return kExitUsage;
      }
      return run_verify(verify_args);
    }
    if (rewrite_cmd->parsed()) return run_rewrite(rewrite_args);
    if (reynolds_cmd->parsed()) return run_reynolds(reynolds_args);
  } catch (const reflekta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
