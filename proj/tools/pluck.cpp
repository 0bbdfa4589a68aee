#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pluck/commands.hpp"

using namespace pluck;

namespace {

struct ModelArgs {
  std::string family;
  std::size_t rank = 0;
  std::size_t n = 0, p = 0;
  bool is_model() const { return !family.empty(); }
};

// Either --family/--rank or --n/--p.
void add_target(CLI::App* cmd, ModelArgs& a, bool model_only = false, bool sph_only = false) {
  if (!sph_only) {
    cmd->add_option("--family", a.family, "A, B or C");
    cmd->add_option("--rank", a.rank, "rank of G");
  }
  if (!model_only) {
    cmd->add_option("--n", a.n, "sph family: rank of SO(2n+1)");
    cmd->add_option("--p", a.p, "sph family: 2 <= p <= n-2");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard monomial theory and model-variety checks"};
  app.require_subcommand(1);
  Options opt;
  bool json = false, timing = false;
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--max-size", opt.max_size, "size bound for enumerations and modules")->capture_default_str();
  app.add_flag("--json", json, "emit the JSON report");
  app.add_flag("--timing", timing, "include wall-clock duration in the report");

  std::size_t k = 0, n = 0, degree = 0;
  std::string monomial;
  auto* straighten = app.add_subcommand("straighten", "expand a Pluecker monomial in standard tableaux");
  straighten->add_option("--k", k)->required();
  straighten->add_option("--n", n)->required();
  straighten->add_option("--monomial", monomial, "columns like 1,4|2,3")->required();

  std::optional<std::string> schubert;
  bool ridge = false, certify = false;
  auto* enumerate = app.add_subcommand("enumerate", "list standard tableaux of a degree");
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--degree", degree)->required();
  enumerate->add_option("--schubert", schubert, "restrict to columns <= this column");
  enumerate->add_flag("--ridge", ridge, "also drop the minimal column");
  enumerate->add_flag("--certify", certify, "check independence and spanning by evaluation");

  ModelArgs target;
  std::optional<std::string> checks;
  std::optional<std::int64_t> h5_bound;
  auto* vmodel = app.add_subcommand("verify-model", "run the model-variety checks");
  add_target(vmodel, target, true);
  vmodel->add_option("--checks", checks, "comma-separated; default all");
  vmodel->add_option("--h5-bound", h5_bound, "coefficient bound for H5");
  auto* vsph = app.add_subcommand("verify-sph", "run the sph(n,p) checks");
  add_target(vsph, target, false, true);
  vsph->add_option("--checks", checks, "comma-separated; default all");
  vsph->add_option("--h5-bound", h5_bound, "coefficient bound for H5");
  auto* ridge_cmd = app.add_subcommand("ridge", "w-sequence and ridge element");
  add_target(ridge_cmd, target);
  auto* sl3 = app.add_subcommand("sl3", "the SL(3) non-stability example");
  auto* invariants = app.add_subcommand("invariants", "explicit h_i invariants");
  add_target(invariants, target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto need_model = [&] {
      if (target.family.empty() == (target.n == 0)) throw InvalidArgument("give either --family/--rank or --n/--p");
    };
    RunReport report;
    if (*straighten) {
      report = cmd_straighten(k, n, monomial, opt);
    } else if (*enumerate) {
      report = cmd_enumerate(k, n, degree, schubert, ridge, certify, opt);
    } else if (*vmodel) {
      report = cmd_verify_model(parse_family(target.family), target.rank, checks, h5_bound, opt);
    } else if (*vsph) {
      report = cmd_verify_sph(target.n, target.p, checks, h5_bound, opt);
    } else if (*ridge_cmd) {
      need_model();
      report = target.is_model() ? cmd_ridge_model(parse_family(target.family), target.rank, opt)
                                 : cmd_ridge_sph(target.n, target.p, opt);
    } else if (*sl3) {
      report = cmd_sl3(opt);
    } else if (*invariants) {
      need_model();
      report = target.is_model() ? cmd_invariants_model(parse_family(target.family), target.rank, opt)
                                 : cmd_invariants_sph(target.n, target.p, opt);
    }
    Json out = report.to_json();
    if (timing)
      out["durationMs"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (json) std::cout << out.dump(2) << "\n";
    else std::cout << render_text(report);
    return exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}
