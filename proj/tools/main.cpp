// edlab: numerical laboratory for quantum error-disturbance relations.
//
// Verbs:
//   report   evaluate every bound for one configured model
//   sweep    theta sweep over a scenario, CSV output
//   frontier boundary curves in the epsilon-eta plane, CSV output
//   verify   randomized soundness suite over random models
//
// Exit codes: 0 ok, 1 usage/config error, 2 verification violations,
// 3 IO error.

#include "edlab/csv.hpp"
#include "edlab/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace {

int run_report(const std::string& config_path, std::optional<std::uint64_t> seed_override) {
  edlab::ScenarioConfig config = edlab::load_config(config_path);
  if (seed_override) {
    config.seed = *seed_override;
    if (config.witness.kind == edlab::WitnessStrategy::Kind::Sampled) {
      config.witness.seed = *seed_override;
    }
  }
  const double theta = config.theta.value_or(0.0);
  const edlab::MeasurementModel model = edlab::config_model(config, theta);
  const edlab::BoundReport r = edlab::bound_report(model, config.witness);

  std::printf("theta            %.12g\n", theta);
  std::printf("epsilon_a        %.12g\n", r.stats.epsilon_a);
  std::printf("eta_b            %.12g\n", r.stats.eta_b);
  std::printf("delta_a          %.12g\n", r.stats.delta_a);
  std::printf("delta_b          %.12g\n", r.stats.delta_b);
  std::printf("c_ab             %.12g\n", r.stats.c_ab);
  std::printf("robertson_rhs    %.12g\n", r.robertson_rhs);
  std::printf("ozawa_lhs        %.12g\n", r.ozawa_lhs);
  std::printf("branciard_lhs    %.12g\n", r.branciard_lhs);
  std::printf("branciard_tight  %.12g%s\n", r.branciard_tight_lhs,
              r.tight_substitution_clamped ? " (eta clamped at 2)" : "");
  std::printf("thm1_sum         %.12g\n", r.thm1_sum);
  std::printf("thm1_rhs         %.12g\n", r.thm1_rhs);
  std::printf("eq21_rhs         %.12g\n", r.eq21_rhs);
  if (r.l_new2) {
    std::printf("l_new2           %.12g\n", *r.l_new2);
  } else {
    std::printf("l_new2           absent (%s)\n", r.l_new2_absent_reason.c_str());
  }
  for (const edlab::InequalityCheck& c : r.checks) {
    std::printf("check %-16s lhs %.12g rhs %.12g slack %.3g %s\n", c.name.c_str(), c.lhs,
                c.rhs, c.slack, c.satisfied ? "ok" : "VIOLATED");
  }
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
  const edlab::ScenarioConfig config = edlab::load_config(config_path);
  const std::vector<edlab::SweepRecord> records = edlab::sweep(config);
  edlab::emit_csv(records, out_path);
  std::printf("rows             %zu\n", records.size());
  std::printf("fraction_tighter %.12g\n", edlab::fraction_tighter(records));
  std::printf("output           %s\n", out_path.c_str());
  return 0;
}

int run_frontier(double cab, double da, double db, double new_rhs, int grid,
                 const std::string& out_path) {
  const auto curves = edlab::frontier(cab, da, db, new_rhs, grid);
  edlab::emit_csv(curves, out_path);
  for (const edlab::FrontierCurve& c : curves) {
    std::printf("curve %-10s %zu points\n", c.name.c_str(), c.points.size());
  }
  std::printf("output           %s\n", out_path.c_str());
  return 0;
}

int run_verify(std::uint64_t seed, int trials) {
  const edlab::VerifyResult result = edlab::verify(seed, trials);
  std::printf("trials           %d\n", result.trials);
  std::printf("violations       %zu\n", result.violations.size());
  for (const edlab::Violation& v : result.violations) {
    std::printf("VIOLATION %s trial %llu lhs %.17g rhs %.17g slack %.3g\n", v.property.c_str(),
                static_cast<unsigned long long>(v.trial), v.lhs, v.rhs, v.slack);
    std::printf("replay config:\n%s", v.model_config.c_str());
  }
  return result.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error-disturbance inequality laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed_override;
  CLI::App* report = app.add_subcommand("report", "evaluate every bound for one model");
  report->add_option("--config", config_path, "config file path")->required();
  report->add_option("--seed", seed_override, "override the config seed");

  CLI::App* sweep = app.add_subcommand("sweep", "theta sweep, CSV output");
  sweep->add_option("--config", config_path, "config file path")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  double cab = 1.0, da = 1.0, db = 1.0, new_rhs = 2.0;
  int grid = 200;
  CLI::App* frontier = app.add_subcommand("frontier", "boundary curves, CSV output");
  frontier->add_option("--cab", cab, "commutator bound C_AB")->required();
  frontier->add_option("--da", da, "standard deviation of A")->required();
  frontier->add_option("--db", db, "standard deviation of B")->required();
  frontier->add_option("--new-rhs", new_rhs, "sum-bound value for the new circle");
  frontier->add_option("--grid", grid, "epsilon grid points per curve");
  frontier->add_option("--out", out_path, "output CSV path")->required();

  std::uint64_t seed = 0;
  int trials = 1000;
  CLI::App* verify = app.add_subcommand("verify", "randomized soundness suite");
  verify->add_option("--trials", trials, "number of random models");
  verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) return run_report(config_path, seed_override);
    if (sweep->parsed()) return run_sweep(config_path, out_path);
    if (frontier->parsed()) return run_frontier(cab, da, db, new_rhs, grid, out_path);
    if (verify->parsed()) return run_verify(seed, trials);
  } catch (const edlab::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const edlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
