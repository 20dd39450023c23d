// Command-line driver: load a config, apply flag overrides, run the sweep and
// write the curve table.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetnet/errors.hpp"
#include "hetnet/harness.hpp"
#include "hetnet/io.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kPlacementInfeasible = 3,
  kIoError = 4,
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier HetNet SLNR beamforming Monte Carlo simulator"};

  std::string config_path;
  std::optional<std::string> scenario;
  std::vector<std::string> strategies;
  std::vector<double> snr;
  std::vector<int> microcells;
  std::optional<double> rho;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string out_path;

  app.add_option("--config", config_path, "flat key: value config file");
  app.add_option("--scenario", scenario,
                 "rate_vs_snr | sinr_vs_density | rate_vs_density | edge_multi_macro");
  app.add_option("--strategy", strategies,
                 "no_coord | full_coord | macro_only | no_inter_tier (repeatable)");
  app.add_option("--snr", snr, "SNR grid in dB (repeatable)");
  app.add_option("--microcells", microcells, "microcell counts (repeatable)");
  app.add_option("--rho", rho, "CSI quality in [0,1]");
  app.add_option("--trials", trials, "Monte Carlo trials per grid point");
  app.add_option("--seed", seed, "base seed");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    auto config = config_path.empty() ? hetnet::load_config_text("")
                                      : hetnet::load_config(config_path);
    auto& e = config.experiment;
    if (scenario) {
      const auto s = hetnet::parse_scenario(*scenario);
      if (!s) throw hetnet::ConfigError("scenario", "unknown scenario '" + *scenario + "'");
      e.scenario = *s;
    }
    if (!strategies.empty()) {
      e.strategies.clear();
      for (const auto& name : strategies) {
        const auto s = hetnet::parse_strategy(name);
        if (!s) throw hetnet::ConfigError("strategy", "unknown strategy '" + name + "'");
        e.strategies.push_back(*s);
      }
    }
    if (!snr.empty()) e.snr_grid_db = snr;
    if (!microcells.empty()) e.microcell_counts = microcells;
    if (rho) e.rho = *rho;
    if (trials) e.trials = *trials;
    if (seed) e.base_seed = *seed;
    hetnet::apply_scenario_defaults(config);
    hetnet::validate(config);

    const auto table = hetnet::run_experiment(config);
    const auto fmt = format == "json" ? hetnet::OutputFormat::Json : hetnet::OutputFormat::Csv;
    if (out_path.empty()) {
      hetnet::write_results(table, fmt, std::cout);
      if (!std::cout) throw hetnet::IoError("write to stdout failed");
    } else {
      hetnet::emit_results(table, fmt, out_path);
    }
  } catch (const hetnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hetnet::PlacementInfeasible& e) {
    std::cerr << "placement infeasible: " << e.what() << '\n';
    return kPlacementInfeasible;
  } catch (const hetnet::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
