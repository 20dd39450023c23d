#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hetnet/strategy.hpp"

namespace hetnet {

/// Per-tier base station parameters. Defaults are the macro tier.
struct TierParams {
  int antennas = 4;
  double erp_dbm = 46.0;
  int users = 6;
  double radius_m = 1000.0;
  double pathloss_exponent = 4.0;
};

inline constexpr TierParams kMacroDefaults{4, 46.0, 6, 1000.0, 4.0};
inline constexpr TierParams kMicroDefaults{2, 30.0, 4, 70.0, 3.5};

enum class Scenario { RateVsSnr, SinrVsDensity, RateVsDensity, EdgeMultiMacro };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name);

/// What to sweep and how many trials to run.
struct ExperimentSpec {
  Scenario scenario = Scenario::RateVsSnr;
  std::vector<CoordinationStrategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::vector<double> snr_grid_db;
  std::vector<int> microcell_counts;
  double rho = 1.0;
  int trials = 10000;
  std::uint64_t base_seed = 1;
  /// Draw one topology per grid point and reuse it for every trial.
  bool fixed_topology = false;
};

/// Scenario-dependent defaults for the sweep grids.
std::vector<double> default_snr_grid(Scenario s);
std::vector<int> default_microcell_counts(Scenario s);

struct NetworkConfig {
  TierParams macro = kMacroDefaults;
  TierParams micro = kMicroDefaults;

  double shadow_sigma_db = 8.0;
  double decorrelation_distance_m = 10.0;
  double reference_distance_m = 1.0;

  int num_macrocells = 1;  // 1 or 3
  double macro_isd_m = 1000.0;
  int num_microcells = 2;
  bool edge_deployment = false;
  double edge_inner_radius_m = 877.0;
  int placement_attempts = 10000;

  /// Distance at which the macro tier's received SNR equals the nominal
  /// "macrocell SNR". Noise variance is P_t,macro * (d0/d_ref)^Gamma_UMa / SNR.
  double snr_reference_distance_m = 1000.0;
  /// SNR used when the network is built outside a sweep.
  double snr_db = 10.0;

  ExperimentSpec experiment;

  double macro_erp_mw() const;
  double micro_erp_mw() const;
  /// Linear noise variance (mW) at the given macrocell SNR.
  double noise_variance(double snr_db) const;
};

/// Throws ConfigError naming the first invalid field.
void validate(const NetworkConfig& config);

double dbm_to_mw(double dbm) noexcept;
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

}  // namespace hetnet
