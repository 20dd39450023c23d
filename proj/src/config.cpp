#include "hetnet/config.hpp"

#include <cmath>

#include "hetnet/errors.hpp"

namespace hetnet {

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::RateVsSnr: return "rate_vs_snr";
    case Scenario::SinrVsDensity: return "sinr_vs_density";
    case Scenario::RateVsDensity: return "rate_vs_density";
    case Scenario::EdgeMultiMacro: return "edge_multi_macro";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (auto s : {Scenario::RateVsSnr, Scenario::SinrVsDensity, Scenario::RateVsDensity,
                 Scenario::EdgeMultiMacro})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::vector<double> default_snr_grid(Scenario s) {
  if (s != Scenario::RateVsSnr) return {10.0};
  std::vector<double> grid;
  for (int snr = -10; snr <= 40; snr += 5) grid.push_back(snr);
  return grid;
}

std::vector<int> default_microcell_counts(Scenario s) {
  if (s == Scenario::RateVsSnr) return {2};
  std::vector<int> counts;
  for (int c = 1; c <= 10; ++c) counts.push_back(c);
  return counts;
}

double dbm_to_mw(double dbm) noexcept { return std::pow(10.0, dbm / 10.0); }
double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

double NetworkConfig::macro_erp_mw() const { return dbm_to_mw(macro.erp_dbm); }
double NetworkConfig::micro_erp_mw() const { return dbm_to_mw(micro.erp_dbm); }

double NetworkConfig::noise_variance(double snr) const {
  const double gain =
      std::pow(reference_distance_m / snr_reference_distance_m, macro.pathloss_exponent);
  return macro_erp_mw() * gain / db_to_linear(snr);
}

namespace {

void require(bool ok, const char* key, const char* reason) {
  if (!ok) throw ConfigError(key, reason);
}

void validate_tier(const TierParams& t, bool macro) {
  require(t.antennas >= 1, macro ? "macro_antennas" : "micro_antennas", "must be >= 1");
  require(t.users >= 1, macro ? "macro_users" : "micro_users", "must be >= 1");
  require(t.radius_m > 0.0, macro ? "macro_radius_m" : "micro_radius_m", "must be > 0");
  require(t.pathloss_exponent > 2.0, macro ? "pathloss_exponent_uma" : "pathloss_exponent_umi",
          "must be > 2");
  require(std::isfinite(t.erp_dbm), macro ? "macro_erp_dbm" : "micro_erp_dbm", "must be finite");
}

}  // namespace

void validate(const NetworkConfig& c) {
  validate_tier(c.macro, true);
  validate_tier(c.micro, false);
  require(c.shadow_sigma_db >= 0.0, "shadow_sigma_db", "must be >= 0");
  require(c.decorrelation_distance_m > 0.0, "decorrelation_distance_m", "must be > 0");
  require(c.reference_distance_m > 0.0, "reference_distance_m", "must be > 0");
  require(c.reference_distance_m < c.micro.radius_m, "reference_distance_m",
          "must be smaller than the microcell radius");
  require(c.num_macrocells == 1 || c.num_macrocells == 3, "num_macrocells", "must be 1 or 3");
  require(c.macro_isd_m > 0.0, "macro_isd_m", "must be > 0");
  require(c.num_microcells >= 0, "num_microcells", "must be >= 0");
  require(c.edge_inner_radius_m > 0.0 && c.edge_inner_radius_m < c.macro.radius_m,
          "edge_inner_radius_m", "must lie in (0, macro_radius_m)");
  require(c.placement_attempts >= 1, "placement_attempts", "must be >= 1");
  require(c.snr_reference_distance_m >= c.reference_distance_m, "snr_reference_distance_m",
          "must be >= reference_distance_m");
  require(std::isfinite(c.snr_db), "snr_db", "must be finite");

  const auto& e = c.experiment;
  require(!e.strategies.empty(), "strategies", "must not be empty");
  require(e.rho >= 0.0 && e.rho <= 1.0, "rho", "must lie in the range [0,1]");
  require(e.trials >= 1, "trials", "must be >= 1");
  for (double snr : e.snr_grid_db) require(std::isfinite(snr), "snr_grid_db", "must be finite");
  for (int m : e.microcell_counts) require(m >= 0, "microcell_counts", "must be >= 0");
}

}  // namespace hetnet
