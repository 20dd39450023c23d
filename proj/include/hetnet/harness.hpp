#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hetnet/config.hpp"
#include "hetnet/strategy.hpp"

namespace hetnet {

struct CurveRow {
  std::string scenario;
  std::string strategy;
  std::string x_name;
  double x_value = 0.0;
  std::string metric;
  double value = 0.0;
  double stderr_ = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

struct CurveTable {
  std::vector<CurveRow> rows;

  /// First row matching all keys; throws std::out_of_range when absent.
  const CurveRow& at(std::string_view scenario, CoordinationStrategy strategy, double x_value,
                     std::string_view metric) const;
  /// Curve of one metric over the grid, in row order.
  std::vector<const CurveRow*> curve(std::string_view scenario, CoordinationStrategy strategy,
                                     std::string_view metric) const;
};

struct PercentileSummary {
  double p10 = 0.0;
  double mean = 0.0;
  double p90 = 0.0;
};

/// Nearest-rank 10th/90th percentiles and arithmetic mean. Throws
/// InsufficientData for fewer than 10 values.
PercentileSummary summarize_percentiles(std::span<const double> values);

/// Mean and standard error (sample std / sqrt(n)).
struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};
MeanStderr mean_stderr(std::span<const double> values);

/// Runs the configured sweep. Topology, fading and CSI errors are drawn per
/// trial from streams keyed on (seed, scenario, microcell count, trial), so
/// every strategy and SNR point sees the same realizations.
CurveTable run_experiment(const NetworkConfig& config);

/// Per-trial values behind one curve point, exposed for seed-isolation and
/// percentile checks.
struct TrialTrace {
  std::vector<double> micro_sum_rate;
  std::vector<double> network_rate;
};
TrialTrace trace_trials(const NetworkConfig& config, CoordinationStrategy strategy,
                        double snr_db, int microcells);

}  // namespace hetnet
