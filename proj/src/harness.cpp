#include "hetnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hetnet/beamforming.hpp"
#include "hetnet/channel.hpp"
#include "hetnet/errors.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/random.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

const CurveRow& CurveTable::at(std::string_view scenario, CoordinationStrategy strategy,
                               double x_value, std::string_view metric) const {
  const auto name = to_string(strategy);
  for (const auto& r : rows)
    if (r.scenario == scenario && r.strategy == name && r.x_value == x_value &&
        r.metric == metric)
      return r;
  throw std::out_of_range("CurveTable: no row for " + std::string(scenario) + "/" +
                          std::string(name) + "/" + std::string(metric) + " at " +
                          std::to_string(x_value));
}

std::vector<const CurveRow*> CurveTable::curve(std::string_view scenario,
                                               CoordinationStrategy strategy,
                                               std::string_view metric) const {
  const auto name = to_string(strategy);
  std::vector<const CurveRow*> out;
  for (const auto& r : rows)
    if (r.scenario == scenario && r.strategy == name && r.metric == metric) out.push_back(&r);
  return out;
}

PercentileSummary summarize_percentiles(std::span<const double> values) {
  if (values.size() < 10)
    throw InsufficientData("summarize_percentiles: need at least 10 values, got " +
                           std::to_string(values.size()));
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto nearest_rank = [&](double pct) {
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
  };
  PercentileSummary s;
  s.p10 = nearest_rank(10.0);
  s.p90 = nearest_rank(90.0);
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

MeanStderr mean_stderr(std::span<const double> values) {
  MeanStderr out;
  if (values.empty()) return out;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

namespace {

/// One scenario family: a network layout swept over its grid.
struct Family {
  std::string label;
  NetworkConfig config;
};

std::vector<Family> families_for(const NetworkConfig& config) {
  const auto scenario = config.experiment.scenario;
  if (scenario != Scenario::EdgeMultiMacro) return {{std::string(to_string(scenario)), config}};
  std::vector<Family> out;
  for (int macros : {1, 3}) {
    Family f{std::string(to_string(scenario)) + "/" + std::to_string(macros) + "_macro", config};
    f.config.num_macrocells = macros;
    f.config.edge_deployment = true;
    out.push_back(std::move(f));
  }
  return out;
}

/// Per-trial observables for one (SNR, strategy, CSI variant).
struct PointAccumulator {
  std::vector<double> macro_cell_rate;
  std::vector<double> micro_cell_rate;
  std::vector<double> micro_sum_rate;
  std::vector<double> network_rate;
  std::vector<double> user_sinr;
  std::vector<double> macro_user_sinr;
  std::vector<double> micro_user_sinr;
  std::vector<MeanSinrAccumulator> per_user;

  void add(std::span<const SinrTerms> terms, const Topology& topo) {
    const auto table = make_sinr_table(terms, topo);
    if (per_user.empty()) per_user.resize(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) per_user[k].add(terms[k]);

    double macro_rate = 0.0, micro_rate = 0.0;
    int macros = 0, micros = 0;
    for (const auto& site : topo.sites) {
      const double r = cell_sum_rate(table, site.id);
      if (site.is_macro()) {
        macro_rate += r;
        ++macros;
      } else {
        micro_rate += r;
        ++micros;
      }
    }
    double all = 0.0, macro_sinr = 0.0, micro_sinr = 0.0;
    int macro_users = 0, micro_users = 0;
    for (const auto& u : topo.users) {
      const double s = table.sinr[static_cast<std::size_t>(u.id)];
      all += s;
      if (topo.sites[static_cast<std::size_t>(u.serving_cell)].is_macro()) {
        macro_sinr += s;
        ++macro_users;
      } else {
        micro_sinr += s;
        ++micro_users;
      }
    }
    macro_cell_rate.push_back(macro_rate / macros);
    network_rate.push_back(macro_rate + micro_rate);
    user_sinr.push_back(all / topo.num_users());
    macro_user_sinr.push_back(macro_sinr / macro_users);
    if (micros > 0) {
      micro_cell_rate.push_back(micro_rate / micros);
      micro_sum_rate.push_back(micro_rate);
      micro_user_sinr.push_back(micro_sinr / micro_users);
    }
  }
};

struct PointKey {
  std::size_t snr;
  std::size_t strategy;
  bool imperfect;
};

/// Accumulators for every SNR, strategy and CSI variant at one microcell count.
struct GridPointResult {
  std::vector<PointAccumulator> acc;
  std::size_t num_strategies = 0;
  std::size_t num_variants = 1;
  Topology layout;  // last drawn topology, for cell membership

  PointAccumulator& at(const PointKey& k) {
    return acc[(k.snr * num_strategies + k.strategy) * num_variants + (k.imperfect ? 1 : 0)];
  }
};

GridPointResult simulate_grid_point(const Family& family, int microcells,
                                    std::span<const double> snrs,
                                    std::span<const CoordinationStrategy> strategies) {
  const auto& spec = family.config.experiment;
  NetworkConfig cfg = family.config;
  cfg.num_microcells = microcells;
  const auto model = ReceivedPowerModel::from_config(cfg);
  const bool imperfect = spec.rho < 1.0;

  GridPointResult result;
  result.num_strategies = strategies.size();
  result.num_variants = imperfect ? 2 : 1;
  result.acc.resize(snrs.size() * result.num_strategies * result.num_variants);

  for (int t = 0; t < spec.trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    StreamKey key{spec.base_seed, family.label, microcells, trial, "topology"};
    if (spec.fixed_topology) key.trial = 0;
    auto topo_rng = make_stream(key);
    Topology topo;
    try {
      topo = build_topology(cfg, topo_rng);
    } catch (const PlacementInfeasible& e) {
      throw PlacementInfeasible(family.label + " at " + std::to_string(microcells) +
                                " microcells, trial " + std::to_string(t) + ": " + e.what());
    }

    auto fading_rng = make_stream({spec.base_seed, family.label, microcells, trial, "fading"});
    auto channels = draw_channels(topo, model, fading_rng);
    if (imperfect) {
      auto csi_rng = make_stream({spec.base_seed, family.label, microcells, trial, "csi"});
      channels = corrupt_csi(channels, spec.rho, csi_rng);
    }

    for (std::size_t s = 0; s < snrs.size(); ++s) {
      topo.set_noise_variance(cfg.noise_variance(snrs[s]));
      for (std::size_t st = 0; st < strategies.size(); ++st) {
        for (std::size_t v = 0; v < result.num_variants; ++v) {
          const bool use_imperfect = v == 1;
          const auto bf = build_beamformers(strategies[st], channels, topo, use_imperfect);
          const auto terms = evaluate_all(bf, channels, topo);
          result.at({s, st, use_imperfect}).add(terms, topo);
        }
      }
    }
    if (t + 1 == spec.trials) result.layout = std::move(topo);
  }
  return result;
}

double to_db_stderr(const MeanStderr& m) {
  return m.mean > 0.0 ? 10.0 / std::numbers::ln10 * m.stderr_ / m.mean : 0.0;
}

struct ApproxSummary {
  double user_sinr = 0.0;
  double macro_user_sinr = 0.0;
  double micro_user_sinr = 0.0;
  double macro_cell_rate = 0.0;
  double micro_cell_rate = 0.0;
};

ApproxSummary summarize_approx(const PointAccumulator& acc, const Topology& layout) {
  ApproxSummary out;
  double macro_rate = 0.0, micro_rate = 0.0;
  int macro_users = 0, micro_users = 0;
  for (const auto& u : layout.users) {
    const double g = acc.per_user[static_cast<std::size_t>(u.id)].approximation();
    out.user_sinr += g;
    if (layout.sites[static_cast<std::size_t>(u.serving_cell)].is_macro()) {
      out.macro_user_sinr += g;
      macro_rate += std::log2(1.0 + g);
      ++macro_users;
    } else {
      out.micro_user_sinr += g;
      micro_rate += std::log2(1.0 + g);
      ++micro_users;
    }
  }
  const auto macros = static_cast<double>(layout.macro_ids().size());
  const auto micros = static_cast<double>(layout.micro_ids().size());
  out.user_sinr /= layout.num_users();
  out.macro_user_sinr /= macro_users;
  out.macro_cell_rate = macro_rate / macros;
  if (micro_users > 0) {
    out.micro_user_sinr /= micro_users;
    out.micro_cell_rate = micro_rate / micros;
  }
  return out;
}

void emit_point(CurveTable& table, const Family& family, CoordinationStrategy strategy,
                std::string_view x_name, double x_value, const PointAccumulator& acc,
                const Topology& layout, std::string_view suffix) {
  const auto& spec = family.config.experiment;
  const auto push = [&](std::string metric, double value, double se) {
    table.rows.push_back(CurveRow{family.label, std::string(to_string(strategy)),
                                  std::string(x_name), x_value, metric + std::string(suffix),
                                  value, se, spec.trials, spec.base_seed});
  };
  const auto push_mean = [&](const char* metric, std::span<const double> v) {
    const auto m = mean_stderr(v);
    push(metric, m.mean, m.stderr_);
  };
  const auto push_db = [&](const char* metric, std::span<const double> v) {
    const auto m = mean_stderr(v);
    push(metric, linear_to_db(m.mean), to_db_stderr(m));
  };
  const bool has_micro = !acc.micro_cell_rate.empty();
  const auto approx = summarize_approx(acc, layout);

  push_mean("macro_cell_rate", acc.macro_cell_rate);
  push("macro_cell_rate_approx", approx.macro_cell_rate, 0.0);
  if (has_micro) {
    push_mean("micro_cell_rate", acc.micro_cell_rate);
    push("micro_cell_rate_approx", approx.micro_cell_rate, 0.0);
    push_mean("micro_sum_rate", acc.micro_sum_rate);
    if (acc.micro_sum_rate.size() >= 10) {
      const auto pct = summarize_percentiles(acc.micro_sum_rate);
      push("micro_sum_rate_p10", pct.p10, 0.0);
      push("micro_sum_rate_p90", pct.p90, 0.0);
    }
  }
  push_mean("network_rate", acc.network_rate);
  push_db("mean_user_sinr_db", acc.user_sinr);
  push("mean_user_sinr_approx_db", linear_to_db(approx.user_sinr), 0.0);
  push_db("macro_user_sinr_db", acc.macro_user_sinr);
  push("macro_user_sinr_approx_db", linear_to_db(approx.macro_user_sinr), 0.0);
  if (has_micro) {
    push_db("micro_user_sinr_db", acc.micro_user_sinr);
    push("micro_user_sinr_approx_db", linear_to_db(approx.micro_user_sinr), 0.0);
  }
}

struct Grid {
  std::vector<double> snrs;
  std::vector<int> counts;
  bool x_is_snr = true;
};

Grid grid_for(const ExperimentSpec& spec) {
  Grid g;
  g.snrs = spec.snr_grid_db.empty() ? default_snr_grid(spec.scenario) : spec.snr_grid_db;
  g.counts = spec.microcell_counts.empty() ? default_microcell_counts(spec.scenario)
                                           : spec.microcell_counts;
  g.x_is_snr = spec.scenario == Scenario::RateVsSnr;
  // Only the x axis is swept; the other dimension is pinned to its first value.
  if (g.x_is_snr)
    g.counts.resize(1);
  else
    g.snrs.resize(1);
  return g;
}

}  // namespace

CurveTable run_experiment(const NetworkConfig& config) {
  validate(config);
  const auto& spec = config.experiment;
  const Grid grid = grid_for(spec);

  CurveTable table;
  for (const auto& family : families_for(config)) {
    for (int count : grid.counts) {
      auto result = simulate_grid_point(family, count, grid.snrs, spec.strategies);
      for (std::size_t s = 0; s < grid.snrs.size(); ++s) {
        const double x = grid.x_is_snr ? grid.snrs[s] : static_cast<double>(count);
        const char* x_name = grid.x_is_snr ? "snr_db" : "microcells";
        for (std::size_t st = 0; st < spec.strategies.size(); ++st) {
          emit_point(table, family, spec.strategies[st], x_name, x, result.at({s, st, false}),
                     result.layout, "");
          if (result.num_variants == 2)
            emit_point(table, family, spec.strategies[st], x_name, x,
                       result.at({s, st, true}), result.layout, "_imperfect");
        }
      }
    }
  }
  return table;
}

TrialTrace trace_trials(const NetworkConfig& config, CoordinationStrategy strategy,
                        double snr_db, int microcells) {
  validate(config);
  const auto family = families_for(config).front();
  const double snrs[] = {snr_db};
  const CoordinationStrategy strategies[] = {strategy};
  auto result = simulate_grid_point(family, microcells, snrs, strategies);
  auto& acc = result.at({0, 0, false});
  return {acc.micro_sum_rate, acc.network_rate};
}

}  // namespace hetnet
