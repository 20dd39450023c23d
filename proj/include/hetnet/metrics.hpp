#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hetnet/beamforming.hpp"
#include "hetnet/channel.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

/// Received power split of one user's SINR.
struct SinrTerms {
  double signal = 0.0;
  double intracell = 0.0;
  double intercell = 0.0;
  double noise = 0.0;

  double sinr() const noexcept { return signal / (noise + intracell + intercell); }
};

/// Per-user SINR of one trial, with the serving cell of every user.
struct SinrTable {
  std::vector<double> sinr;
  std::vector<int> serving_cell;
};

/// True whether interference from `source_site` reaches users of
/// `serving_site` under the strategy. Cross-tier links are absent only in the
/// no-inter-tier case.
bool interference_present(CoordinationStrategy strategy, const CellSite& source_site,
                          const CellSite& serving_site) noexcept;

/// Signal, intracell and intercell powers at `user`, evaluated on the true
/// channels.
SinrTerms sinr_terms(int user, const BeamformerSet& beamformers,
                     const ChannelRealization& channels, const Topology& topology);

double sinr(int user, const BeamformerSet& beamformers, const ChannelRealization& channels,
            const Topology& topology);

/// SINR terms for every user at once.
std::vector<SinrTerms> evaluate_all(const BeamformerSet& beamformers,
                                    const ChannelRealization& channels,
                                    const Topology& topology);

SinrTable make_sinr_table(std::span<const SinrTerms> terms, const Topology& topology);

/// sum_k log2(1 + sinr_k) over the users of `cell` in one trial.
double cell_sum_rate(const SinrTable& table, int cell);

/// Monte Carlo mean of the per-cell sum rate.
double mean_sum_rate_per_cell(std::span<const SinrTable> trials, int cell);

struct NetworkRate {
  double mean = 0.0;
  std::vector<double> per_trial;
};

/// Monte Carlo mean of the sum rate over the selected cells, with the
/// per-trial values kept for percentiles.
NetworkRate network_sum_rate(std::span<const SinrTable> trials, std::span<const int> cells);

/// Running means of the SINR terms of one user, for the ratio-of-means
/// approximation of the mean SINR.
class MeanSinrAccumulator {
 public:
  void add(const SinrTerms& terms) noexcept;
  std::size_t count() const noexcept { return count_; }
  /// E[signal] / (E[noise] + E[intracell] + E[intercell]).
  double approximation() const;

 private:
  std::size_t count_ = 0;
  double signal_ = 0.0;
  double intracell_ = 0.0;
  double intercell_ = 0.0;
  double noise_ = 0.0;
};

/// Ratio-of-means approximation over a set of trials for one user.
double mean_sinr_approx(std::span<const SinrTerms> trials);

/// Quadratic form w^H (x^H x) w written as a trace; equals |x w|^2.
double trace_form(const Eigen::VectorXcd& w, const Eigen::RowVectorXcd& x);

/// Closed-form E[|h (L^H L + sigma^2 I)^{-1} h^H|^2] for h with i.i.d.
/// CN(0, P) entries, given the eigenvalues of L^H L.
double quadratic_form_second_moment(std::span<const double> eigenvalues, double noise_variance,
                          double link_power);

}  // namespace hetnet
