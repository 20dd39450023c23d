#include "hetnet/metrics.hpp"

#include <cmath>

#include "hetnet/errors.hpp"

namespace hetnet {

bool interference_present(CoordinationStrategy strategy, const CellSite& source_site,
                          const CellSite& serving_site) noexcept {
  if (strategy != CoordinationStrategy::NoInterTier) return true;
  return source_site.kind == serving_site.kind;
}

SinrTerms sinr_terms(int user, const BeamformerSet& beamformers,
                     const ChannelRealization& channels, const Topology& topology) {
  const auto& rx = topology.users[static_cast<std::size_t>(user)];
  const int n = rx.serving_cell;
  const auto& serving = topology.sites[static_cast<std::size_t>(n)];

  SinrTerms t;
  t.noise = rx.noise_variance;
  const auto& h = channels.link(n, user);
  for (const auto& co : topology.users_of(n)) {
    const double p = std::norm((h * beamformers[co.id]).value());
    if (co.id == user)
      t.signal = p;
    else
      t.intracell += p;
  }
  for (const auto& site : topology.sites) {
    if (site.id == n || !interference_present(beamformers.strategy, site, serving)) continue;
    const auto& g = channels.link(site.id, user);
    for (const auto& q : topology.users_of(site.id))
      t.intercell += std::norm((g * beamformers[q.id]).value());
  }
  return t;
}

double sinr(int user, const BeamformerSet& beamformers, const ChannelRealization& channels,
            const Topology& topology) {
  return sinr_terms(user, beamformers, channels, topology).sinr();
}

std::vector<SinrTerms> evaluate_all(const BeamformerSet& beamformers,
                                    const ChannelRealization& channels,
                                    const Topology& topology) {
  std::vector<SinrTerms> out;
  out.reserve(topology.users.size());
  for (const auto& u : topology.users)
    out.push_back(sinr_terms(u.id, beamformers, channels, topology));
  return out;
}

SinrTable make_sinr_table(std::span<const SinrTerms> terms, const Topology& topology) {
  SinrTable table;
  table.sinr.reserve(terms.size());
  for (const auto& t : terms) table.sinr.push_back(t.sinr());
  for (const auto& u : topology.users) table.serving_cell.push_back(u.serving_cell);
  return table;
}

double cell_sum_rate(const SinrTable& table, int cell) {
  double rate = 0.0;
  for (std::size_t k = 0; k < table.sinr.size(); ++k)
    if (table.serving_cell[k] == cell) rate += std::log2(1.0 + table.sinr[k]);
  return rate;
}

double mean_sum_rate_per_cell(std::span<const SinrTable> trials, int cell) {
  if (trials.empty()) throw InsufficientData("mean_sum_rate_per_cell: no trials");
  double sum = 0.0;
  for (const auto& t : trials) sum += cell_sum_rate(t, cell);
  return sum / static_cast<double>(trials.size());
}

NetworkRate network_sum_rate(std::span<const SinrTable> trials, std::span<const int> cells) {
  if (trials.empty()) throw InsufficientData("network_sum_rate: no trials");
  if (cells.empty()) throw DomainError("network_sum_rate: no cells selected");
  NetworkRate out;
  out.per_trial.reserve(trials.size());
  double sum = 0.0;
  for (const auto& t : trials) {
    double r = 0.0;
    for (int c : cells) r += cell_sum_rate(t, c);
    out.per_trial.push_back(r);
    sum += r;
  }
  out.mean = sum / static_cast<double>(trials.size());
  return out;
}

void MeanSinrAccumulator::add(const SinrTerms& terms) noexcept {
  ++count_;
  signal_ += terms.signal;
  intracell_ += terms.intracell;
  intercell_ += terms.intercell;
  noise_ += terms.noise;
}

double MeanSinrAccumulator::approximation() const {
  if (count_ == 0) throw InsufficientData("mean_sinr_approx: no trials");
  // The common 1/count factor cancels in the ratio.
  return signal_ / (noise_ + intracell_ + intercell_);
}

double mean_sinr_approx(std::span<const SinrTerms> trials) {
  MeanSinrAccumulator acc;
  for (const auto& t : trials) acc.add(t);
  return acc.approximation();
}

double trace_form(const Eigen::VectorXcd& w, const Eigen::RowVectorXcd& x) {
  const Eigen::MatrixXcd a = x.adjoint() * x;
  return (w.adjoint() * a * w).trace().real();
}

double quadratic_form_second_moment(std::span<const double> eigenvalues, double noise_variance,
                                    double link_power) {
  if (!(noise_variance > 0.0)) throw DomainError("noise variance must be > 0");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double lambda : eigenvalues) {
    if (!(lambda >= 0.0)) throw DomainError("eigenvalues must be non-negative");
    const double a = 1.0 / (lambda + noise_variance);
    sum += a;
    sum_sq += a * a;
  }
  return link_power * link_power * (sum * sum + sum_sq);
}

}  // namespace hetnet
