#include "hetnet/channel.hpp"

#include <cmath>

#include "hetnet/errors.hpp"

namespace hetnet {

ReceivedPowerModel ReceivedPowerModel::from_config(const NetworkConfig& config) {
  ReceivedPowerModel m;
  m.pathloss_exponent_uma = config.macro.pathloss_exponent;
  m.pathloss_exponent_umi = config.micro.pathloss_exponent;
  m.shadow_sigma_db = config.shadow_sigma_db;
  m.decorrelation_distance_m = config.decorrelation_distance_m;
  m.reference_distance_m = config.reference_distance_m;
  return m;
}

ChannelRealization::ChannelRealization(int num_sites, int num_users)
    : num_sites_(num_sites),
      num_users_(num_users),
      h_(static_cast<std::size_t>(num_sites) * static_cast<std::size_t>(num_users)),
      h_hat_(h_.size()),
      power_(Eigen::MatrixXd::Zero(num_sites, num_users)) {}

double received_power_mw(double erp_mw, int num_users, double distance_m, double gamma,
                         double shadow_linear, double reference_distance_m) {
  if (!(distance_m >= reference_distance_m))
    throw DomainError("received_power: distance below the reference distance");
  if (num_users < 1) throw DomainError("received_power: num_users must be >= 1");
  return erp_mw / num_users * std::pow(reference_distance_m / distance_m, gamma) *
         shadow_linear;
}

double received_power(double erp_dbm, int num_users, double distance_m, double gamma,
                      double shadow_linear, double reference_distance_m) {
  return received_power_mw(dbm_to_mw(erp_dbm), num_users, distance_m, gamma, shadow_linear,
                           reference_distance_m);
}

Eigen::MatrixXd shadowing_correlation_factor(std::span<const Point> positions,
                                             double decorr_m) {
  if (!(decorr_m > 0.0)) throw DomainError("shadowing: decorrelation distance must be > 0");
  const auto n = static_cast<Eigen::Index>(positions.size());
  Eigen::MatrixXd cov(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cov(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double c = std::exp(-distance(positions[static_cast<std::size_t>(i)],
                                          positions[static_cast<std::size_t>(j)]) /
                                decorr_m);
      cov(i, j) = c;
      cov(j, i) = c;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    cov.diagonal().array() += 1e-9;
    llt.compute(cov);
    if (llt.info() != Eigen::Success)
      throw DomainError("shadowing: covariance factorization failed after jitter");
  }
  return llt.matrixL();
}

namespace {

std::vector<double> shadow_factors(const Eigen::MatrixXd& factor, double sigma_db,
                                   RandomStream& rng) {
  std::normal_distribution<double> n01;
  Eigen::VectorXd z(factor.rows());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = n01(rng);
  const Eigen::VectorXd x_db = sigma_db * (factor * z);
  std::vector<double> out(static_cast<std::size_t>(x_db.size()));
  for (Eigen::Index i = 0; i < x_db.size(); ++i)
    out[static_cast<std::size_t>(i)] = std::pow(10.0, x_db(i) / 10.0);
  return out;
}

}  // namespace

std::vector<double> correlated_shadowing(std::span<const Point> positions, double sigma_db,
                                         double decorr_m, RandomStream& rng) {
  return shadow_factors(shadowing_correlation_factor(positions, decorr_m), sigma_db, rng);
}

ChannelRealization draw_channels(const Topology& topology, const ReceivedPowerModel& model,
                                 RandomStream& rng) {
  const int num_sites = topology.num_sites();
  const int num_users = topology.num_users();
  ChannelRealization out(num_sites, num_users);

  std::vector<Point> positions;
  positions.reserve(topology.users.size());
  for (const auto& u : topology.users) positions.push_back(u.position);

  // The correlation structure depends only on receiver positions, so one
  // factorization serves every transmitter.
  const bool shadowed = model.shadow_sigma_db > 0.0 && num_users > 0;
  Eigen::MatrixXd factor;
  if (shadowed) factor = shadowing_correlation_factor(positions, model.decorrelation_distance_m);

  for (int n = 0; n < num_sites; ++n) {
    const auto& site = topology.sites[static_cast<std::size_t>(n)];
    std::vector<double> shadow(static_cast<std::size_t>(num_users), 1.0);
    if (shadowed) shadow = shadow_factors(factor, model.shadow_sigma_db, rng);
    for (int k = 0; k < num_users; ++k) {
      const double p = received_power_mw(site.erp_mw, site.num_users, topology.distances(n, k),
                                         model.exponent_for(site),
                                         shadow[static_cast<std::size_t>(k)],
                                         model.reference_distance_m);
      out.powers()(n, k) = p;
      out.link(n, k) = complex_normal_row(rng, site.num_antennas, p);
      out.estimated_link(n, k) = out.link(n, k);
    }
  }
  return out;
}

ChannelRealization corrupt_csi(const ChannelRealization& realization, double rho,
                               RandomStream& rng) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("corrupt_csi: rho must lie in [0, 1]");
  ChannelRealization out = realization;
  out.set_rho(rho);
  const double error_scale = std::sqrt(1.0 - rho * rho);
  for (int n = 0; n < out.num_sites(); ++n) {
    for (int k = 0; k < out.num_users(); ++k) {
      const auto& h = realization.link(n, k);
      if (rho == 1.0) {
        out.estimated_link(n, k) = h;
        continue;
      }
      const auto xi = complex_normal_row(rng, h.size(), realization.power(n, k));
      out.estimated_link(n, k) = rho * h + error_scale * xi;
    }
  }
  return out;
}

}  // namespace hetnet
