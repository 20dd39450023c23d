#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hetnet/config.hpp"
#include "hetnet/random.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

/// Large-scale propagation parameters shared by every link.
struct ReceivedPowerModel {
  double pathloss_exponent_uma = 4.0;
  double pathloss_exponent_umi = 3.5;
  double shadow_sigma_db = 8.0;
  double decorrelation_distance_m = 10.0;
  double reference_distance_m = 1.0;

  static ReceivedPowerModel from_config(const NetworkConfig& config);
  double exponent_for(const CellSite& site) const noexcept {
    return site.is_macro() ? pathloss_exponent_uma : pathloss_exponent_umi;
  }
};

/// Which copy of the channels a consumer reads.
enum class CsiSource { Perfect, Estimated };

/// Small-scale channels of one Monte Carlo trial. Link (n, k) is the 1 x Z_n
/// channel from site n to user k; it is the desired channel when n serves k
/// and an intercell interfering channel otherwise.
class ChannelRealization {
 public:
  ChannelRealization() = default;
  ChannelRealization(int num_sites, int num_users);

  int num_sites() const noexcept { return num_sites_; }
  int num_users() const noexcept { return num_users_; }

  const Eigen::RowVectorXcd& link(int site, int user) const { return h_[index(site, user)]; }
  Eigen::RowVectorXcd& link(int site, int user) { return h_[index(site, user)]; }
  const Eigen::RowVectorXcd& estimated_link(int site, int user) const {
    return h_hat_[index(site, user)];
  }
  Eigen::RowVectorXcd& estimated_link(int site, int user) { return h_hat_[index(site, user)]; }
  const Eigen::RowVectorXcd& link(int site, int user, CsiSource source) const {
    return source == CsiSource::Perfect ? link(site, user) : estimated_link(site, user);
  }

  /// Linear received power P_{n,k} in mW.
  double power(int site, int user) const { return power_(site, user); }
  Eigen::MatrixXd& powers() noexcept { return power_; }
  const Eigen::MatrixXd& powers() const noexcept { return power_; }

  double rho() const noexcept { return rho_; }
  void set_rho(double rho) noexcept { rho_ = rho; }

 private:
  std::size_t index(int site, int user) const {
    return static_cast<std::size_t>(site) * static_cast<std::size_t>(num_users_) +
           static_cast<std::size_t>(user);
  }

  int num_sites_ = 0;
  int num_users_ = 0;
  std::vector<Eigen::RowVectorXcd> h_;
  std::vector<Eigen::RowVectorXcd> h_hat_;
  Eigen::MatrixXd power_;
  double rho_ = 1.0;
};

/// (P_t / k) * (d0 / d)^gamma * shadow, all linear. Throws DomainError when
/// distance_m < reference_distance_m or num_users < 1.
double received_power(double erp_dbm, int num_users, double distance_m, double gamma,
                      double shadow_linear, double reference_distance_m = 1.0);

/// Same as received_power with the ERP already in mW.
double received_power_mw(double erp_mw, int num_users, double distance_m, double gamma,
                         double shadow_linear, double reference_distance_m = 1.0);

/// Lower Cholesky factor of the Gudmundson covariance
/// exp(-|p_i - p_j| / decorr_m) (unit variance). Adds 1e-9 to the diagonal
/// and retries when the plain factorization fails (coincident points).
Eigen::MatrixXd shadowing_correlation_factor(std::span<const Point> positions,
                                             double decorr_m);

/// Jointly Gaussian dB-domain shadowing with covariance
/// sigma_db^2 * exp(-d / decorr_m), returned as linear factors 10^(X/10).
std::vector<double> correlated_shadowing(std::span<const Point> positions, double sigma_db,
                                         double decorr_m, RandomStream& rng);

/// Draws received powers and i.i.d. CN(0, P_{n,k}) fading for every
/// (site, user) pair. Shadowing is independent per transmitter and
/// correlated across that transmitter's receivers. h_hat is set equal to h.
ChannelRealization draw_channels(const Topology& topology, const ReceivedPowerModel& model,
                                 RandomStream& rng);

/// h_hat = rho * h + sqrt(1 - rho^2) * Xi with Xi ~ CN(0, P_{n,k}) i.i.d.,
/// for every link. Throws DomainError when rho is outside [0, 1].
ChannelRealization corrupt_csi(const ChannelRealization& realization, double rho,
                               RandomStream& rng);

}  // namespace hetnet
