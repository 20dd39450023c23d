#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hetnet/channel.hpp"
#include "hetnet/strategy.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

/// Unit-norm precoders, one per user, each on the user's serving site.
struct BeamformerSet {
  /// weights[k] is the Z_n x 1 vector for user k from its serving site n.
  std::vector<Eigen::VectorXcd> weights;
  CoordinationStrategy strategy = CoordinationStrategy::NoCoord;
  CsiSource built_from = CsiSource::Perfect;
  double rho = 1.0;

  const Eigen::VectorXcd& operator[](int user) const {
    return weights[static_cast<std::size_t>(user)];
  }
};

/// Users whose channels from `bs` enter the leakage matrix of `user`, in
/// ascending user id (hence ascending cell id).
std::vector<int> leakage_users(CoordinationStrategy strategy, int bs, int user,
                               const Topology& topology);

/// Stacks the leakage channels from `bs` as rows (Z_n columns).
Eigen::MatrixXcd concatenated_channel(CoordinationStrategy strategy, int bs, int user,
                                      const ChannelRealization& channels,
                                      const Topology& topology,
                                      CsiSource source = CsiSource::Perfect);

/// Normalized (L^H L + sigma^2 I)^{-1} h^H. Throws DomainError when
/// noise_variance <= 0 or the dimensions disagree.
Eigen::VectorXcd slnr_beamformer(const Eigen::RowVectorXcd& desired,
                                 const Eigen::MatrixXcd& leakage, double noise_variance);

/// |h w|^2 / (sigma^2 + ||L w||^2).
double slnr(const Eigen::VectorXcd& w, const Eigen::RowVectorXcd& desired,
            const Eigen::MatrixXcd& leakage, double noise_variance);

/// Designs every user's beamformer from the perfect or estimated channels.
/// Regularization uses each user's own noise variance.
BeamformerSet build_beamformers(CoordinationStrategy strategy,
                                const ChannelRealization& channels,
                                const Topology& topology, bool use_imperfect);

}  // namespace hetnet
