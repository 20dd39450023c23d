#include "hetnet/beamforming.hpp"

#include "hetnet/errors.hpp"

namespace hetnet {

std::vector<int> leakage_users(CoordinationStrategy strategy, int bs, int user,
                               const Topology& topology) {
  if (topology.serving_cell(user) != bs)
    throw DomainError("concatenated_channel: bs does not serve user");
  const bool macro = topology.sites[static_cast<std::size_t>(bs)].is_macro();

  enum class Scope { OwnCell, AllCells, MicroCells };
  Scope scope = Scope::OwnCell;
  switch (strategy) {
    case CoordinationStrategy::NoCoord: scope = Scope::OwnCell; break;
    case CoordinationStrategy::FullCoord: scope = Scope::AllCells; break;
    case CoordinationStrategy::MacroOnlyCoord:
      scope = macro ? Scope::AllCells : Scope::OwnCell;
      break;
    case CoordinationStrategy::NoInterTier:
      scope = macro ? Scope::OwnCell : Scope::MicroCells;
      break;
  }

  std::vector<int> rows;
  for (const auto& u : topology.users) {
    if (u.id == user) continue;
    const auto& cell = topology.sites[static_cast<std::size_t>(u.serving_cell)];
    const bool include = u.serving_cell == bs || scope == Scope::AllCells ||
                         (scope == Scope::MicroCells && !cell.is_macro());
    if (include) rows.push_back(u.id);
  }
  return rows;
}

Eigen::MatrixXcd concatenated_channel(CoordinationStrategy strategy, int bs, int user,
                                      const ChannelRealization& channels,
                                      const Topology& topology, CsiSource source) {
  const auto rows = leakage_users(strategy, bs, user, topology);
  const int antennas = topology.sites[static_cast<std::size_t>(bs)].num_antennas;
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()), antennas);
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.row(static_cast<Eigen::Index>(r)) = channels.link(bs, rows[r], source);
  return out;
}

Eigen::VectorXcd slnr_beamformer(const Eigen::RowVectorXcd& desired,
                                 const Eigen::MatrixXcd& leakage, double noise_variance) {
  if (!(noise_variance > 0.0)) throw DomainError("slnr_beamformer: noise variance must be > 0");
  const Eigen::Index z = desired.size();
  if (leakage.cols() != z && leakage.rows() > 0)
    throw DomainError("slnr_beamformer: leakage column count differs from antenna count");

  Eigen::MatrixXcd regularized = noise_variance * Eigen::MatrixXcd::Identity(z, z);
  if (leakage.rows() > 0) regularized.noalias() += leakage.adjoint() * leakage;
  Eigen::VectorXcd w = regularized.llt().solve(desired.adjoint());
  w.normalize();
  return w;
}

double slnr(const Eigen::VectorXcd& w, const Eigen::RowVectorXcd& desired,
            const Eigen::MatrixXcd& leakage, double noise_variance) {
  const double signal = std::norm((desired * w).value());
  const double leak = leakage.rows() > 0 ? (leakage * w).squaredNorm() : 0.0;
  return signal / (noise_variance + leak);
}

BeamformerSet build_beamformers(CoordinationStrategy strategy,
                                const ChannelRealization& channels,
                                const Topology& topology, bool use_imperfect) {
  const CsiSource source = use_imperfect ? CsiSource::Estimated : CsiSource::Perfect;
  BeamformerSet set;
  set.strategy = strategy;
  set.built_from = source;
  set.rho = use_imperfect ? channels.rho() : 1.0;
  set.weights.reserve(topology.users.size());
  for (const auto& u : topology.users) {
    const int bs = u.serving_cell;
    const auto leakage = concatenated_channel(strategy, bs, u.id, channels, topology, source);
    set.weights.push_back(
        slnr_beamformer(channels.link(bs, u.id, source), leakage, u.noise_variance));
  }
  return set;
}

}  // namespace hetnet
