#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the production beamforming or metrics code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hetnet/beamforming.hpp"
#include "hetnet/channel.hpp"
#include "hetnet/random.hpp"
#include "hetnet/topology.hpp"

namespace oracle {

using cd = std::complex<double>;

/// sum_i x_i * w_i by explicit loop.
inline cd inner(const Eigen::RowVectorXcd& x, const Eigen::VectorXcd& w) {
  cd acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += x(i) * w(i);
  return acc;
}

/// Term-by-term SINR: desired over noise + intracell + intercell, with the
/// interfering cells chosen by `include_cell(j)`.
template <typename IncludeCell>
double sinr(int user, const hetnet::BeamformerSet& bf, const hetnet::ChannelRealization& ch,
            const hetnet::Topology& topo, IncludeCell include_cell) {
  const auto& u = topo.users[static_cast<std::size_t>(user)];
  const int n = u.serving_cell;
  const double signal = std::norm(inner(ch.link(n, user), bf.weights[static_cast<std::size_t>(user)]));
  double intra = 0.0;
  double inter = 0.0;
  for (const auto& other : topo.users) {
    if (other.id == user) continue;
    const int j = other.serving_cell;
    const double p = std::norm(inner(ch.link(j, user), bf.weights[static_cast<std::size_t>(other.id)]));
    if (j == n)
      intra += p;
    else if (include_cell(j))
      inter += p;
  }
  return signal / (u.noise_variance + intra + inter);
}

/// Quotient by direct summation over the leakage rows.
inline double slnr(const Eigen::VectorXcd& w, const Eigen::RowVectorXcd& h,
                   const Eigen::MatrixXcd& leak, double noise) {
  double den = noise;
  for (Eigen::Index r = 0; r < leak.rows(); ++r) den += std::norm(inner(leak.row(r), w));
  return std::norm(inner(h, w)) / den;
}

inline Eigen::VectorXcd random_unit_vector(hetnet::RandomStream& rng, Eigen::Index z) {
  Eigen::VectorXcd v = hetnet::complex_normal_row(rng, z, 1.0).transpose();
  return v.normalized();
}

inline Eigen::MatrixXcd random_matrix(hetnet::RandomStream& rng, Eigen::Index rows,
                                      Eigen::Index cols, double variance = 1.0) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) m.row(r) = hetnet::complex_normal_row(rng, cols, variance);
  return m;
}

/// Zero-forcing direction: projection of h^H onto the null space of the
/// leakage rows, via a full SVD.
inline Eigen::VectorXcd null_space_direction(const Eigen::RowVectorXcd& h,
                                             const Eigen::MatrixXcd& leak) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(leak, Eigen::ComputeFullV);
  const Eigen::Index rank = svd.rank();
  const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(leak.cols() - rank);
  Eigen::VectorXcd w = null_basis * (null_basis.adjoint() * h.adjoint());
  return w.normalized();
}

/// Monte Carlo E[|h (L^H L + s I)^{-1} h^H|^2] with h ~ CN(0, P I), using an
/// explicit inverse.
inline double quadratic_form_moment_mc(const Eigen::MatrixXcd& leak, double noise, double power,
                                       int draws, hetnet::RandomStream& rng) {
  const Eigen::Index z = leak.cols();
  const Eigen::MatrixXcd inv =
      (leak.adjoint() * leak + noise * Eigen::MatrixXcd::Identity(z, z)).inverse();
  double acc = 0.0;
  for (int d = 0; d < draws; ++d) {
    const Eigen::RowVectorXcd h = hetnet::complex_normal_row(rng, z, power);
    acc += std::norm((h * inv * h.adjoint())(0, 0));
  }
  return acc / draws;
}

/// Two-sided Kolmogorov-Smirnov statistic of `samples` against `cdf`.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

inline double normal_cdf(double x, double sigma) {
  return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
}

}  // namespace oracle
