#include <doctest.h>

#include "hetnet/beamforming.hpp"
#include "hetnet/errors.hpp"
#include "oracles.hpp"

using namespace hetnet;

namespace {

struct Drop {
  Topology topo;
  ChannelRealization ch;
};

Drop make_drop(std::uint64_t seed, int microcells = 2, double snr_db = 10.0) {
  NetworkConfig c;
  c.num_microcells = microcells;
  RandomStream rng(seed);
  Drop d;
  d.topo = build_topology(c, rng);
  d.topo.set_noise_variance(c.noise_variance(snr_db));
  d.ch = draw_channels(d.topo, ReceivedPowerModel::from_config(c), rng);
  return d;
}

}  // namespace

TEST_CASE("concatenated channel row counts per strategy") {
  const auto d = make_drop(1);
  const int macro_user = 2;
  const int micro_user = 7;  // cell 1
  REQUIRE(d.topo.serving_cell(micro_user) == 1);

  const auto nc = concatenated_channel(CoordinationStrategy::NoCoord, 0, macro_user, d.ch, d.topo);
  CHECK(nc.rows() == 5);
  CHECK(nc.cols() == 4);

  const auto fc = concatenated_channel(CoordinationStrategy::FullCoord, 0, macro_user, d.ch, d.topo);
  CHECK(fc.rows() == 13);

  const auto mo_micro =
      concatenated_channel(CoordinationStrategy::MacroOnlyCoord, 1, micro_user, d.ch, d.topo);
  const auto nc_micro =
      concatenated_channel(CoordinationStrategy::NoCoord, 1, micro_user, d.ch, d.topo);
  CHECK(mo_micro.rows() == 3);
  CHECK(mo_micro == nc_micro);
  CHECK(concatenated_channel(CoordinationStrategy::MacroOnlyCoord, 0, macro_user, d.ch, d.topo) ==
        fc);

  const auto nit_micro =
      concatenated_channel(CoordinationStrategy::NoInterTier, 1, micro_user, d.ch, d.topo);
  CHECK(nit_micro.rows() == 7);
  CHECK(nit_micro.cols() == 2);
  CHECK(concatenated_channel(CoordinationStrategy::NoInterTier, 0, macro_user, d.ch, d.topo) == nc);
}

TEST_CASE("leakage rows are ordered by cell then user and exclude the served user") {
  const auto d = make_drop(2);
  const auto rows = leakage_users(CoordinationStrategy::FullCoord, 1, 7, d.topo);
  CHECK(std::is_sorted(rows.begin(), rows.end()));
  CHECK(std::find(rows.begin(), rows.end(), 7) == rows.end());
  const auto nit = leakage_users(CoordinationStrategy::NoInterTier, 1, 7, d.topo);
  for (int u : nit) CHECK_FALSE(d.topo.sites[static_cast<std::size_t>(d.topo.serving_cell(u))].is_macro());
  CHECK_THROWS_AS(leakage_users(CoordinationStrategy::NoCoord, 0, 7, d.topo), DomainError);
}

TEST_CASE("slnr_beamformer without leakage is maximum ratio transmission") {
  RandomStream rng(3);
  const Eigen::RowVectorXcd h = complex_normal_row(rng, 4, 2.0);
  const Eigen::MatrixXcd empty(0, 4);
  const auto w = slnr_beamformer(h, empty, 1.0);
  const Eigen::VectorXcd mrt = h.adjoint() / h.norm();
  for (Eigen::Index i = 0; i < 4; ++i) {
    CHECK(w(i).real() == doctest::Approx(mrt(i).real()).epsilon(1e-12));
    CHECK(w(i).imag() == doctest::Approx(mrt(i).imag()).epsilon(1e-12));
  }
  CHECK(slnr(w, h, empty, 1.0) == doctest::Approx(h.squaredNorm()));
}

TEST_CASE("slnr_beamformer beats random unit vectors") {
  RandomStream rng(4);
  for (int instance = 0; instance < 50; ++instance) {
    const Eigen::RowVectorXcd h = complex_normal_row(rng, 4, 1.0);
    const auto leak = oracle::random_matrix(rng, 5, 4);
    const double noise = 0.1 + instance * 0.05;
    const auto w = slnr_beamformer(h, leak, noise);
    CHECK(w.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    const double best = slnr(w, h, leak, noise);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto u = oracle::random_unit_vector(rng, 4);
      REQUIRE(slnr(u, h, leak, noise) <= best * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("slnr_beamformer approaches zero forcing as noise vanishes") {
  RandomStream rng(5);
  for (int instance = 0; instance < 20; ++instance) {
    const Eigen::RowVectorXcd h = complex_normal_row(rng, 4, 1.0);
    const auto leak = oracle::random_matrix(rng, 3, 4);
    const auto w = slnr_beamformer(h, leak, 1e-12);
    CHECK((leak * w).norm() < 1e-4 * h.norm());
    const auto zf = oracle::null_space_direction(h, leak);
    CHECK(std::abs(zf.dot(w)) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("slnr_beamformer rejects non-positive noise and mismatched shapes") {
  const Eigen::RowVectorXcd h = Eigen::RowVectorXcd::Ones(2);
  CHECK_THROWS_AS(slnr_beamformer(h, Eigen::MatrixXcd(0, 2), 0.0), DomainError);
  CHECK_THROWS_AS(slnr_beamformer(h, Eigen::MatrixXcd::Ones(1, 3), 1.0), DomainError);
}

TEST_CASE("slnr quotient") {
  SUBCASE("orthogonal leakage and unit desired power") {
    Eigen::VectorXcd w(2);
    w << 1.0, 0.0;
    Eigen::RowVectorXcd h(2);
    h << std::sqrt(0.5), 3.0;
    Eigen::MatrixXcd leak(2, 2);
    leak << 0.0, 1.0, 0.0, std::complex<double>(2.0, 1.0);
    CHECK(slnr(w, h, leak, 0.5) == doctest::Approx(1.0));
  }
  SUBCASE("random instances agree with direct summation") {
    RandomStream rng(6);
    for (int i = 0; i < 100; ++i) {
      const Eigen::RowVectorXcd h = complex_normal_row(rng, 4, 1.0);
      const auto leak = oracle::random_matrix(rng, 1 + i % 7, 4);
      const auto w = oracle::random_unit_vector(rng, 4);
      CHECK(slnr(w, h, leak, 0.3) == doctest::Approx(oracle::slnr(w, h, leak, 0.3)).epsilon(1e-12));
    }
  }
}

TEST_CASE("build_beamformers sizes and unit norm") {
  const auto d = make_drop(7);
  for (auto s : kAllStrategies) {
    const auto bf = build_beamformers(s, d.ch, d.topo, false);
    REQUIRE(bf.weights.size() == 14);
    int four = 0, two = 0;
    for (const auto& w : bf.weights) {
      CHECK(std::abs(w.squaredNorm() - 1.0) < 1e-12);
      (w.size() == 4 ? four : two)++;
    }
    CHECK(four == 6);
    CHECK(two == 8);
    CHECK(bf.strategy == s);
  }
}

TEST_CASE("perfect design ignores the estimated copy only when asked") {
  const auto d = make_drop(8);
  RandomStream rng(1);
  const auto same = corrupt_csi(d.ch, 1.0, rng);
  for (auto s : kAllStrategies) {
    const auto a = build_beamformers(s, d.ch, d.topo, false);
    const auto b = build_beamformers(s, same, d.topo, true);
    for (std::size_t k = 0; k < a.weights.size(); ++k) CHECK(a.weights[k] == b.weights[k]);
  }
  const auto noisy = corrupt_csi(d.ch, 0.5, rng);
  const auto imperfect = build_beamformers(CoordinationStrategy::NoCoord, noisy, d.topo, true);
  const auto perfect = build_beamformers(CoordinationStrategy::NoCoord, noisy, d.topo, false);
  CHECK(imperfect.built_from == CsiSource::Estimated);
  CHECK(imperfect.rho == 0.5);
  CHECK((imperfect.weights[0] - perfect.weights[0]).norm() > 1e-6);
}

TEST_CASE("full coordination changes macro beamformers when microcells exist") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = make_drop(100 + seed);
    const auto nc = build_beamformers(CoordinationStrategy::NoCoord, d.ch, d.topo, false);
    const auto fc = build_beamformers(CoordinationStrategy::FullCoord, d.ch, d.topo, false);
    for (const auto& u : d.topo.users_of(0))
      CHECK((nc[u.id] - fc[u.id]).norm() > 0.0);
  }
}

TEST_CASE("beamformers are invariant to a common power scaling") {
  RandomStream rng(9);
  for (int i = 0; i < 100; ++i) {
    const Eigen::RowVectorXcd h = complex_normal_row(rng, 4, 1.0);
    const auto leak = oracle::random_matrix(rng, 6, 4);
    const double scale = std::pow(10.0, -3.0 + 0.06 * i);
    const auto w1 = slnr_beamformer(h, leak, 0.2);
    const auto w2 = slnr_beamformer(std::sqrt(scale) * h, std::sqrt(scale) * leak, scale * 0.2);
    CHECK(std::abs(std::abs(w1.dot(w2)) - 1.0) < 1e-9);
  }
}

TEST_CASE("all strategies coincide without microcells") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = make_drop(seed, 0);
    const auto ref = build_beamformers(CoordinationStrategy::NoCoord, d.ch, d.topo, false);
    for (auto s : kAllStrategies) {
      const auto bf = build_beamformers(s, d.ch, d.topo, false);
      for (std::size_t k = 0; k < ref.weights.size(); ++k) CHECK(bf.weights[k] == ref.weights[k]);
    }
  }
}
