#include "hetnet/topology.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hetnet/errors.hpp"

namespace hetnet {

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }
double norm(Point p) noexcept { return std::hypot(p.x, p.y); }

namespace {

CellSite make_site(const TierParams& tier, CellKind kind, int id, Point position, int host) {
  CellSite s;
  s.id = id;
  s.kind = kind;
  s.position = position;
  s.radius_m = tier.radius_m;
  s.erp_dbm = tier.erp_dbm;
  s.erp_mw = dbm_to_mw(tier.erp_dbm);
  s.num_antennas = tier.antennas;
  s.num_users = tier.users;
  s.pathloss_exponent = tier.pathloss_exponent;
  s.host_macro = host;
  return s;
}

/// Uniform point in the annulus inner < r <= outer around `center`.
Point uniform_in_annulus(Point center, double inner, double outer, RandomStream& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = std::sqrt(u01(rng) * (outer * outer - inner * inner) + inner * inner);
  const double theta = 2.0 * std::numbers::pi * u01(rng);
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

}  // namespace

CellSite make_macro_site(const NetworkConfig& config, int id, Point position) {
  return make_site(config.macro, CellKind::Macro, id, position, id);
}

CellSite make_micro_site(const NetworkConfig& config, int id, Point position, int host_macro) {
  return make_site(config.micro, CellKind::Micro, id, position, host_macro);
}

std::span<const UserTerminal> Topology::users_of(int cell) const {
  const auto& site = sites[static_cast<std::size_t>(cell)];
  return std::span<const UserTerminal>(users).subspan(
      static_cast<std::size_t>(first_user_of(cell)), static_cast<std::size_t>(site.num_users));
}

int Topology::first_user_of(int cell) const {
  int first = 0;
  for (int n = 0; n < cell; ++n) first += sites[static_cast<std::size_t>(n)].num_users;
  return first;
}

std::vector<int> Topology::macro_ids() const {
  std::vector<int> ids;
  for (const auto& s : sites)
    if (s.is_macro()) ids.push_back(s.id);
  return ids;
}

std::vector<int> Topology::micro_ids() const {
  std::vector<int> ids;
  for (const auto& s : sites)
    if (!s.is_macro()) ids.push_back(s.id);
  return ids;
}

void Topology::set_noise_variance(double noise_variance) {
  for (auto& u : users) u.noise_variance = noise_variance;
}

std::vector<CellSite> place_microcells(const NetworkConfig& config, const CellSite& macro,
                                       int count, PlacementRegion region, int first_id,
                                       RandomStream& rng) {
  if (count < 0) throw DomainError("place_microcells: negative count");
  const double outer = macro.radius_m;
  const double inner = region.mode == PlacementMode::EdgeAnnulus ? region.inner_radius_m : 0.0;
  if (inner < 0.0 || inner >= outer)
    throw DomainError("place_microcells: annulus inner radius must lie in [0, macro radius)");
  const double min_separation = 2.0 * config.micro.radius_m;

  std::vector<CellSite> placed;
  placed.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < config.placement_attempts && !ok; ++attempt) {
      Point p = uniform_in_annulus(macro.position, inner, outer, rng);
      // The annulus is open at its inner edge.
      if (inner > 0.0 && distance(p, macro.position) <= inner) continue;
      ok = true;
      for (const auto& other : placed) {
        if (distance(p, other.position) < min_separation) {
          ok = false;
          break;
        }
      }
      if (ok) placed.push_back(make_micro_site(config, first_id + i, p, macro.id));
    }
    if (!ok)
      throw PlacementInfeasible("could not place microcell " + std::to_string(i + 1) + " of " +
                                std::to_string(count) + " within " +
                                std::to_string(config.placement_attempts) + " attempts");
  }
  return placed;
}

std::vector<UserTerminal> drop_users(const CellSite& site, double exclusion_radius_m,
                                     int first_id, RandomStream& rng,
                                     std::span<const Point> keep_out) {
  std::vector<UserTerminal> users;
  users.reserve(static_cast<std::size_t>(site.num_users));
  for (int i = 0; i < site.num_users; ++i) {
    Point p;
    bool clear = false;
    while (!clear) {
      p = uniform_in_annulus(site.position, exclusion_radius_m, site.radius_m, rng);
      clear = true;
      for (Point q : keep_out)
        if (distance(p, q) < exclusion_radius_m) clear = false;
    }
    users.push_back(UserTerminal{first_id + i, site.id, p, 1.0});
  }
  return users;
}

std::vector<Point> macro_positions(const NetworkConfig& config) {
  if (config.num_macrocells == 1) return {{0.0, 0.0}};
  const double d = config.macro_isd_m;
  return {{0.0, 0.0}, {d, 0.0}, {d / 2.0, d * std::sqrt(3.0) / 2.0}};
}

Eigen::MatrixXd distance_matrix(std::span<const CellSite> sites,
                                std::span<const UserTerminal> users) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(sites.size()),
                    static_cast<Eigen::Index>(users.size()));
  for (std::size_t n = 0; n < sites.size(); ++n)
    for (std::size_t k = 0; k < users.size(); ++k)
      d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) =
          distance(sites[n].position, users[k].position);
  return d;
}

Topology build_topology(const NetworkConfig& config, RandomStream& rng) {
  Topology topo;
  const auto centers = macro_positions(config);
  for (std::size_t i = 0; i < centers.size(); ++i)
    topo.sites.push_back(make_macro_site(config, static_cast<int>(i), centers[i]));

  // Microcells are dropped around the first (reference) macro only.
  const PlacementRegion region{
      config.edge_deployment ? PlacementMode::EdgeAnnulus : PlacementMode::Anywhere,
      config.edge_inner_radius_m};
  auto micros = place_microcells(config, topo.sites.front(), config.num_microcells, region,
                                 topo.num_sites(), rng);
  topo.sites.insert(topo.sites.end(), micros.begin(), micros.end());

  std::vector<Point> bs_positions;
  for (const auto& s : topo.sites) bs_positions.push_back(s.position);

  const double noise = config.noise_variance(config.snr_db);
  for (const auto& site : topo.sites) {
    auto users = drop_users(site, config.reference_distance_m, topo.num_users(), rng,
                            bs_positions);
    for (auto& u : users) u.noise_variance = noise;
    topo.users.insert(topo.users.end(), users.begin(), users.end());
  }
  topo.distances = distance_matrix(topo.sites, topo.users);
  return topo;
}

}  // namespace hetnet
