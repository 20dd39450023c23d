#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hetnet/config.hpp"
#include "hetnet/random.hpp"

namespace hetnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b) noexcept;
double norm(Point p) noexcept;

enum class CellKind { Macro, Micro };

struct CellSite {
  int id = 0;
  CellKind kind = CellKind::Macro;
  Point position;
  double radius_m = 0.0;
  double erp_dbm = 0.0;
  double erp_mw = 0.0;
  int num_antennas = 1;
  int num_users = 1;
  double pathloss_exponent = 4.0;
  /// Macro whose coverage hosts this microcell; equals `id` for macros.
  int host_macro = 0;

  bool is_macro() const noexcept { return kind == CellKind::Macro; }
};

CellSite make_macro_site(const NetworkConfig& config, int id, Point position);
CellSite make_micro_site(const NetworkConfig& config, int id, Point position, int host_macro);

struct UserTerminal {
  int id = 0;
  int serving_cell = 0;
  Point position;
  double noise_variance = 1.0;
};

enum class PlacementMode { Anywhere, EdgeAnnulus };

/// Region where microcell centers may be drawn around a macro site.
struct PlacementRegion {
  PlacementMode mode = PlacementMode::Anywhere;
  double inner_radius_m = 877.0;  // only used by EdgeAnnulus
};

/// Sites and users of one network drop. Users are stored grouped by serving
/// cell in ascending cell id, so `users_of(n)` is a contiguous range.
struct Topology {
  std::vector<CellSite> sites;
  std::vector<UserTerminal> users;
  /// distances(n, k): site n to user k, meters.
  Eigen::MatrixXd distances;

  int num_sites() const noexcept { return static_cast<int>(sites.size()); }
  int num_users() const noexcept { return static_cast<int>(users.size()); }
  std::span<const UserTerminal> users_of(int cell) const;
  int first_user_of(int cell) const;
  int serving_cell(int user) const { return users[static_cast<std::size_t>(user)].serving_cell; }
  std::vector<int> macro_ids() const;
  std::vector<int> micro_ids() const;

  void set_noise_variance(double noise_variance);
};

/// Rejection-samples `count` microcell centers uniformly over the region of
/// `macro`, keeping centers at least 2 * micro radius apart. Sites get ids
/// first_id, first_id + 1, ...
std::vector<CellSite> place_microcells(const NetworkConfig& config, const CellSite& macro,
                                       int count, PlacementRegion region, int first_id,
                                       RandomStream& rng);

/// Uniform drop over the site's disc, excluding the reference-distance
/// radius around the BS and around every point in `keep_out` (other BSs).
/// User ids start at `first_id`.
std::vector<UserTerminal> drop_users(const CellSite& site, double exclusion_radius_m,
                                     int first_id, RandomStream& rng,
                                     std::span<const Point> keep_out = {});

/// Macro centers: origin for one macro, an equilateral triangle with side
/// macro_isd_m (first vertex at the origin) for three.
std::vector<Point> macro_positions(const NetworkConfig& config);

Topology build_topology(const NetworkConfig& config, RandomStream& rng);

/// Builds the distance matrix from site and user positions.
Eigen::MatrixXd distance_matrix(std::span<const CellSite> sites,
                                std::span<const UserTerminal> users);

}  // namespace hetnet
