#pragma once

#include <string>
#include <vector>

#include "rhoplane/norm.hpp"

namespace rhoplane {

enum class PolygonStatus { Closed, NonClosing };

/// Orbit {u, u*, u**, ...} of the star map.
struct RhoPolygon {
  double rho = 0.0;
  std::vector<UnitPoint> vertices;  ///< distinct vertices; the closing vertex is not repeated
  PolygonStatus status = PolygonStatus::NonClosing;
  int n = 0;      ///< vertex count (Closed only)
  int k = 0;      ///< winding number (Closed only)
  bool coprime = false;
  int steps = 0;  ///< star-map applications performed
  std::vector<Vec2> accumulation_points;  ///< NonClosing only
  double total_turning = 0.0;
  double closure_error = 0.0;  ///< distance of the returning vertex to the seed
};

struct PolygonOptions {
  int max_steps = 2000;
  double close_tol = 1e-8;
  /// Single-linkage radius for accumulation clusters; <= 0 selects sqrt(close_tol).
  double cluster_radius = -1.0;
  /// Fraction of the orbit tail that is clustered.
  double tail_fraction = 0.2;
};

/// (k, m) with n = 2m + 1 and ρ = cos(kπ/n).
struct MEntry {
  int k = 0;
  int m = 0;
  int n = 0;
  double rho = 0.0;
};

/// sqrt((1 + cos(2kπ/n)) / 2). Requires k >= 1, n >= 3, 2k < n.
double rho_from_kn(int k, int n);

/// All entries with 1 <= k <= m <= m_max, sorted by ρ descending.
std::vector<MEntry> enumerate_M(int m_max);

/// Closest entry of M (m <= m_max) to ρ, if within `tol`.
bool find_in_M(double rho, MEntry& out, int m_max = 64, double tol = 1e-12);

/// Iterates the star map from u until the orbit returns to u within close_tol
/// (with at least 3 vertices) or max_steps is reached. A candidate closure is
/// re-verified by rebuilding the cycle with doubled bisection depth.
RhoPolygon build_polygon(const NormSpec& spec, const UnitPoint& u, double rho, const PolygonOptions& opts = {});

enum class PolygonShape { Convex, StarShaped };

struct Classification {
  PolygonShape shape;
  int winding;
  std::string to_string() const;
};

/// Convex for winding 1, StarShaped(k) for k >= 2. Throws DomainError on NonClosing input.
Classification classify(const RhoPolygon& poly);

/// Cyclic sum u1∧u2 + ... + un∧u1 over a closed polygon.
double wedge_sum(const RhoPolygon& poly);

/// Max over points of `a` of the distance to the nearest point of `b`.
double set_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

/// Min over pairs of distances between points of `a` and `b`.
double min_pair_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

std::vector<Vec2> coords_of(const RhoPolygon& poly);

}  // namespace rhoplane
