#include "rhoplane/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rhoplane/chord.hpp"
#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

// Counterclockwise angular step from a to b, in (0, 2π].
double ccw_gap(double from, double to) {
  double g = normalize_angle(to - from);
  if (g == 0.0) g = kTwoPi;
  return g;
}

std::vector<Vec2> cluster_tail(const std::vector<UnitPoint>& orbit, double radius, double tail_fraction) {
  const std::size_t count = orbit.size();
  const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(tail_fraction * count)));
  const std::size_t start = count - std::min(tail, count);

  // Single linkage via union-find.
  const std::size_t m = count - start;
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (distance(orbit[start + i].coords, orbit[start + j].coords) <= radius) {
        parent[find(i)] = find(j);
      }
    }
  }
  // The latest member of each cluster represents it; clusters are reported
  // in order of first appearance.
  std::vector<std::size_t> first_seen, latest;
  std::vector<std::size_t> slot(m, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == std::numeric_limits<std::size_t>::max()) {
      slot[r] = first_seen.size();
      first_seen.push_back(i);
      latest.push_back(i);
    } else {
      latest[slot[r]] = i;
    }
  }
  std::vector<Vec2> out;
  for (std::size_t idx : latest) out.push_back(orbit[start + idx].coords);
  return out;
}

// Rebuilds `n` steps from the seed at a deeper bisection and reports the
// closure distance.
double reverify_closure(const NormSpec& spec, const UnitPoint& seed, double rho, int n) {
  UnitPoint cur = seed;
  for (int i = 0; i < n; ++i) cur = star_map(spec, cur, rho, 2 * kBisectionIterations);
  return distance(cur.coords, seed.coords);
}

}  // namespace

double rho_from_kn(int k, int n) {
  if (k < 1 || n < 3 || 2 * k >= n) {
    throw DomainError("rho_from_kn: need k >= 1, n >= 3 and 2k < n");
  }
  return std::sqrt((1.0 + std::cos(2.0 * k * kPi / n)) / 2.0);
}

std::vector<MEntry> enumerate_M(int m_max) {
  if (m_max < 1) throw DomainError("enumerate_M: m_max must be positive");
  std::vector<MEntry> out;
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 1; k <= m; ++k) out.push_back({k, m, 2 * m + 1, rho_from_kn(k, 2 * m + 1)});
  }
  std::stable_sort(out.begin(), out.end(), [](const MEntry& a, const MEntry& b) { return a.rho > b.rho; });
  return out;
}

bool find_in_M(double rho, MEntry& out, int m_max, double tol) {
  double best = std::numeric_limits<double>::infinity();
  for (const MEntry& e : enumerate_M(m_max)) {
    const double d = std::abs(e.rho - rho);
    if (d < best) {
      best = d;
      out = e;
    }
  }
  return best <= tol;
}

RhoPolygon build_polygon(const NormSpec& spec, const UnitPoint& u, double rho, const PolygonOptions& opts) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("build_polygon: rho must lie in (0, 1)");
  if (opts.max_steps < 3) throw DomainError("build_polygon: max_steps must be at least 3");
  if (!(opts.close_tol > 0.0)) throw DomainError("build_polygon: close_tol must be positive");

  RhoPolygon poly;
  poly.rho = rho;
  poly.vertices.push_back(u);
  UnitPoint cur = u;
  for (int step = 1; step <= opts.max_steps; ++step) {
    const UnitPoint next = star_map(spec, cur, rho);
    poly.total_turning += ccw_gap(cur.theta, next.theta);
    poly.steps = step;
    const double gap = distance(next.coords, u.coords);
    if (step >= 3 && gap <= opts.close_tol) {
      const double confirm = reverify_closure(spec, u, rho, step);
      if (confirm <= opts.close_tol) {
        poly.status = PolygonStatus::Closed;
        poly.n = step;
        poly.k = static_cast<int>(std::lround(poly.total_turning / kTwoPi));
        poly.coprime = std::gcd(poly.n, poly.k) == 1;
        poly.closure_error = gap;
        return poly;
      }
    }
    poly.vertices.push_back(next);
    cur = next;
  }
  poly.status = PolygonStatus::NonClosing;
  const double radius = opts.cluster_radius > 0.0 ? opts.cluster_radius : std::sqrt(opts.close_tol);
  poly.accumulation_points = cluster_tail(poly.vertices, radius, opts.tail_fraction);
  return poly;
}

std::string Classification::to_string() const {
  return shape == PolygonShape::Convex ? "Convex" : "StarShaped(" + std::to_string(winding) + ")";
}

Classification classify(const RhoPolygon& poly) {
  if (poly.status != PolygonStatus::Closed) throw DomainError("classify: polygon does not close");
  if (poly.k < 1) throw DomainError("classify: winding must be positive");
  return {poly.k == 1 ? PolygonShape::Convex : PolygonShape::StarShaped, poly.k};
}

double wedge_sum(const RhoPolygon& poly) {
  if (poly.status != PolygonStatus::Closed) throw DomainError("wedge_sum: polygon does not close");
  const auto& v = poly.vertices;
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += wedge(v[i].coords, v[(i + 1) % v.size()].coords);
  return sum;
}

double set_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double worst = 0.0;
  for (const Vec2& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& q : b) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

double min_pair_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& p : a)
    for (const Vec2& q : b) best = std::min(best, distance(p, q));
  return best;
}

std::vector<Vec2> coords_of(const RhoPolygon& poly) {
  std::vector<Vec2> out;
  out.reserve(poly.vertices.size());
  for (const UnitPoint& p : poly.vertices) out.push_back(p.coords);
  return out;
}

}  // namespace rhoplane
