#include "rhoplane/chord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

constexpr double kAntipodalGuard = 1e-9;

void require_rho(double rho, const char* who) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DomainError(std::string(who) + ": rho must lie in (0, 1), got " + std::to_string(rho));
  }
}

struct ChordFn {
  const NormSpec& spec;
  Vec2 u;
  Vec2 d;  // v - u
  double slack;

  Vec2 at(double t) const { return u + t * d; }
  double value(double t) const { return eval_norm(spec, at(t)); }
  bool decreasing_right(double t) const { return directional_derivative(spec, at(t), d) < -slack; }
  bool nonincreasing_left(double t) const { return -directional_derivative(spec, at(t), -d) <= slack; }

  double argmin_lo(int iterations) const {
    if (!decreasing_right(0.0)) return 0.0;
    return bisect_boundary([&](double t) { return decreasing_right(t); }, 0.0, 1.0, iterations).second;
  }
  double argmin_hi(int iterations) const {
    if (nonincreasing_left(1.0)) return 1.0;
    return bisect_boundary([&](double t) { return nonincreasing_left(t); }, 0.0, 1.0, iterations).first;
  }
};

ChordFn make_chord(const NormSpec& spec, Vec2 u, Vec2 v) {
  const Vec2 d = v - u;
  return ChordFn{spec, u, d, 1e-14 * eval_norm(spec, d)};
}

// Minimum value only; enough for the star-map predicate.
double chord_min_value(const NormSpec& spec, Vec2 u, Vec2 v, int iterations) {
  if (u == v) return eval_norm(spec, u);
  const ChordFn f = make_chord(spec, u, v);
  const double lo = f.argmin_lo(iterations);
  return f.value(lo);
}

double star_angle(const NormSpec& spec, const UnitPoint& u, double rho, int iterations) {
  const double hi_bound = u.theta + kPi - kAntipodalGuard;
  const auto supports_above = [&](double phi) {
    return chord_min_value(spec, u.coords, natural_param(spec, phi).coords, iterations) >= rho;
  };
  if (supports_above(hi_bound)) {
    throw NumericalError("star_map: chord near the antipode still clears rho; bracket failure at theta=" +
                         std::to_string(u.theta));
  }
  return bisect_boundary(supports_above, u.theta, hi_bound, iterations).first;
}

}  // namespace

double ChordReport::deviation(double rho) const { return std::abs(midpoint_norm - rho); }

double ChordReport::argmin_offset() const { return std::abs(0.5 * (argmin_lo + argmin_hi) - 0.5); }

ChordReport chord_min(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v, int iterations) {
  if (u.coords == v.coords) throw DomainError("chord_min: degenerate chord (u = v)");
  const ChordFn f = make_chord(spec, u.coords, v.coords);
  ChordReport r;
  r.u = u;
  r.v = v;
  r.argmin_lo = f.argmin_lo(iterations);
  r.argmin_hi = std::max(r.argmin_lo, f.argmin_hi(iterations));
  r.min_value = std::min({f.value(r.argmin_lo), f.value(r.argmin_hi), f.value(0.5 * (r.argmin_lo + r.argmin_hi))});
  r.midpoint_norm = eval_norm(spec, 0.5 * (u.coords + v.coords));
  return r;
}

UnitPoint star_map(const NormSpec& spec, const UnitPoint& u, double rho, int iterations) {
  require_rho(rho, "star_map");
  return natural_param(spec, star_angle(spec, u, rho, iterations));
}

double star_plateau_width(const NormSpec& spec, const UnitPoint& u, double rho, double tol) {
  require_rho(rho, "star_plateau_width");
  const double upper = std::min(rho + tol, 1.0 - 1e-15);
  const double lower = std::max(rho - tol, 1e-15);
  return star_angle(spec, u, lower, kBisectionIterations) - star_angle(spec, u, upper, kBisectionIterations);
}

ChordReport midpoint_check(const NormSpec& spec, const UnitPoint& u, double rho) {
  return chord_min(spec, u, star_map(spec, u, rho));
}

ChordFrame mu_of(const NormSpec& spec, double theta, double rho) {
  require_rho(rho, "mu_of");
  ChordFrame fr;
  fr.base = natural_param(spec, theta);
  fr.theta = fr.base.theta;
  fr.perp = birkhoff_successor(spec, fr.base);
  const Vec2 s = fr.base.coords, p = fr.perp.coords;
  const double hi = (1.0 + 1.0 / rho) / eval_norm(spec, p);
  const auto inside = [&](double mu) { return eval_norm(spec, rho * (s + mu * p)) < 1.0; };
  if (inside(hi)) throw NumericalError("mu_of: bracket failure");
  const auto [lo_mu, hi_mu] = bisect_boundary(inside, 0.0, hi);
  fr.mu = 0.5 * (lo_mu + hi_mu);
  fr.left = rho * (s - fr.mu * p);
  fr.right = rho * (s + fr.mu * p);
  return fr;
}

}  // namespace rhoplane
