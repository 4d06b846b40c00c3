#include "rhoplane/vec2.hpp"

#include "rhoplane/errors.hpp"

namespace rhoplane {

bool precedes(Vec2 u, Vec2 v) {
  if (u.is_zero() || v.is_zero()) throw DomainError("precedes: zero vector");
  return wedge(u, v) > 0.0;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double polar_angle(Vec2 v) { return normalize_angle(std::atan2(v.y, v.x)); }

}  // namespace rhoplane
