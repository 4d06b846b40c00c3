#pragma once

#include <cmath>

namespace rhoplane {

/// A point (or vector) of the real plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double length() const { return std::hypot(x, y); }
  bool is_zero() const { return x == 0.0 && y == 0.0; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Planar cross product u1*v2 - u2*v1.
constexpr double wedge(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

/// True iff u precedes v counterclockwise within a half-turn (u ∧ v > 0).
/// Throws DomainError if either vector is zero.
bool precedes(Vec2 u, Vec2 v);

/// Euclidean distance.
inline double distance(Vec2 a, Vec2 b) { return (a - b).length(); }

/// Polar angle of v normalized to [0, 2π).
double polar_angle(Vec2 v);

/// Reduces an angle to [0, 2π).
double normalize_angle(double theta);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace rhoplane
