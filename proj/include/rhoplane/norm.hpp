#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rhoplane/vec2.hpp"

namespace rhoplane {

namespace gauge {
struct Euclidean {};
/// a·x² + b·xy + c·y², positive definite.
struct Quadratic {
  double a, b, c;
};
/// (|x|^p + |y|^p)^(1/p), finite p >= 1.
struct Lp {
  double p;
};
/// Gauge of a centrally symmetric convex polygon. `vertices` holds the full
/// symmetrized vertex list in counterclockwise order; `normals[i]` is the
/// facet functional with normals[i]·x = 1 on edge (vertices[i], vertices[i+1]).
struct Polygon {
  std::vector<Vec2> vertices;
  std::vector<Vec2> normals;
};
}  // namespace gauge

/// A symmetric convex gauge on the plane. Construct through the named
/// factories, which validate parameters and throw ConfigError.
class NormSpec {
 public:
  using Variant = std::variant<gauge::Euclidean, gauge::Quadratic, gauge::Lp, gauge::Polygon>;

  static NormSpec euclidean();
  static NormSpec quadratic(double a, double b, double c);
  static NormSpec lp(double p);
  /// Vertices are closed under v ↦ -v, deduplicated, sorted by angle and
  /// checked for strict convexity with the origin in the interior. Collinear
  /// points on an edge are dropped.
  static NormSpec polygon(std::span<const Vec2> vertices);
  /// The square gauge (ℓ∞) with vertices (±1, ±1).
  static NormSpec square();

  /// Parses "euclid" | "lp:<p>" | "quad:<a>,<b>,<c>" | "poly:<x1>,<y1>;<x2>,<y2>;...".
  static NormSpec parse(std::string_view text);

  const Variant& variant() const { return v_; }

  /// Canonical spec string; `parse(id())` reproduces the same norm.
  std::string id() const;

  /// Euclidean, Quadratic and Lp with 1 < p < ∞.
  bool is_smooth_strictly_convex() const;
  /// Norms induced by an inner product (Euclidean, Quadratic, lp:2).
  bool is_inner_product() const;

 private:
  explicit NormSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// A point of the unit sphere carrying its parameter angle.
struct UnitPoint {
  double theta = 0.0;  ///< in [0, 2π)
  Vec2 coords;
};

struct TangentCheck {
  double theta = 0.0;
  Vec2 fd_tangent;
  Vec2 perp_dir;
  double collinearity_residual = 0.0;
  double p_estimate = 0.0;
};

struct Tolerances {
  double unit = 1e-10;
  double orthogonality = 1e-9;
};

double eval_norm(const NormSpec& spec, Vec2 v);

/// One-sided directional derivative lim_{h→0+} (‖x + h d‖ - ‖x‖) / h.
/// Exact per gauge family; at x = 0 it equals ‖d‖.
double directional_derivative(const NormSpec& spec, Vec2 x, Vec2 d);

/// s(θ) = (cos θ, sin θ) / ‖(cos θ, sin θ)‖, theta normalized to [0, 2π).
UnitPoint natural_param(const NormSpec& spec, double theta);

/// Unit point in the direction of v (v nonzero).
UnitPoint unit_point_towards(const NormSpec& spec, Vec2 v);

/// ‖u‖ <= ‖u + λv‖ for all λ, decided by a golden-section minimization over
/// |λ| <= 2‖u‖/‖v‖.
bool is_birkhoff_orthogonal(const NormSpec& spec, Vec2 u, Vec2 v, double tol = 1e-9);

/// min over λ of ‖u + λv‖ (the quantity behind the orthogonality test).
double birkhoff_min(const NormSpec& spec, Vec2 u, Vec2 v);

/// The unique u⊥ on S with u ≺ u⊥ and u ⊥ u⊥. Smooth strictly convex specs
/// only; throws UnsupportedSpecError otherwise.
UnitPoint birkhoff_successor(const NormSpec& spec, const UnitPoint& u);

/// Compares the central difference of s at θ against s⊥(θ).
TangentCheck tangent_check(const NormSpec& spec, double theta, double h);

}  // namespace rhoplane
