#pragma once

#include "rhoplane/norm.hpp"

namespace rhoplane {

/// Origin-centred conic a·x² + b·xy + c·y² = 1.
struct ConicForm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// 1-norm condition number of the 3x3 system the conic was fitted from
  /// (0 when not fitted).
  double cond = 0.0;

  bool positive_definite() const { return a > 0.0 && 4.0 * a * c - b * b > 0.0; }
};

double conic_eval(const ConicForm& C, Vec2 v);

/// Gradient of the quadratic form at v.
Vec2 conic_gradient(const ConicForm& C, Vec2 v);

/// Point of the conic in direction θ.
Vec2 conic_point(const ConicForm& C, double theta);

/// Fits the origin-centred ellipse through u, (u + u*)/(2ρ) and u*.
/// Throws GeometryError when the system is singular or the solution is not
/// positive definite.
ConicForm fit_rho_ellipse(const UnitPoint& u, const UnitPoint& u_star, double rho);

/// Same as above from three raw points.
ConicForm fit_centered_conic(Vec2 p0, Vec2 p1, Vec2 p2);

/// (1 - 2ρ²) vanishes: condition (*) collapses to u ⊥ u*.
bool tangency_degenerate(double rho);

/// u ⊥ (1 - 2ρ²)u + u*.
bool tangency_star(const NormSpec& spec, const UnitPoint& u, double rho, double tol = 1e-9);

/// u* ⊥ -u - (1 - 2ρ²)u*.
bool tangency_dstar(const NormSpec& spec, const UnitPoint& u, double rho, double tol = 1e-9);

/// C and S share a supporting line at z ∈ S: z is Birkhoff orthogonal to the
/// conic's tangent direction at z.
bool conic_tangent_at(const NormSpec& spec, const ConicForm& C, Vec2 z, double tol = 1e-9);

/// Searches a uniform θ grid for a point v with C_v tangent to S at v.
struct TangentSearch {
  bool found = false;
  UnitPoint v;
  double best_gap = 0.0;  ///< smallest ‖v‖ - min_λ‖v + λ t‖ seen
};
TangentSearch find_self_tangent_point(const NormSpec& spec, double rho, int samples, double tol = 1e-9);

}  // namespace rhoplane
