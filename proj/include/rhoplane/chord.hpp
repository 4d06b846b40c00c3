#pragma once

#include "rhoplane/norm.hpp"
#include "rhoplane/scalar_search.hpp"

namespace rhoplane {

/// A chord [u, v] of S with the minimum of t ↦ ‖(1-t)u + tv‖ on [0, 1].
struct ChordReport {
  UnitPoint u;
  UnitPoint v;
  double min_value = 0.0;
  double argmin_lo = 0.0;
  double argmin_hi = 0.0;
  double midpoint_norm = 0.0;

  /// |‖(u+v)/2‖ - ρ|, the midpoint-support deviation used for pass/fail.
  double deviation(double rho) const;
  /// |t* - 1/2| with t* the centre of the minimizer interval. Diagnostic only.
  double argmin_offset() const;
};

/// s(θ), s⊥(θ), μ(θ) and the two points ρ(s ∓ μ s⊥).
struct ChordFrame {
  double theta = 0.0;
  UnitPoint base;
  UnitPoint perp;
  double mu = 0.0;
  Vec2 left;
  Vec2 right;
};

/// Minimum of the convex chord function. The minimizer interval is located
/// by bisection on the exact one-sided derivatives, so it collapses to a
/// point on strictly convex norms and spans the flat piece otherwise.
/// Throws DomainError when u and v coincide.
ChordReport chord_min(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v,
                      int iterations = kDefaultIterations);

/// The unique u* ∈ S, u ≺ u*, with [u, u*] supporting ρS.
///
/// Bisection over φ ∈ (θ_u, θ_u + π - 1e-9] on the predicate
/// chord_min(u, s(φ)) >= ρ, which holds on an initial sub-interval. The
/// supremum of that interval is returned, which settles plateaus on
/// polygonal norms. Throws DomainError for ρ ∉ (0, 1) and NumericalError if
/// the bracket does not straddle the boundary.
UnitPoint star_map(const NormSpec& spec, const UnitPoint& u, double rho,
                   int iterations = kDefaultIterations);

/// Width of the angular interval on which chord_min(u, s(φ)) equals ρ within
/// `tol`. Zero on strictly convex norms; positive when u* sits on a plateau.
double star_plateau_width(const NormSpec& spec, const UnitPoint& u, double rho, double tol = 1e-12);

/// ChordReport of [u, star_map(u, ρ)].
ChordReport midpoint_check(const NormSpec& spec, const UnitPoint& u, double rho);

/// μ(θ) > 0 with ‖ρ(s(θ) + μ s⊥(θ))‖ = 1. Smooth strictly convex specs only.
ChordFrame mu_of(const NormSpec& spec, double theta, double rho);

}  // namespace rhoplane
