#pragma once

#include <span>
#include <vector>

#include "rhoplane/norm.hpp"

namespace rhoplane {

inline constexpr int kDefaultAreaSamples = 4096;

struct SectorArea {
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;
  int samples = 0;
  /// |value(samples) - value(samples/2)|
  double error_estimate = 0.0;
};

/// Sum of values in a fixed pairwise order. The result depends only on the
/// input sequence, never on how the terms were produced.
double pairwise_sum(std::span<const double> terms);

/// Area of the sector of B between the rays at α and β (counterclockwise),
/// from the shoelace sums ½ Σ s(θ_i) ∧ s(θ_{i+1}) on uniform grids of
/// `samples` and `samples/2` steps, combined by one Richardson step. The grid
/// is evaluated in parallel; the reduction order is fixed.
/// Requires α < β <= α + 2π and samples >= 16.
SectorArea sector_area(const NormSpec& spec, double alpha, double beta, int samples = kDefaultAreaSamples);

/// Single-threaded reference of sector_area; bit-identical results.
SectorArea sector_area_serial(const NormSpec& spec, double alpha, double beta, int samples = kDefaultAreaSamples);

/// A(T_u^v) = A(B_u^v) - ½ u∧v for u ≺ v (v taken counterclockwise from u).
double cap_area(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v, int samples = kDefaultAreaSamples);

/// Sector area from u counterclockwise to v, which may exceed a half-turn.
double arc_sector_area(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v,
                       int samples = kDefaultAreaSamples);

double total_ball_area(const NormSpec& spec, int samples = kDefaultAreaSamples);

/// Shoelace terms ½ s(θ_i) ∧ s(θ_{i+1}) for the grid of `samples` steps.
std::vector<double> shoelace_terms(const NormSpec& spec, double alpha, double beta, int samples);
std::vector<double> shoelace_terms_serial(const NormSpec& spec, double alpha, double beta, int samples);

}  // namespace rhoplane
