#include "rhoplane/area.hpp"

#include <cmath>

#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

void check_range(double alpha, double beta, int samples) {
  if (!(alpha < beta) || beta - alpha > kTwoPi * (1.0 + 1e-15)) {
    throw DomainError("sector_area: need alpha < beta <= alpha + 2*pi");
  }
  if (samples < 16) throw DomainError("sector_area: samples must be at least 16");
}

double grid_angle(double alpha, double beta, int samples, int i) {
  return i == samples ? beta : alpha + (beta - alpha) * (static_cast<double>(i) / samples);
}

template <class Terms>
SectorArea sector_area_with(const NormSpec& spec, double alpha, double beta, int samples, Terms&& terms) {
  check_range(alpha, beta, samples);
  SectorArea out;
  out.alpha = alpha;
  out.beta = beta;
  out.samples = samples;
  const double fine = pairwise_sum(terms(spec, alpha, beta, samples));
  const double coarse = pairwise_sum(terms(spec, alpha, beta, samples / 2));
  // The inscribed polyline is short by c·h² on smooth arcs; one Richardson
  // step removes that term. Grids that hit every corner of a polygonal
  // sphere are exact at both levels and stay exact.
  out.value = fine + (fine - coarse) / 3.0;
  out.error_estimate = std::abs(fine - coarse);
  return out;
}

}  // namespace

double pairwise_sum(std::span<const double> terms) {
  if (terms.empty()) return 0.0;
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

std::vector<double> shoelace_terms(const NormSpec& spec, double alpha, double beta, int samples) {
  std::vector<Vec2> pts(static_cast<std::size_t>(samples) + 1);
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= samples; ++i) pts[i] = natural_param(spec, grid_angle(alpha, beta, samples, i)).coords;
  std::vector<double> terms(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < samples; ++i) terms[i] = 0.5 * wedge(pts[i], pts[i + 1]);
  return terms;
}

std::vector<double> shoelace_terms_serial(const NormSpec& spec, double alpha, double beta, int samples) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(samples));
  Vec2 prev = natural_param(spec, grid_angle(alpha, beta, samples, 0)).coords;
  for (int i = 1; i <= samples; ++i) {
    const Vec2 cur = natural_param(spec, grid_angle(alpha, beta, samples, i)).coords;
    terms.push_back(0.5 * wedge(prev, cur));
    prev = cur;
  }
  return terms;
}

SectorArea sector_area(const NormSpec& spec, double alpha, double beta, int samples) {
  return sector_area_with(spec, alpha, beta, samples, shoelace_terms);
}

SectorArea sector_area_serial(const NormSpec& spec, double alpha, double beta, int samples) {
  return sector_area_with(spec, alpha, beta, samples, shoelace_terms_serial);
}

double arc_sector_area(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v, int samples) {
  double gap = normalize_angle(v.theta - u.theta);
  if (gap == 0.0) gap = kTwoPi;
  return sector_area(spec, u.theta, u.theta + gap, samples).value;
}

double cap_area(const NormSpec& spec, const UnitPoint& u, const UnitPoint& v, int samples) {
  if (!(wedge(u.coords, v.coords) > 0.0)) throw DomainError("cap_area: need u to precede v");
  return arc_sector_area(spec, u, v, samples) - 0.5 * wedge(u.coords, v.coords);
}

double total_ball_area(const NormSpec& spec, int samples) { return sector_area(spec, 0.0, kTwoPi, samples).value; }

}  // namespace rhoplane
