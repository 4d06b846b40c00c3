#pragma once

#include <cmath>
#include <utility>

namespace rhoplane {

/// Fixed iteration count for every bisection in the library.
inline constexpr int kBisectionIterations = 80;
inline constexpr int kDefaultIterations = kBisectionIterations;

struct ScalarMin {
  double x;
  double fx;
};

/// Minimizes a convex function on [lo, hi] by golden-section search down to
/// `width`, followed by one three-point parabolic step on the final bracket.
template <class F>
ScalarMin golden_section_minimize(F&& f, double lo, double hi, double width = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > width; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMin best = fc < fd ? ScalarMin{c, fc} : ScalarMin{d, fd};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx < best.fx) best = {x, fx};
  }

  // Parabola through the bracket ends and midpoint.
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double denom = fa - 2.0 * fm + fb;
  if (denom > 0.0) {
    const double x = m + 0.5 * (b - a) * 0.5 * (fa - fb) / denom;
    if (x >= a && x <= b) {
      const double fx = f(x);
      if (fx < best.fx) best = {x, fx};
    }
  }
  if (fm < best.fx) best = {m, fm};
  return best;
}

/// Bisection for the boundary of a predicate that is true on an initial
/// sub-interval [lo, t*) and false on (t*, hi]. Returns {last true, first false}.
template <class Pred>
std::pair<double, double> bisect_boundary(Pred&& pred, double lo, double hi,
                                          int iterations = kBisectionIterations) {
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace rhoplane
