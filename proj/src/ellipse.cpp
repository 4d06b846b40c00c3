#include "rhoplane/ellipse.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "rhoplane/chord.hpp"
#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

double norm1(const Mat3& m) {
  double best = 0.0;
  for (int j = 0; j < 3; ++j) {
    double col = 0.0;
    for (int i = 0; i < 3; ++i) col += std::abs(m[i][j]);
    best = std::max(best, col);
  }
  return best;
}

// Gaussian elimination with partial pivoting; solves A X = B for a 3x3 B.
bool solve3(Mat3 a, Mat3& b) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      for (int c = 0; c < 3; ++c) b[r][c] -= f * b[col][c];
    }
  }
  for (int col = 2; col >= 0; --col) {
    for (int c = 0; c < 3; ++c) {
      double s = b[col][c];
      for (int k = col + 1; k < 3; ++k) s -= a[col][k] * b[k][c];
      b[col][c] = s / a[col][col];
    }
  }
  return true;
}

constexpr double kSingularCond = 1e14;

}  // namespace

double conic_eval(const ConicForm& C, Vec2 v) { return C.a * v.x * v.x + C.b * v.x * v.y + C.c * v.y * v.y; }

Vec2 conic_gradient(const ConicForm& C, Vec2 v) {
  return {2.0 * C.a * v.x + C.b * v.y, C.b * v.x + 2.0 * C.c * v.y};
}

Vec2 conic_point(const ConicForm& C, double theta) {
  const Vec2 dir{std::cos(theta), std::sin(theta)};
  return dir / std::sqrt(conic_eval(C, dir));
}

ConicForm fit_centered_conic(Vec2 p0, Vec2 p1, Vec2 p2) {
  Mat3 a{};
  const Vec2 pts[3] = {p0, p1, p2};
  for (int i = 0; i < 3; ++i) a[i] = {pts[i].x * pts[i].x, pts[i].x * pts[i].y, pts[i].y * pts[i].y};

  // Solve against the identity to get the inverse (for the condition number);
  // the coefficients are the row sums of the inverse applied to (1,1,1).
  Mat3 inv{};
  for (int i = 0; i < 3; ++i) inv[i][i] = 1.0;
  if (!solve3(a, inv)) throw GeometryError("fit_rho_ellipse: singular system (points parallel through origin)");
  ConicForm C;
  C.cond = norm1(a) * norm1(inv);
  if (!std::isfinite(C.cond) || C.cond > kSingularCond) {
    throw GeometryError("fit_rho_ellipse: singular system (points parallel through origin)");
  }
  double coef[3];
  for (int i = 0; i < 3; ++i) coef[i] = inv[i][0] + inv[i][1] + inv[i][2];
  C.a = coef[0];
  C.b = coef[1];
  C.c = coef[2];
  if (!C.positive_definite()) throw GeometryError("fit_rho_ellipse: fitted conic is not an ellipse");
  return C;
}

ConicForm fit_rho_ellipse(const UnitPoint& u, const UnitPoint& u_star, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("fit_rho_ellipse: rho must lie in (0, 1)");
  const Vec2 w = (u.coords + u_star.coords) / (2.0 * rho);
  return fit_centered_conic(u.coords, w, u_star.coords);
}

bool tangency_degenerate(double rho) { return std::abs(1.0 - 2.0 * rho * rho) < 1e-15; }

bool tangency_star(const NormSpec& spec, const UnitPoint& u, double rho, double tol) {
  const UnitPoint us = star_map(spec, u, rho);
  const Vec2 dir = tangency_degenerate(rho) ? us.coords : (1.0 - 2.0 * rho * rho) * u.coords + us.coords;
  return is_birkhoff_orthogonal(spec, u.coords, dir, tol);
}

bool tangency_dstar(const NormSpec& spec, const UnitPoint& u, double rho, double tol) {
  const UnitPoint us = star_map(spec, u, rho);
  const Vec2 dir = tangency_degenerate(rho) ? -u.coords : -u.coords - (1.0 - 2.0 * rho * rho) * us.coords;
  return is_birkhoff_orthogonal(spec, us.coords, dir, tol);
}

bool conic_tangent_at(const NormSpec& spec, const ConicForm& C, Vec2 z, double tol) {
  const Vec2 g = conic_gradient(C, z);
  return is_birkhoff_orthogonal(spec, z, Vec2{-g.y, g.x}, tol);
}

TangentSearch find_self_tangent_point(const NormSpec& spec, double rho, int samples, double tol) {
  if (samples < 1) throw DomainError("find_self_tangent_point: samples must be positive");
  TangentSearch out;
  out.best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const UnitPoint v = natural_param(spec, kTwoPi * i / samples);
    const UnitPoint vs = star_map(spec, v, rho);
    ConicForm C;
    try {
      C = fit_rho_ellipse(v, vs, rho);
    } catch (const GeometryError&) {
      continue;
    }
    const Vec2 g = conic_gradient(C, v.coords);
    const double gap = eval_norm(spec, v.coords) - birkhoff_min(spec, v.coords, Vec2{-g.y, g.x});
    if (gap < out.best_gap) {
      out.best_gap = gap;
      out.v = v;
    }
  }
  out.found = out.best_gap <= tol;
  return out;
}

}  // namespace rhoplane
