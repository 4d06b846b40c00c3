#include "rhoplane/norm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "rhoplane/errors.hpp"
#include "rhoplane/scalar_search.hpp"

namespace rhoplane {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Facets whose functional is within this relative margin of the maximum are
// treated as active when differentiating a polygon gauge.
constexpr double kActiveFacetRel = 1e-12;

double lp_norm(double p, Vec2 v) {
  const double ax = std::abs(v.x), ay = std::abs(v.y);
  const double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  if (p == 1.0) return ax + ay;
  return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

double polygon_norm(const gauge::Polygon& g, Vec2 v) {
  double best = 0.0;
  for (const Vec2& n : g.normals) best = std::max(best, n.dot(v));
  return best;
}

std::string fmt_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // Prefer the shortest representation that round-trips.
  for (int prec = 1; prec <= 17; ++prec) {
    char b2[64];
    std::snprintf(b2, sizeof b2, "%.*g", prec, x);
    if (std::strtod(b2, nullptr) == x) return b2;
  }
  return buf;
}

double parse_number(std::string_view s) {
  std::string tmp(s);
  // Accept the unicode minus sign.
  for (std::size_t pos; (pos = tmp.find("\xE2\x88\x92")) != std::string::npos;) {
    tmp.replace(pos, 3, "-");
  }
  const auto first = tmp.find_first_not_of(" \t");
  const auto last = tmp.find_last_not_of(" \t");
  if (first == std::string::npos) throw ConfigError("empty number in norm spec");
  tmp = tmp.substr(first, last - first + 1);
  char* end = nullptr;
  const double x = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || !std::isfinite(x)) {
    throw ConfigError("malformed number in norm spec: '" + tmp + "'");
  }
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

NormSpec NormSpec::euclidean() { return NormSpec(gauge::Euclidean{}); }

NormSpec NormSpec::quadratic(double a, double b, double c) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw ConfigError("quadratic gauge: non-finite coefficient");
  }
  if (!(a > 0.0) || !(4.0 * a * c - b * b > 0.0)) {
    throw ConfigError("quadratic gauge is not positive definite");
  }
  return NormSpec(gauge::Quadratic{a, b, c});
}

NormSpec NormSpec::lp(double p) {
  if (!std::isfinite(p) || !(p >= 1.0)) throw ConfigError("lp gauge needs finite p >= 1");
  return NormSpec(gauge::Lp{p});
}

NormSpec NormSpec::polygon(std::span<const Vec2> input) {
  if (input.empty()) throw ConfigError("polygon gauge: no vertices");
  std::vector<Vec2> pts;
  for (const Vec2& v : input) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw ConfigError("polygon gauge: non-finite vertex");
    if (v.is_zero()) throw ConfigError("polygon gauge: vertex at the origin");
    pts.push_back(v);
    pts.push_back(-v);
  }
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return polar_angle(a) < polar_angle(b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return distance(a, b) <= 1e-14 * std::max(1.0, a.length()); }),
            pts.end());
  if (pts.size() >= 2 && distance(pts.front(), pts.back()) <= 1e-14 * std::max(1.0, pts.front().length())) {
    pts.pop_back();
  }
  // Two directions at the same angle with different radii cannot both be vertices.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % pts.size()];
    if (std::abs(wedge(a, b)) <= 1e-14 * a.length() * b.length() && a.dot(b) > 0.0) {
      throw ConfigError("polygon gauge: two vertices share a direction");
    }
  }
  // Drop collinear points, reject reflex ones.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 prev = pts[(i + pts.size() - 1) % pts.size()];
      const Vec2 cur = pts[i];
      const Vec2 next = pts[(i + 1) % pts.size()];
      const double turn = wedge(cur - prev, next - cur);
      const double scale = (cur - prev).length() * (next - cur).length();
      if (turn < -1e-12 * scale) throw ConfigError("polygon gauge: vertices are not convex");
      if (turn <= 1e-12 * scale) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 4) throw ConfigError("polygon gauge: fewer than 4 vertices after symmetrization");
  gauge::Polygon g;
  g.vertices = pts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % pts.size()];
    const double w = wedge(a, b);
    if (!(w > 0.0)) throw ConfigError("polygon gauge: origin is not strictly inside");
    g.normals.push_back(Vec2{b.y - a.y, a.x - b.x} / w);
  }
  return NormSpec(std::move(g));
}

NormSpec NormSpec::square() {
  const Vec2 v[] = {{1, 1}, {-1, 1}};
  return polygon(v);
}

NormSpec NormSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "euclid") {
    if (colon != std::string_view::npos) throw ConfigError("euclid takes no parameters");
    return euclidean();
  }
  if (colon == std::string_view::npos) throw ConfigError("unknown norm spec: '" + std::string(text) + "'");
  if (head == "lp") return lp(parse_number(body));
  if (head == "quad") {
    const auto parts = split(body, ',');
    if (parts.size() != 3) throw ConfigError("quad needs three coefficients a,b,c");
    return quadratic(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
  }
  if (head == "poly") {
    std::vector<Vec2> verts;
    for (std::string_view item : split(body, ';')) {
      if (item.empty()) continue;
      const auto xy = split(item, ',');
      if (xy.size() != 2) throw ConfigError("poly vertex needs x,y: '" + std::string(item) + "'");
      verts.push_back({parse_number(xy[0]), parse_number(xy[1])});
    }
    return polygon(verts);
  }
  throw ConfigError("unknown norm family: '" + std::string(head) + "'");
}

std::string NormSpec::id() const {
  return std::visit(overloaded{
                        [](const gauge::Euclidean&) -> std::string { return "euclid"; },
                        [](const gauge::Quadratic& q) {
                          return "quad:" + fmt_num(q.a) + "," + fmt_num(q.b) + "," + fmt_num(q.c);
                        },
                        [](const gauge::Lp& l) { return "lp:" + fmt_num(l.p); },
                        [](const gauge::Polygon& g) {
                          std::string s = "poly:";
                          for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                            if (i) s += ';';
                            s += fmt_num(g.vertices[i].x) + "," + fmt_num(g.vertices[i].y);
                          }
                          return s;
                        },
                    },
                    v_);
}

bool NormSpec::is_smooth_strictly_convex() const {
  return std::visit(overloaded{
                        [](const gauge::Euclidean&) { return true; },
                        [](const gauge::Quadratic&) { return true; },
                        [](const gauge::Lp& l) { return l.p > 1.0; },
                        [](const gauge::Polygon&) { return false; },
                    },
                    v_);
}

bool NormSpec::is_inner_product() const {
  return std::visit(overloaded{
                        [](const gauge::Euclidean&) { return true; },
                        [](const gauge::Quadratic&) { return true; },
                        [](const gauge::Lp& l) { return l.p == 2.0; },
                        [](const gauge::Polygon&) { return false; },
                    },
                    v_);
}

double eval_norm(const NormSpec& spec, Vec2 v) {
  return std::visit(overloaded{
                        [&](const gauge::Euclidean&) { return std::hypot(v.x, v.y); },
                        [&](const gauge::Quadratic& q) {
                          const double val = q.a * v.x * v.x + q.b * v.x * v.y + q.c * v.y * v.y;
                          return std::sqrt(std::max(0.0, val));
                        },
                        [&](const gauge::Lp& l) { return lp_norm(l.p, v); },
                        [&](const gauge::Polygon& g) { return polygon_norm(g, v); },
                    },
                    spec.variant());
}

double directional_derivative(const NormSpec& spec, Vec2 x, Vec2 d) {
  if (x.is_zero()) return eval_norm(spec, d);
  return std::visit(
      overloaded{
          [&](const gauge::Euclidean&) { return x.dot(d) / x.length(); },
          [&](const gauge::Quadratic& q) {
            const Vec2 grad{2.0 * q.a * x.x + q.b * x.y, q.b * x.x + 2.0 * q.c * x.y};
            return grad.dot(d) / (2.0 * eval_norm(spec, x));
          },
          [&](const gauge::Lp& l) {
            const Vec2 y = x / lp_norm(l.p, x);
            auto term = [&](double yi, double di) {
              if (yi == 0.0) return l.p == 1.0 ? std::abs(di) : 0.0;
              return std::copysign(std::pow(std::abs(yi), l.p - 1.0), yi) * di;
            };
            return term(y.x, d.x) + term(y.y, d.y);
          },
          [&](const gauge::Polygon& g) {
            const double nx = polygon_norm(g, x);
            double best = -std::numeric_limits<double>::infinity();
            for (const Vec2& n : g.normals) {
              if (n.dot(x) >= nx * (1.0 - kActiveFacetRel)) best = std::max(best, n.dot(d));
            }
            return best;
          },
      },
      spec.variant());
}

UnitPoint natural_param(const NormSpec& spec, double theta) {
  const double t = normalize_angle(theta);
  const Vec2 dir{std::cos(t), std::sin(t)};
  return {t, dir / eval_norm(spec, dir)};
}

UnitPoint unit_point_towards(const NormSpec& spec, Vec2 v) {
  if (v.is_zero()) throw DomainError("unit_point_towards: zero vector");
  return {polar_angle(v), v / eval_norm(spec, v)};
}

double birkhoff_min(const NormSpec& spec, Vec2 u, Vec2 v) {
  if (u.is_zero() || v.is_zero()) throw DomainError("birkhoff orthogonality: zero vector");
  const double bound = 2.0 * eval_norm(spec, u) / eval_norm(spec, v);
  const auto f = [&](double lambda) { return eval_norm(spec, u + lambda * v); };
  return golden_section_minimize(f, -bound, bound).fx;
}

bool is_birkhoff_orthogonal(const NormSpec& spec, Vec2 u, Vec2 v, double tol) {
  return birkhoff_min(spec, u, v) >= eval_norm(spec, u) - tol;
}

UnitPoint birkhoff_successor(const NormSpec& spec, const UnitPoint& u) {
  if (!spec.is_smooth_strictly_convex()) {
    throw UnsupportedSpecError("birkhoff_successor needs a smooth strictly convex norm, got " + spec.id());
  }
  // The derivative of λ ↦ ‖u + λ s(φ)‖ at 0 is positive for φ just past θ_u
  // and negative just before θ_u + π; it changes sign once.
  const auto positive = [&](double phi) {
    const Vec2 dir{std::cos(phi), std::sin(phi)};
    return directional_derivative(spec, u.coords, dir) > 0.0;
  };
  const auto [lo, hi] = bisect_boundary(positive, u.theta, u.theta + kPi);
  return natural_param(spec, 0.5 * (lo + hi));
}

TangentCheck tangent_check(const NormSpec& spec, double theta, double h) {
  if (!(h > 0.0 && h <= 1e-2)) throw DomainError("tangent_check: step must lie in (0, 1e-2]");
  TangentCheck out;
  out.theta = normalize_angle(theta);
  const Vec2 plus = natural_param(spec, theta + h).coords;
  const Vec2 minus = natural_param(spec, theta - h).coords;
  out.fd_tangent = (plus - minus) / (2.0 * h);
  out.perp_dir = birkhoff_successor(spec, natural_param(spec, theta)).coords;
  const double fd_len = out.fd_tangent.length();
  const double perp_len = out.perp_dir.length();
  out.collinearity_residual = std::abs(wedge(out.fd_tangent, out.perp_dir)) / (perp_len * fd_len);
  out.p_estimate = out.fd_tangent.dot(out.perp_dir) / (perp_len * perp_len);
  return out;
}

}  // namespace rhoplane
