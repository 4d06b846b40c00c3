#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoplane/ellipse.hpp"
#include "rhoplane/norm.hpp"
#include "rhoplane/polygon.hpp"

namespace rhoplane::svg {

inline constexpr int kCanvas = 800;
inline constexpr double kExtent = 1.3;  // viewport [-kExtent, kExtent]^2
inline constexpr int kCurvePoints = 512;
inline constexpr double kVertexRadius = 0.012;

struct PolygonLayer {
  std::vector<Vec2> vertices;
  bool closed = true;
  std::string stroke = "#c0392b";
};

struct Marker {
  Vec2 at;
  std::string label;
};

/// Geometry to draw. Layers are emitted in the order
/// sphere < homothet < ellipse < polygon < labels regardless of how the
/// scene was filled.
struct Scene {
  std::optional<std::vector<Vec2>> sphere;
  std::optional<std::vector<Vec2>> homothet;
  std::optional<std::vector<Vec2>> ellipse;
  std::vector<PolygonLayer> polygons;
  std::vector<Marker> markers;
  /// Emitted verbatim inside an XML comment at the top of the document.
  std::string comment;
};

/// `scale`·S sampled at kCurvePoints uniform angles.
std::vector<Vec2> sphere_curve(const NormSpec& spec, double scale = 1.0);
std::vector<Vec2> conic_curve(const ConicForm& C);

std::string render(const Scene& scene);

/// The part of a rendered document after the leading comment; two renders of
/// the same geometry agree here even if their comments differ.
std::string geometry_body(const std::string& document);

}  // namespace rhoplane::svg
