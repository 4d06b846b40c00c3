#include "rhoplane/svg.hpp"

#include <cmath>
#include <cstdio>

namespace rhoplane::svg {

namespace {

constexpr double kPxPerUnit = kCanvas / (2.0 * kExtent);

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string px(Vec2 p) { return num((p.x + kExtent) * kPxPerUnit) + " " + num((kExtent - p.y) * kPxPerUnit); }

std::string path_of(const std::vector<Vec2>& pts, bool closed) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M " : " L ") + px(pts[i]);
  if (closed) d += " Z";
  return d;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// "--" is not allowed inside XML comments.
std::string comment_safe(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '-' && !out.empty() && out.back() == '-') out += ' ';
    out += c;
  }
  return out;
}

void curve_layer(std::string& out, const char* id, const std::optional<std::vector<Vec2>>& pts, const char* stroke,
                 const char* dash) {
  if (!pts) return;
  out += "<g id=\"" + std::string(id) + "\">\n";
  out += "<path d=\"" + path_of(*pts, true) + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"";
  if (dash) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
  out += "/>\n</g>\n";
}

}  // namespace

std::vector<Vec2> sphere_curve(const NormSpec& spec, double scale) {
  std::vector<Vec2> pts;
  pts.reserve(kCurvePoints);
  for (int i = 0; i < kCurvePoints; ++i) pts.push_back(scale * natural_param(spec, kTwoPi * i / kCurvePoints).coords);
  return pts;
}

std::vector<Vec2> conic_curve(const ConicForm& C) {
  std::vector<Vec2> pts;
  pts.reserve(kCurvePoints);
  for (int i = 0; i < kCurvePoints; ++i) pts.push_back(conic_point(C, kTwoPi * i / kCurvePoints));
  return pts;
}

std::string render(const Scene& scene) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!scene.comment.empty()) out += "<!-- " + comment_safe(scene.comment) + " -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kCanvas) + "\" height=\"" +
         std::to_string(kCanvas) + "\" viewBox=\"0 0 " + std::to_string(kCanvas) + " " + std::to_string(kCanvas) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  curve_layer(out, "sphere", scene.sphere, "#000000", nullptr);
  curve_layer(out, "homothet", scene.homothet, "#7f8c8d", "6 4");
  curve_layer(out, "ellipse", scene.ellipse, "#2471a3", nullptr);

  const std::string r = num(kVertexRadius * kPxPerUnit);
  if (!scene.polygons.empty()) {
    out += "<g id=\"polygon\">\n";
    for (const PolygonLayer& poly : scene.polygons) {
      out += "<path d=\"" + path_of(poly.vertices, poly.closed) + "\" fill=\"none\" stroke=\"" + poly.stroke +
             "\" stroke-width=\"1\"/>\n";
      for (const Vec2& v : poly.vertices) {
        const std::string p = px(v);
        const auto sp = p.find(' ');
        out += "<circle cx=\"" + p.substr(0, sp) + "\" cy=\"" + p.substr(sp + 1) + "\" r=\"" + r + "\" fill=\"" +
               poly.stroke + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  if (!scene.markers.empty()) {
    out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"16\">\n";
    for (const Marker& m : scene.markers) {
      const std::string p = px(m.at);
      const auto sp = p.find(' ');
      const std::string cx = p.substr(0, sp), cy = p.substr(sp + 1);
      out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + r + "\" fill=\"#1e8449\"/>\n";
      out += "<text x=\"" + num(std::stod(cx) + 8.0) + "\" y=\"" + num(std::stod(cy) - 8.0) + "\">" +
             escape(m.label) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string geometry_body(const std::string& document) {
  const auto pos = document.find("<svg ");
  return pos == std::string::npos ? document : document.substr(pos);
}

}  // namespace rhoplane::svg
