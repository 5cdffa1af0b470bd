#include "svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "lpbp/errors.hpp"

namespace lpbp::cli {

namespace {

constexpr std::array<const char*, 4> kPathColors{"#c0392b", "#27ae60", "#8e44ad", "#d35400"};

struct Canvas {
  int n;
  int m;
  int px(int x) const { return kMarginPx + kUnitPx * x; }
  int py(int y) const { return kMarginPx + kUnitPx * (m - y); }
};

std::string polyline(const Canvas& c, const std::vector<Point>& pts, const std::string& style) {
  std::ostringstream os;
  os << "  <polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << c.px(pts[i].x) << ',' << c.py(pts[i].y);
  }
  os << "\"/>\n";
  return os.str();
}

std::vector<Point> boundary_points(const Composition& a) {
  std::vector<Point> pts;
  for (int y = 0; y <= a.parts_count(); ++y) pts.push_back({boundary_x(a, y), y});
  return pts;
}

}  // namespace

std::string render_svg(const Composition& a, bool all_shifts, const std::vector<LatticePath>& paths) {
  const Canvas c{a.total(), a.parts_count()};
  for (const auto& p : paths) {
    for (Point q : p.points()) {
      if (q.x < 0 || q.x > c.n || q.y < 0 || q.y > c.m) {
        throw DomainError("path " + p.word() + " leaves the grid at " + q.to_string());
      }
    }
  }

  std::ostringstream os;
  const int width = 2 * kMarginPx + kUnitPx * c.n;
  const int height = 2 * kMarginPx + kUnitPx * c.m;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  os << "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (int x = 0; x <= c.n; ++x) {
    os << "    <line x1=\"" << c.px(x) << "\" y1=\"" << c.py(0) << "\" x2=\"" << c.px(x) << "\" y2=\"" << c.py(c.m) << "\"/>\n";
  }
  for (int y = 0; y <= c.m; ++y) {
    os << "    <line x1=\"" << c.px(0) << "\" y1=\"" << c.py(y) << "\" x2=\"" << c.px(c.n) << "\" y2=\"" << c.py(y) << "\"/>\n";
  }
  os << "  </g>\n";

  if (all_shifts) {
    // Coincident shifts (period < m) are drawn once.
    std::vector<Composition> drawn;
    for (int j = 1; j < c.m; ++j) {
      const Composition s = shift_composition(a, j);
      if (s == a || std::find(drawn.begin(), drawn.end(), s) != drawn.end()) continue;
      drawn.push_back(s);
      os << polyline(c, boundary_points(s), "stroke=\"#7f8c8d\" stroke-width=\"2\" stroke-dasharray=\"6 4\"");
    }
  }
  os << polyline(c, boundary_points(a), "stroke=\"#1f3a93\" stroke-width=\"3\"");

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string color = kPathColors[i % kPathColors.size()];
    os << polyline(c, paths[i].points(), "stroke=\"" + color + "\" stroke-width=\"2.5\" stroke-linejoin=\"round\"");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lpbp::cli
