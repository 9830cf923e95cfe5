#include "flattorus/seven_color.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "flattorus/crease_svg.hpp"
#include "flattorus/errors.hpp"

namespace flattorus {

namespace {

constexpr double kRowHeight = std::numbers::sqrt3 / 2.0;

// Period lattice in axial coordinates and the plane.
constexpr std::array<int, 2> kPeriodA = {1, 2};
constexpr std::array<int, 2> kPeriodB = {-3, 1};

struct Plane {
  double x;
  double y;
};

Plane axial_to_plane(double a, double b) { return {a + 0.5 * b, kRowHeight * b}; }

const Plane kP1 = axial_to_plane(kPeriodA[0], kPeriodA[1]);
const Plane kP2 = axial_to_plane(kPeriodB[0], kPeriodB[1]);

constexpr std::array<const char*, 7> kPalette = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8",
                                                 "#f58231", "#911eb4", "#42d4f4"};

}  // namespace

int SevenColoring::color_of(int a, int b) { return (((a + 3 * b) % 7) + 7) % 7; }

SevenColoring::SevenColoring(const FlatTorus& torus) : torus_(torus) {
  if (color_of(kPeriodA[0], kPeriodA[1]) != 0 || color_of(kPeriodB[0], kPeriodB[1]) != 0) {
    throw StructuralError("seven-colour period vectors do not preserve the colouring");
  }
  if (std::abs(kPeriodA[0] * kPeriodB[1] - kPeriodA[1] * kPeriodB[0]) != 7) {
    throw StructuralError("seven-colour period lattice must have index 7");
  }
  std::set<int> neighbours;
  for (auto [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}) {
    neighbours.insert(color_of(da, db));
  }
  if (neighbours.size() != 6 || neighbours.count(0)) {
    throw StructuralError("hexagon neighbours must carry the six other colours");
  }
}

int SevenColoring::region_at(TorusPoint p) const {
  const double s = torus_.side();
  const double fu = p.u / s;
  const double fv = p.v / s;
  const Plane y{fu * kP1.x + fv * kP2.x, fu * kP1.y + fv * kP2.y};
  const double b = y.y / kRowHeight;
  const double a = y.x - 0.5 * b;
  const int a0 = static_cast<int>(std::floor(a));
  const int b0 = static_cast<int>(std::floor(b));
  int best_a = a0;
  int best_b = b0;
  double best = INFINITY;
  for (int ia = a0; ia <= a0 + 1; ++ia) {
    for (int ib = b0; ib <= b0 + 1; ++ib) {
      const Plane c = axial_to_plane(ia, ib);
      const double d = (c.x - y.x) * (c.x - y.x) + (c.y - y.y) * (c.y - y.y);
      if (d < best - 1e-12) {
        best = d;
        best_a = ia;
        best_b = ib;
      }
    }
  }
  return color_of(best_a, best_b);
}

std::vector<Point2> SevenColoring::hexagon(int a, int b) const {
  const double s = torus_.side();
  const double det = kP1.x * kP2.y - kP2.x * kP1.y;
  const Plane c = axial_to_plane(a, b);
  std::vector<Point2> out;
  for (int k = 0; k < 6; ++k) {
    const double angle = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
    const double x = c.x + std::cos(angle) / std::numbers::sqrt3;
    const double y = c.y + std::sin(angle) / std::numbers::sqrt3;
    // Solve y = fu * P1 + fv * P2.
    const double fu = (x * kP2.y - kP2.x * y) / det;
    const double fv = (kP1.x * y - x * kP1.y) / det;
    out.push_back({fu * s, fv * s});
  }
  return out;
}

SevenColorReport raster_adjacency(const SevenColoring& coloring, int resolution) {
  if (resolution < 2) throw InvalidArgument("raster resolution must be >= 2");
  const double s = coloring.torus().side();
  const auto n = static_cast<std::size_t>(resolution);
  std::vector<int> raster(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      raster[j * n + i] = coloring.region_at({(i + 0.5) * s / resolution, (j + 0.5) * s / resolution});
    }
  }
  std::set<int> regions(raster.begin(), raster.end());
  std::set<std::pair<int, int>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const int c = raster[j * n + i];
      for (int other : {raster[j * n + (i + 1) % n], raster[((j + 1) % n) * n + i]}) {
        if (other != c) pairs.insert(std::minmax(c, other));
      }
    }
  }
  return {static_cast<int>(regions.size()), {pairs.begin(), pairs.end()}};
}

std::string seven_color_svg(const SevenColoring& coloring) {
  const double s = coloring.torus().side();
  const double px = s * kPixelsPerUnit;
  char buf[160];
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%g\" height=\"%g\" "
                "viewBox=\"0 0 %g %g\">\n",
                px, px, px, px);
  out += buf;
  std::snprintf(buf, sizeof buf, "  <defs><clipPath id=\"sheet\"><rect x=\"0\" y=\"0\" width=\"%g\" height=\"%g\"/>"
                "</clipPath></defs>\n", px, px);
  out += buf;
  out += "  <g clip-path=\"url(#sheet)\" stroke=\"#222222\" stroke-width=\"1\">\n";
  for (int b = -3; b <= 6; ++b) {
    for (int a = -8; a <= 8; ++a) {
      const std::vector<Point2> hex = coloring.hexagon(a, b);
      const auto [umin, umax] = std::minmax_element(hex.begin(), hex.end(), [](Point2 p, Point2 q) { return p.u < q.u; });
      const auto [vmin, vmax] = std::minmax_element(hex.begin(), hex.end(), [](Point2 p, Point2 q) { return p.v < q.v; });
      if (umax->u <= 0.0 || umin->u >= s || vmax->v <= 0.0 || vmin->v >= s) continue;
      const int c = SevenColoring::color_of(a, b);
      std::snprintf(buf, sizeof buf, "    <polygon class=\"region region-%d\" data-axial=\"%d %d\" fill=\"%s\" points=\"",
                    c, a, b, kPalette[static_cast<std::size_t>(c)]);
      out += buf;
      for (std::size_t k = 0; k < hex.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", hex[k].u * kPixelsPerUnit,
                      px - hex[k].v * kPixelsPerUnit);
        out += buf;
      }
      out += "\"/>\n";
    }
  }
  out += "  </g>\n";
  std::snprintf(buf, sizeof buf,
                "  <rect x=\"0\" y=\"0\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n",
                px, px);
  out += buf;
  out += "</svg>\n";
  return out;
}

SevenColorTexture seven_color_texture(const FlatTorus& torus, int resolution) {
  const SevenColoring coloring(torus);
  SevenColorTexture t{seven_color_svg(coloring), raster_adjacency(coloring, resolution)};
  if (!t.report.complete_graph()) {
    throw StructuralError("seven-colour map failed the K7 adjacency check (" + std::to_string(t.report.regions) +
                          " regions, " + std::to_string(t.report.adjacent_pairs.size()) + " pairs)");
  }
  return t;
}

}  // namespace flattorus
