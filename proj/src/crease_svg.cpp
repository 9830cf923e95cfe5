#include "flattorus/crease_svg.hpp"

#include <cstdio>

namespace flattorus {

namespace {

constexpr double kMargin = 20.0;

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

}  // namespace

std::string crease_svg(const CreasePattern& pattern, const FlatTorus& torus) {
  const double px = torus.side() * kPixelsPerUnit;
  const double total = px + 2.0 * kMargin;
  // Sheet v grows upwards; SVG y grows downwards.
  auto x_of = [](double u) { return kMargin + u * kPixelsPerUnit; };
  auto y_of = [px](double v) { return kMargin + px - v * kPixelsPerUnit; };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt("%g", total) + "\" height=\"" +
         fmt("%g", total) + "\" viewBox=\"0 0 " + fmt("%g", total) + " " + fmt("%g", total) + "\">\n";
  out += "  <rect class=\"sheet\" x=\"" + fmt("%g", kMargin) + "\" y=\"" + fmt("%g", kMargin) + "\" width=\"" +
         fmt("%g", px) + "\" height=\"" + fmt("%g", px) + "\" fill=\"#fdfdf8\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  for (const Crease& c : pattern.creases) {
    double x1, y1, x2, y2;
    if (c.axis == Crease::Axis::kU) {
      x1 = x2 = x_of(c.at);
      y1 = y_of(c.from);
      y2 = y_of(c.to);
    } else {
      y1 = y2 = y_of(c.at);
      x1 = x_of(c.from);
      x2 = x_of(c.to);
    }
    const bool mountain = c.mountain();
    out += std::string("  <line class=\"crease ") + (mountain ? "mountain" : "valley") + "\" data-axis=\"" +
           (c.axis == Crease::Axis::kU ? "u" : "v") + "\" data-at=\"" + fmt("%.17g", c.at) + "\" data-angle=\"" +
           fmt("%g", c.angle_deg) + "\" data-stage=\"" + stage_letter(c.stage) + "\" x1=\"" + fmt("%g", x1) +
           "\" y1=\"" + fmt("%g", y1) + "\" x2=\"" + fmt("%g", x2) + "\" y2=\"" + fmt("%g", y2) + "\" stroke=\"" +
           (mountain ? "#c0392b" : "#2c6fbb") + "\" stroke-width=\"3\" stroke-dasharray=\"" +
           (mountain ? "12 4 2 4" : "8 6") + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace flattorus
