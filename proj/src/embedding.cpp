#include "flattorus/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <tuple>

#include "flattorus/errors.hpp"
#include "flattorus/kernels.hpp"

namespace flattorus {

const char* side_tag_name(SideTag tag) {
  switch (tag) {
    case SideTag::kExterior:
      return "exterior";
    case SideTag::kInterior:
      return "interior";
    case SideTag::kPlanar:
      return "planar";
  }
  return "planar";
}

SideTag parse_side_tag(const std::string& name) {
  if (name == "exterior") return SideTag::kExterior;
  if (name == "interior") return SideTag::kInterior;
  if (name == "planar") return SideTag::kPlanar;
  throw InvalidArgument("unknown side_tag '" + name + "'");
}

SideTag opposite(SideTag tag) {
  if (tag == SideTag::kExterior) return SideTag::kInterior;
  if (tag == SideTag::kInterior) return SideTag::kExterior;
  return tag;
}

namespace {

Ambient vec3(double x, double y, double z) {
  Ambient a(3);
  a << x, y, z;
  return a;
}

Ambient vec4(double x, double y, double z, double w) {
  Ambient a(4);
  a << x, y, z, w;
  return a;
}

// Coordinates are identified on a 1e-9 lattice modulo the period.
long long quantize(double x, double side) {
  const long long period = std::llround(side * 1e9);
  long long q = std::llround(x * 1e9) % period;
  if (q < 0) q += period;
  return q;
}

}  // namespace

PLEmbedding assemble_atlas(std::string model, const FlatTorus& torus, int ambient_dim,
                           std::vector<FaceChart> charts) {
  PLEmbedding e{std::move(model), torus, ambient_dim, std::move(charts), {}, {}};
  const double s = torus.side();

  std::map<std::pair<long long, long long>, int> vertex_ids;
  std::map<std::tuple<int, long long, long long>, int> edge_ids;

  for (std::size_t f = 0; f < e.charts.size(); ++f) {
    const FaceChart& c = e.charts[f];
    if (c.dim() != ambient_dim) throw StructuralError("chart dimension does not match atlas");
    if (!(c.domain.area() > 0.0)) throw StructuralError("chart domain must have positive area");
    const Rect& d = c.domain;
    const Point2 corners[4] = {{d.u0, d.v0}, {d.u1, d.v0}, {d.u1, d.v1}, {d.u0, d.v1}};
    int ids[4];
    for (int i = 0; i < 4; ++i) {
      const Point2 p = corners[i];
      const auto key = std::make_pair(quantize(p.u, s), quantize(p.v, s));
      auto [it, inserted] = vertex_ids.try_emplace(key, static_cast<int>(e.vertices.size()));
      if (inserted) {
        e.vertices.push_back(Vertex{it->second, canonicalize(p, torus), c.evaluate(p.u, p.v), {}});
      }
      ids[i] = it->second;
      e.vertices[ids[i]].corners.push_back(
          VertexCorner{static_cast<int>(f), p, corners[(i + 3) % 4], corners[(i + 1) % 4]});
    }
    for (int i = 0; i < 4; ++i) {
      const Point2 a = corners[i];
      const Point2 b = corners[(i + 1) % 4];
      const int horizontal = (i % 2 == 0) ? 1 : 0;
      const auto key = std::make_tuple(horizontal, quantize(0.5 * (a.u + b.u), s), quantize(0.5 * (a.v + b.v), s));
      auto [it, inserted] = edge_ids.try_emplace(key, static_cast<int>(e.edges.size()));
      if (inserted) e.edges.push_back(Edge{it->second, ids[i], ids[(i + 1) % 4], {}});
      e.edges[it->second].sides.push_back(EdgeSide{static_cast<int>(f), a, b});
    }
  }
  return e;
}

PLEmbedding build_prism_torus(int n, const FlatTorus& torus) {
  if (n < 3) throw InvalidArgument("prism torus needs N >= 3");
  const double s = torus.side();
  const double h = 0.5 * s;
  const Ambient up = vec3(0.0, 0.0, 1.0);
  const Ambient down = vec3(0.0, 0.0, -1.0);

  std::vector<FaceChart> charts(2 * static_cast<std::size_t>(n));
  Ambient corner = vec3(0.0, 0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const double u0 = (k * s) / n;
    const double u1 = ((k + 1) * s) / n;
    Ambient dir;
    if ((4 * k) % n == 0) {
      constexpr double kQuarter[4][2] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
      const int q = (4 * k) / n;
      dir = vec3(kQuarter[q][0], kQuarter[q][1], 0.0);
    } else {
      const double turn = 2.0 * std::numbers::pi * k / n;
      dir = vec3(std::cos(turn), std::sin(turn), 0.0);
    }

    charts[k] = FaceChart{k, {u0, 0.0, u1, h}, corner, dir, up, SideTag::kExterior};
    charts[n + k] = FaceChart{n + k, {u0, h, u1, s}, corner + h * up, dir, down, SideTag::kInterior};
    corner = corner + (u1 - u0) * dir;
  }
  std::string name = n == 4 ? "box" : "prism" + std::to_string(n);
  return assemble_atlas(std::move(name), torus, 3, std::move(charts));
}

std::array<double, 2> unit_square_walk(double s) {
  if (s <= 1.0) return {s, 0.0};
  if (s <= 2.0) return {1.0, s - 1.0};
  if (s <= 3.0) return {3.0 - s, 1.0};
  return {0.0, 4.0 - s};
}

PLEmbedding build_tesseract_torus() {
  const FlatTorus torus(4.0);
  const std::array<std::array<double, 2>, 4> heading = {{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
  std::vector<FaceChart> charts;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto gu = unit_square_walk(i);
      const auto gv = unit_square_walk(j);
      charts.push_back(FaceChart{i * 4 + j,
                                 {double(i), double(j), double(i + 1), double(j + 1)},
                                 vec4(gu[0], gu[1], gv[0], gv[1]),
                                 vec4(heading[i][0], heading[i][1], 0.0, 0.0),
                                 vec4(0.0, 0.0, heading[j][0], heading[j][1]),
                                 SideTag::kPlanar});
    }
  }
  return assemble_atlas("tesseract", torus, 4, std::move(charts));
}

PLEmbedding build_flat_folded_torus(const FlatTorus& torus) {
  const double s = torus.side();
  // x(u): slopes -1, +1, -1 with creases at S/4 and 3S/4; y(v): sleeve creases at 0 and S/2.
  const double ub[4] = {0.0, 0.25 * s, 0.75 * s, s};
  const double x0[3] = {0.5 * s, 0.25 * s, 0.75 * s};
  const double sx[3] = {-1.0, 1.0, -1.0};
  const double vb[3] = {0.0, 0.5 * s, s};
  const double y0[2] = {0.0, 0.5 * s};
  const double sy[2] = {1.0, -1.0};

  std::vector<FaceChart> charts;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 3; ++i) {
      charts.push_back(FaceChart{j * 3 + i,
                                 {ub[i], vb[j], ub[i + 1], vb[j + 1]},
                                 vec3(x0[i], y0[j], 0.0),
                                 vec3(sx[i], 0.0, 0.0),
                                 vec3(0.0, sy[j], 0.0),
                                 SideTag::kPlanar});
    }
  }
  return assemble_atlas("flatfold", torus, 3, std::move(charts));
}

PLEmbedding build_square_patch(const FlatTorus& torus, Rect domain) {
  std::vector<FaceChart> charts{FaceChart{0, domain, vec3(domain.u0, domain.v0, 0.0), vec3(1.0, 0.0, 0.0),
                                          vec3(0.0, 1.0, 0.0), SideTag::kPlanar}};
  return assemble_atlas("patch", torus, 3, std::move(charts));
}

Ambient SmoothChart::evaluate(double u, double v) const {
  if (kind == SmoothKind::kClifford) {
    return vec4(radius * std::sin(u / radius), radius * std::cos(u / radius), radius * std::sin(v / radius),
                radius * std::cos(v / radius));
  }
  const double z = side == SideTag::kInterior ? 2.0 * height - v : v;
  return vec3(radius * std::cos(u / radius), radius * std::sin(u / radius), z);
}

SmoothEmbedding build_cylinder_torus(const FlatTorus& torus) {
  const double s = torus.side();
  const double r = s / (2.0 * std::numbers::pi);
  const double h = 0.5 * s;
  return SmoothEmbedding{"cylinder",
                         torus,
                         3,
                         {SmoothChart{0, SmoothKind::kCylinder, r, h, {0.0, 0.0, s, h}, SideTag::kExterior},
                          SmoothChart{1, SmoothKind::kCylinder, r, h, {0.0, h, s, s}, SideTag::kInterior}}};
}

SmoothEmbedding build_clifford_torus(const FlatTorus& torus) {
  const double s = torus.side();
  const double r = s / (2.0 * std::numbers::pi);
  return SmoothEmbedding{
      "clifford", torus, 4, {SmoothChart{0, SmoothKind::kClifford, r, 0.0, {0.0, 0.0, s, s}, SideTag::kPlanar}}};
}

namespace {

template <class Chart>
const Chart* find_chart(const std::vector<Chart>& charts, double u, double v) {
  for (const Chart& c : charts) {
    if (c.domain.contains(u, v)) return &c;
  }
  return nullptr;
}

template <class Chart>
void collect_grid_lines(const std::vector<Chart>& charts, std::vector<double>& us, std::vector<double>& vs) {
  for (const Chart& c : charts) {
    us.push_back(c.domain.u0);
    us.push_back(c.domain.u1);
    vs.push_back(c.domain.v0);
    vs.push_back(c.domain.v1);
  }
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Parameters in (0,1) where the segment p0 -> p1 crosses one of the grid lines,
// bracketed by 0 and 1.
std::vector<double> split_parameters(Point2 p0, Point2 p1, const std::vector<double>& us,
                                     const std::vector<double>& vs) {
  std::vector<double> ts{0.0, 1.0};
  const double du = p1.u - p0.u;
  const double dv = p1.v - p0.v;
  if (du != 0.0) {
    for (double line : us) {
      const double t = (line - p0.u) / du;
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  }
  if (dv != 0.0) {
    for (double line : vs) {
      const double t = (line - p0.v) / dv;
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts) {
    if (out.empty() || t - out.back() > 1e-14) out.push_back(t);
  }
  out.back() = 1.0;
  return out;
}

Point2 lerp(Point2 p0, Point2 p1, double t) {
  if (t == 0.0) return p0;
  if (t == 1.0) return p1;
  return {p0.u + t * (p1.u - p0.u), p0.v + t * (p1.v - p0.v)};
}

struct SubSegment {
  Point2 a;
  Point2 b;
  double length;
};

template <class Chart>
std::vector<std::pair<SubSegment, const Chart*>> subdivide(const std::vector<Chart>& charts,
                                                           const TorusPolyline& line) {
  std::vector<double> us;
  std::vector<double> vs;
  collect_grid_lines(charts, us, vs);
  std::vector<std::pair<SubSegment, const Chart*>> out;
  for (const PolylinePiece& piece : line.pieces) {
    const std::vector<double> ts = split_parameters(piece.start, piece.end, us, vs);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const Point2 a = lerp(piece.start, piece.end, ts[i]);
      const Point2 b = lerp(piece.start, piece.end, ts[i + 1]);
      const Point2 mid{0.5 * (a.u + b.u), 0.5 * (a.v + b.v)};
      const Chart* chart = find_chart(charts, mid.u, mid.v);
      if (chart == nullptr) throw StructuralError("atlas gap: no chart contains a polyline sample");
      out.push_back({SubSegment{a, b, std::hypot(b.u - a.u, b.v - a.v)}, chart});
    }
  }
  return out;
}

// Scratch buffers for sampling smooth charts.
struct SmoothScratch {
  std::vector<double> angle_u, angle_v, sin_u, cos_u, sin_v, cos_v, vv;
  std::array<std::vector<double>, 4> coords;
  std::vector<double> chords;
};

double sample_smooth(const SmoothChart& chart, Point2 a, Point2 b, int m, SmoothScratch& s,
                     std::vector<Ambient>* points) {
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  s.angle_u.resize(n);
  s.angle_v.resize(n);
  s.vv.resize(n);
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  const double r = chart.radius;
  const double inv_r = 1.0 / r;
  const double step = 1.0 / m;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * step;
    const double u = a.u + du * t;
    const double v = a.v + dv * t;
    s.angle_u[k] = u * inv_r;
    s.angle_v[k] = v * inv_r;
    s.vv[k] = v;
  }
  for (auto& c : s.coords) c.resize(n);
  s.sin_u.resize(n);
  s.cos_u.resize(n);
  kernels::sincos(s.angle_u, s.sin_u, s.cos_u);
  int dim = 3;
  if (chart.kind == SmoothKind::kClifford) {
    dim = 4;
    s.sin_v.resize(n);
    s.cos_v.resize(n);
    kernels::sincos(s.angle_v, s.sin_v, s.cos_v);
    for (std::size_t k = 0; k < n; ++k) {
      s.coords[0][k] = r * s.sin_u[k];
      s.coords[1][k] = r * s.cos_u[k];
      s.coords[2][k] = r * s.sin_v[k];
      s.coords[3][k] = r * s.cos_v[k];
    }
  } else {
    const bool interior = chart.side == SideTag::kInterior;
    for (std::size_t k = 0; k < n; ++k) {
      s.coords[0][k] = r * s.cos_u[k];
      s.coords[1][k] = r * s.sin_u[k];
      s.coords[2][k] = interior ? 2.0 * chart.height - s.vv[k] : s.vv[k];
    }
  }
  s.chords.resize(n - 1);
  kernels::chord_lengths(dim, {s.coords[0], s.coords[1], s.coords[2], s.coords[3]}, s.chords);
  double length = 0.0;
  for (double c : s.chords) length += c;
  if (points != nullptr) {
    for (std::size_t k = points->empty() ? 0 : 1; k < n; ++k) {
      Ambient p(dim);
      for (int d = 0; d < dim; ++d) p[d] = s.coords[d][k];
      points->push_back(p);
    }
  }
  return length;
}

double map_smooth(const SmoothEmbedding& e, const TorusPolyline& line, int subdivisions, AmbientPolyline* out) {
  if (subdivisions < 1) throw InvalidArgument("subdivisions must be positive");
  thread_local SmoothScratch scratch;
  const auto segments = subdivide(e.charts, line);
  double intrinsic = 0.0;
  for (const auto& [seg, chart] : segments) intrinsic += seg.length;
  double length = 0.0;
  for (const auto& [seg, chart] : segments) {
    if (seg.length == 0.0) {
      if (out != nullptr && out->points.empty()) out->points.push_back(chart->evaluate(seg.a.u, seg.a.v));
      continue;
    }
    const int m = std::max(1, static_cast<int>(std::llround(subdivisions * seg.length / intrinsic)));
    length += sample_smooth(*chart, seg.a, seg.b, m, scratch, out != nullptr ? &out->points : nullptr);
    if (out != nullptr) out->sides.insert(out->sides.end(), static_cast<std::size_t>(m), chart->side);
  }
  return length;
}

}  // namespace

AmbientPoint map_point(const PLEmbedding& e, TorusPoint p) {
  const FaceChart* c = find_chart(e.charts, p.u, p.v);
  if (c == nullptr) throw StructuralError("atlas gap: no chart contains the point");
  return {c->evaluate(p.u, p.v), c->side, c->id};
}

AmbientPoint map_point(const SmoothEmbedding& e, TorusPoint p) {
  const SmoothChart* c = find_chart(e.charts, p.u, p.v);
  if (c == nullptr) throw StructuralError("atlas gap: no chart contains the point");
  return {c->evaluate(p.u, p.v), c->side, c->id};
}

AmbientPolyline map_polyline(const PLEmbedding& e, const TorusPolyline& line) {
  AmbientPolyline out;
  out.dim = e.ambient_dim;
  for (const auto& [seg, chart] : subdivide(e.charts, line)) {
    const Ambient a = chart->evaluate(seg.a.u, seg.a.v);
    const Ambient b = chart->evaluate(seg.b.u, seg.b.v);
    if (out.points.empty()) out.points.push_back(a);
    out.points.push_back(b);
    out.sides.push_back(chart->side);
    out.length += (b - a).norm();
  }
  return out;
}

AmbientPolyline map_polyline(const SmoothEmbedding& e, const TorusPolyline& line, int subdivisions) {
  AmbientPolyline out;
  out.dim = e.ambient_dim;
  out.length = map_smooth(e, line, subdivisions, &out);
  return out;
}

double ambient_length(const PLEmbedding& e, const TorusPolyline& line) {
  double length = 0.0;
  for (const auto& [seg, chart] : subdivide(e.charts, line)) {
    length += (chart->evaluate(seg.b.u, seg.b.v) - chart->evaluate(seg.a.u, seg.a.v)).norm();
  }
  return length;
}

double ambient_length(const SmoothEmbedding& e, const TorusPolyline& line, int subdivisions) {
  return map_smooth(e, line, subdivisions, nullptr);
}

}  // namespace flattorus
