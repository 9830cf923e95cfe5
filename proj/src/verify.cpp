#include "flattorus/verify.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "flattorus/errors.hpp"
#include "flattorus/kernels.hpp"

namespace flattorus {

CellCounts count_cells(const PLEmbedding& e) {
  CellCounts c;
  c.faces = static_cast<int>(e.charts.size());
  c.edges = static_cast<int>(e.edges.size());
  c.vertices = static_cast<int>(e.vertices.size());
  c.chi = c.faces - c.edges + c.vertices;
  for (const Edge& edge : e.edges) {
    if (edge.sides.size() == 1) ++c.boundary_edges;
    if (edge.sides.size() > 2) ++c.nonmanifold_edges;
  }
  return c;
}

TopologyReport topology_report(const PLEmbedding& e) {
  const CellCounts c = count_cells(e);
  if (c.boundary_edges != 0 || c.nonmanifold_edges != 0) {
    throw StructuralError("topology_report: every edge must border exactly two faces (" +
                          std::to_string(c.boundary_edges) + " boundary, " + std::to_string(c.nonmanifold_edges) +
                          " non-manifold)");
  }
  if (c.chi % 2 != 0) throw StructuralError("topology_report: odd Euler characteristic");
  return {c.faces, c.edges, c.vertices, c.chi, 1 - c.chi / 2};
}

std::vector<VertexCurvatureReport> angle_deficits(const PLEmbedding& e) {
  std::vector<VertexCurvatureReport> out;
  out.reserve(e.vertices.size());
  for (const Vertex& vtx : e.vertices) {
    VertexCurvatureReport r{vtx.id, vtx.uv, static_cast<int>(vtx.corners.size()), 0.0, 0.0};
    for (const VertexCorner& corner : vtx.corners) {
      const FaceChart& chart = e.charts[corner.face];
      const Ambient p = chart.evaluate(corner.corner.u, corner.corner.v);
      const Ambient a = chart.evaluate(corner.prev.u, corner.prev.v) - p;
      const Ambient b = chart.evaluate(corner.next.u, corner.next.v) - p;
      const double ax = a.dot(chart.frame_u);
      const double ay = a.dot(chart.frame_v);
      const double bx = b.dot(chart.frame_u);
      const double by = b.dot(chart.frame_v);
      r.angle_sum += std::atan2(std::fabs(ax * by - ay * bx), ax * bx + ay * by);
    }
    r.deficit = 2.0 * std::numbers::pi - r.angle_sum;
    out.push_back(r);
  }
  return out;
}

namespace {

// Unit ambient direction, perpendicular to the edge, pointing from the edge into the face.
Eigen::Vector3d inward_direction(const FaceChart& chart, const EdgeSide& side) {
  const Rect& d = chart.domain;
  const Point2 centre{0.5 * (d.u0 + d.u1), 0.5 * (d.v0 + d.v1)};
  const Point2 mid{0.5 * (side.a.u + side.b.u), 0.5 * (side.a.v + side.b.v)};
  const Eigen::Vector3d a = chart.evaluate(side.a.u, side.a.v).head<3>();
  const Eigen::Vector3d b = chart.evaluate(side.b.u, side.b.v).head<3>();
  const Eigen::Vector3d m = chart.evaluate(mid.u, mid.v).head<3>();
  const Eigen::Vector3d c = chart.evaluate(centre.u, centre.v).head<3>();
  const Eigen::Vector3d along = (b - a).normalized();
  Eigen::Vector3d in = c - m;
  in -= in.dot(along) * along;
  return in.normalized();
}

bool same_torus_point(Point2 a, Point2 b, const FlatTorus& torus) {
  return torus_distance(canonicalize(a, torus), canonicalize(b, torus), torus) < 1e-9;
}

Point2 lerp(Point2 a, Point2 b, double t) { return {a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)}; }

struct Side {
  Point2 a;
  Point2 b;
};

std::array<Side, 4> rect_sides(const Rect& d) {
  return {{{{d.u0, d.v0}, {d.u1, d.v0}}, {{d.u1, d.v0}, {d.u1, d.v1}}, {{d.u1, d.v1}, {d.u0, d.v1}},
           {{d.u0, d.v1}, {d.u0, d.v0}}}};
}

template <class EvalA, class EvalB>
double max_gap(EvalA&& eval_a, Side sa, EvalB&& eval_b, Side sb, int samples, const FlatTorus& torus) {
  // Orient sb like sa. Endpoints can coincide on the torus (a side spanning the
  // whole period), so compare an interior point.
  if (!same_torus_point(lerp(sa.a, sa.b, 0.25), lerp(sb.a, sb.b, 0.25), torus)) std::swap(sb.a, sb.b);
  double gap = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = samples == 1 ? 0.5 : static_cast<double>(k) / (samples - 1);
    const Point2 pa = lerp(sa.a, sa.b, t);
    const Point2 pb = lerp(sb.a, sb.b, t);
    gap = std::max(gap, (eval_a(pa) - eval_b(pb)).norm());
  }
  return gap;
}

}  // namespace

std::vector<DihedralReport> dihedral_report(const PLEmbedding& e) {
  if (e.ambient_dim != 3) throw UnsupportedDimension("dihedral_report needs a 3D embedding");
  std::vector<DihedralReport> out;
  for (const Edge& edge : e.edges) {
    if (edge.sides.size() != 2) continue;
    const EdgeSide& s0 = edge.sides[0];
    const EdgeSide& s1 = edge.sides[1];
    const Eigen::Vector3d d0 = inward_direction(e.charts[s0.face], s0);
    const Eigen::Vector3d d1 = inward_direction(e.charts[s1.face], s1);
    const double rad = std::atan2(d0.cross(d1).norm(), d0.dot(d1));
    out.push_back({edge.id, s0.face, s1.face, rad * 180.0 / std::numbers::pi});
  }
  return out;
}

double continuity_check(const PLEmbedding& e, int samples) {
  if (samples < 1) throw InvalidArgument("continuity_check needs at least one sample");
  double gap = 0.0;
  for (const Edge& edge : e.edges) {
    for (std::size_t i = 0; i < edge.sides.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.sides.size(); ++j) {
        const FaceChart& ca = e.charts[edge.sides[i].face];
        const FaceChart& cb = e.charts[edge.sides[j].face];
        gap = std::max(gap, max_gap([&](Point2 p) { return ca.evaluate(p.u, p.v); },
                                    Side{edge.sides[i].a, edge.sides[i].b},
                                    [&](Point2 p) { return cb.evaluate(p.u, p.v); },
                                    Side{edge.sides[j].a, edge.sides[j].b}, samples, e.torus));
      }
    }
  }
  return gap;
}

double continuity_check(const SmoothEmbedding& e, int samples) {
  if (samples < 1) throw InvalidArgument("continuity_check needs at least one sample");
  double gap = 0.0;
  for (std::size_t ia = 0; ia < e.charts.size(); ++ia) {
    const auto sides_a = rect_sides(e.charts[ia].domain);
    for (std::size_t ib = ia; ib < e.charts.size(); ++ib) {
      const auto sides_b = rect_sides(e.charts[ib].domain);
      for (int sa = 0; sa < 4; ++sa) {
        for (int sb = 0; sb < 4; ++sb) {
          if (ia == ib && sb <= sa) continue;
          const Side a = sides_a[sa];
          const Side b = sides_b[sb];
          const Point2 qa = lerp(a.a, a.b, 0.25);
          const bool match = same_torus_point(lerp(a.a, a.b, 0.5), lerp(b.a, b.b, 0.5), e.torus) &&
                             (same_torus_point(qa, lerp(b.a, b.b, 0.25), e.torus) ||
                              same_torus_point(qa, lerp(b.a, b.b, 0.75), e.torus));
          if (!match) continue;
          const SmoothChart& ca = e.charts[ia];
          const SmoothChart& cb = e.charts[ib];
          gap = std::max(gap, max_gap([&](Point2 p) { return ca.evaluate(p.u, p.v); }, a,
                                      [&](Point2 p) { return cb.evaluate(p.u, p.v); }, b, samples, e.torus));
        }
      }
    }
  }
  return gap;
}

namespace {

struct PairSample {
  std::vector<double> au, av, bu, bv, distance;
};

PairSample sample_pairs(const FlatTorus& torus, int n, std::uint64_t seed) {
  if (n <= 0) throw InvalidArgument("isometry_check needs n_samples > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, torus.side());
  PairSample s;
  for (auto* v : {&s.au, &s.av, &s.bu, &s.bv, &s.distance}) v->resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const TorusPoint a = canonicalize(coord(rng), coord(rng), torus);
    const TorusPoint b = canonicalize(coord(rng), coord(rng), torus);
    s.au[i] = a.u;
    s.av[i] = a.v;
    s.bu[i] = b.u;
    s.bv[i] = b.v;
  }
  kernels::torus_distances(torus.side(), s.au, s.av, s.bu, s.bv, s.distance);
  return s;
}

double relative_error(double measured, double expected) {
  if (expected == 0.0) return std::fabs(measured);
  return std::fabs(measured - expected) / expected;
}

template <class LengthFn>
double max_isometry_error(const FlatTorus& torus, int n, std::uint64_t seed, LengthFn&& length_of) {
  const PairSample s = sample_pairs(torus, n, seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const TorusPolyline line = geodesic_segment({s.au[i], s.av[i]}, {s.bu[i], s.bv[i]}, torus);
    worst = std::max(worst, relative_error(length_of(line), s.distance[i]));
  }
  return worst;
}

}  // namespace

double isometry_check(const PLEmbedding& e, int n_samples, std::uint64_t seed) {
  return max_isometry_error(e.torus, n_samples, seed,
                            [&](const TorusPolyline& line) { return ambient_length(e, line); });
}

double isometry_check(const SmoothEmbedding& e, int n_samples, std::uint64_t seed, int subdivisions) {
  return max_isometry_error(e.torus, n_samples, seed,
                            [&](const TorusPolyline& line) { return ambient_length(e, line, subdivisions); });
}

MetricSample first_fundamental_form(const SmoothChart& chart, double u, double v, double step) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const Ambient xu = (chart.evaluate(u + step, v) - chart.evaluate(u - step, v)) / (2.0 * step);
  const Ambient xv = (chart.evaluate(u, v + step) - chart.evaluate(u, v - step)) / (2.0 * step);
  return {xu.dot(xu), xu.dot(xv), xv.dot(xv)};
}

double metric_check(const SmoothChart& chart, int grid, double step) {
  if (grid < 1) throw InvalidArgument("metric_check grid must be positive");
  const Rect& d = chart.domain;
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double u = d.u0 + (i + 0.5) * (d.u1 - d.u0) / grid;
      const double v = d.v0 + (j + 0.5) * (d.v1 - d.v0) / grid;
      const MetricSample m = first_fundamental_form(chart, u, v, step);
      worst = std::max({worst, std::fabs(m.e_ff - 1.0), std::fabs(m.f_ff), std::fabs(m.g_ff - 1.0)});
    }
  }
  return worst;
}

}  // namespace flattorus
