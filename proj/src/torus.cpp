#include "flattorus/torus.hpp"

#include <algorithm>
#include <limits>

#include "flattorus/errors.hpp"

namespace flattorus {

FlatTorus::FlatTorus(double side) : side_(side) {
  if (!std::isfinite(side) || side <= 0.0) {
    throw InvalidArgument("torus side must be finite and positive");
  }
}

namespace {

double wrap(double x, double s) {
  double r = std::fmod(x, s);
  if (r < 0.0) r += s;
  // r + s can round up to exactly s for tiny negative r.
  if (r >= s) r = 0.0;
  if (r == 0.0) r = 0.0;  // drop the sign of -0.0
  return r;
}

struct Crossing {
  double t;
  bool u;
  bool v;
};

// Parameters t in (0,1) where a + t*d hits a multiple of s along one axis.
void axis_crossings(double a, double d, double s, bool is_u, std::vector<Crossing>& out) {
  if (d == 0.0) return;
  const double e = a + d;
  const double lo = std::min(a, e);
  const double hi = std::max(a, e);
  const auto k0 = static_cast<long long>(std::ceil(lo / s));
  const auto k1 = static_cast<long long>(std::floor(hi / s));
  for (long long k = k0; k <= k1; ++k) {
    const double t = (static_cast<double>(k) * s - a) / d;
    if (t > 0.0 && t < 1.0) out.push_back({t, is_u, !is_u});
  }
}

double snap_to_seam(double x, double s) { return std::round(x / s) * s; }

}  // namespace

TorusPoint canonicalize(double u, double v, const FlatTorus& torus) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw InvalidArgument("cannot canonicalize non-finite torus coordinates");
  }
  return {wrap(u, torus.side()), wrap(v, torus.side())};
}

TorusVector minimal_displacement(TorusPoint a, TorusPoint b, const FlatTorus& torus) {
  const double s = torus.side();
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  TorusVector best{};
  double best_sq = std::numeric_limits<double>::infinity();
  // Lexicographic (k, l) order plus strict comparison keeps the smallest tied offset.
  for (int k = -1; k <= 1; ++k) {
    for (int l = -1; l <= 1; ++l) {
      const TorusVector c{du + k * s, dv + l * s};
      const double sq = c.du * c.du + c.dv * c.dv;
      if (sq < best_sq) {
        best_sq = sq;
        best = c;
      }
    }
  }
  return best;
}

double torus_distance(TorusPoint a, TorusPoint b, const FlatTorus& torus) {
  return minimal_displacement(a, b, torus).norm();
}

TorusPolyline trace_geodesic(TorusPoint a, TorusVector d, const FlatTorus& torus) {
  const double s = torus.side();
  TorusPolyline line;
  if (d.du == 0.0 && d.dv == 0.0) {
    line.pieces.push_back({{a.u, a.v}, {a.u, a.v}, false, false});
    return line;
  }

  std::vector<Crossing> events;
  axis_crossings(a.u, d.du, s, true, events);
  axis_crossings(a.v, d.dv, s, false, events);
  std::sort(events.begin(), events.end(), [](const Crossing& x, const Crossing& y) { return x.t < y.t; });

  // Merge a u- and a v-crossing that land on the same corner.
  std::vector<Crossing> merged;
  for (const Crossing& c : events) {
    if (!merged.empty() && c.t - merged.back().t <= 1e-14) {
      merged.back().u = merged.back().u || c.u;
      merged.back().v = merged.back().v || c.v;
    } else {
      merged.push_back(c);
    }
  }

  auto at = [&](double t) { return Point2{a.u + t * d.du, a.v + t * d.dv}; };

  double t0 = 0.0;
  bool start_u = false;
  bool start_v = false;
  for (std::size_t i = 0; i <= merged.size(); ++i) {
    const bool last = i == merged.size();
    const double t1 = last ? 1.0 : merged[i].t;
    const Point2 mid = at(0.5 * (t0 + t1));
    const double off_u = std::floor(mid.u / s) * s;
    const double off_v = std::floor(mid.v / s) * s;

    Point2 p0 = at(t0);
    Point2 p1 = last ? Point2{a.u + d.du, a.v + d.dv} : at(t1);
    p0 = {p0.u - off_u, p0.v - off_v};
    p1 = {p1.u - off_u, p1.v - off_v};
    if (i == 0) p0 = {a.u - off_u, a.v - off_v};
    if (start_u) p0.u = snap_to_seam(p0.u, s);
    if (start_v) p0.v = snap_to_seam(p0.v, s);
    PolylinePiece piece{p0, p1, false, false};
    if (!last) {
      piece.wraps_u = merged[i].u;
      piece.wraps_v = merged[i].v;
      if (piece.wraps_u) piece.end.u = snap_to_seam(p1.u, s);
      if (piece.wraps_v) piece.end.v = snap_to_seam(p1.v, s);
      start_u = merged[i].u;
      start_v = merged[i].v;
    }
    line.length += piece.length();
    line.pieces.push_back(piece);
    t0 = t1;
  }
  return line;
}

TorusPolyline geodesic_segment(TorusPoint a, TorusPoint b, const FlatTorus& torus) {
  return trace_geodesic(a, minimal_displacement(a, b, torus), torus);
}

TorusPoint advance(TorusPoint p, TorusVector velocity, double dt, const FlatTorus& torus) {
  if (!(dt >= 0.0)) throw InvalidArgument("advance requires dt >= 0");
  return canonicalize(p.u + velocity.du * dt, p.v + velocity.dv * dt, torus);
}

}  // namespace flattorus
