#pragma once

// Intrinsic geometry of the flat square torus [0,S)^2 with opposite edges identified.

#include <cmath>
#include <vector>

namespace flattorus {

/// Planar point in the universal cover (unwrapped torus coordinates).
struct Point2 {
  double u = 0.0;
  double v = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// A point of the torus in canonical form: 0 <= u < S, 0 <= v < S.
struct TorusPoint {
  double u = 0.0;
  double v = 0.0;
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

struct TorusVector {
  double du = 0.0;
  double dv = 0.0;

  double norm() const { return std::hypot(du, dv); }
  friend bool operator==(const TorusVector&, const TorusVector&) = default;
};

class FlatTorus {
 public:
  explicit FlatTorus(double side = 4.0);

  double side() const { return side_; }
  double half() const { return 0.5 * side_; }

 private:
  double side_;
};

/// One straight run of a geodesic inside the closed fundamental square [0,S]^2.
/// `wraps_u` / `wraps_v` mark that the run ends on the u / v wrap seam and the
/// next run starts on the opposite side.
struct PolylinePiece {
  Point2 start;
  Point2 end;
  bool wraps_u = false;
  bool wraps_v = false;

  double length() const { return std::hypot(end.u - start.u, end.v - start.v); }
};

/// A geodesic on the torus folded back into the fundamental domain.
struct TorusPolyline {
  std::vector<PolylinePiece> pieces;
  double length = 0.0;
};

/// Quotient representative of (u, v). Throws InvalidArgument on non-finite input.
TorusPoint canonicalize(double u, double v, const FlatTorus& torus);
inline TorusPoint canonicalize(Point2 p, const FlatTorus& torus) { return canonicalize(p.u, p.v, torus); }

/// Displacement from `a` to the nearest image of `b`.
/// Candidates (b - a) + (k, l) * S for k, l in {-1, 0, 1}; exact ties go to the
/// lexicographically smallest (k, l).
TorusVector minimal_displacement(TorusPoint a, TorusPoint b, const FlatTorus& torus);

/// Intrinsic (flat) distance between two canonical points.
double torus_distance(TorusPoint a, TorusPoint b, const FlatTorus& torus);

/// Straight line from `a` along the lifted displacement `d`, folded back into
/// [0,S]^2 and split exactly at each wrap crossing. `d` may be longer than S,
/// which traces closed loops such as a full equator.
TorusPolyline trace_geodesic(TorusPoint a, TorusVector d, const FlatTorus& torus);

/// Shortest geodesic from `a` to `b` (straight line to the closest image of `b`).
TorusPolyline geodesic_segment(TorusPoint a, TorusPoint b, const FlatTorus& torus);

/// Geodesic motion for time `dt`; dt must be >= 0.
TorusPoint advance(TorusPoint p, TorusVector velocity, double dt, const FlatTorus& torus);

}  // namespace flattorus
