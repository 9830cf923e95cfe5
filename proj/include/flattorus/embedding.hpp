#pragma once

// Chart atlases realizing the flat square torus in 3D or 4D Euclidean space.
//
// A piecewise-linear embedding is a list of rectangular FaceCharts, each an
// affine isometry (u, v) -> origin + (u - u0) * frame_u + (v - v0) * frame_v.
// Smooth embeddings (doubled cylinder, Clifford torus) use analytic charts.

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "flattorus/torus.hpp"

namespace flattorus {

/// Up to four ambient coordinates, stored inline.
using Ambient = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;

/// Which side of a zero-thickness sheet a chart shows. Exterior and interior
/// charts of an envelope may occupy the same ambient plane back to back;
/// planar marks a chart without such a partner.
enum class SideTag { kExterior, kInterior, kPlanar };

const char* side_tag_name(SideTag tag);
SideTag parse_side_tag(const std::string& name);
SideTag opposite(SideTag tag);

struct Rect {
  double u0 = 0.0;
  double v0 = 0.0;
  double u1 = 0.0;
  double v1 = 0.0;

  bool contains(double u, double v) const { return u >= u0 && u <= u1 && v >= v0 && v <= v1; }
  double area() const { return (u1 - u0) * (v1 - v0); }
};

struct FaceChart {
  int id = 0;
  Rect domain;
  Ambient origin;
  Ambient frame_u;
  Ambient frame_v;
  SideTag side = SideTag::kPlanar;

  Ambient evaluate(double u, double v) const {
    return origin + (u - domain.u0) * frame_u + (v - domain.v0) * frame_v;
  }
  int dim() const { return static_cast<int>(origin.size()); }
};

struct AmbientPoint {
  Ambient x;
  SideTag side = SideTag::kPlanar;
  int chart = -1;
};

/// A face corner as seen from one incident chart, in that chart's (lifted)
/// coordinates, together with the two neighbouring corners of the rectangle.
struct VertexCorner {
  int face = 0;
  Point2 corner;
  Point2 prev;
  Point2 next;
};

struct Vertex {
  int id = 0;
  TorusPoint uv;
  Ambient position;
  std::vector<VertexCorner> corners;
};

/// One incidence of an edge with a face: endpoints in that face's chart coordinates.
struct EdgeSide {
  int face = 0;
  Point2 a;
  Point2 b;
};

struct Edge {
  int id = 0;
  int v0 = 0;
  int v1 = 0;
  std::vector<EdgeSide> sides;
};

struct PLEmbedding {
  std::string model;
  FlatTorus torus;
  int ambient_dim = 3;
  std::vector<FaceChart> charts;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Derives vertex and edge incidence from the chart rectangles. Corners and
/// sides are identified modulo the torus period.
PLEmbedding assemble_atlas(std::string model, const FlatTorus& torus, int ambient_dim,
                           std::vector<FaceChart> charts);

/// Open-ended regular N-gon prism with back-to-back exterior and interior walls.
/// Walls are S/N wide and S/2 tall; N = 4 is the stretched box.
PLEmbedding build_prism_torus(int n, const FlatTorus& torus);
inline PLEmbedding build_box_torus(const FlatTorus& torus = FlatTorus{}) { return build_prism_torus(4, torus); }

/// 16 unit squares of the tesseract [0,1]^4 swept by (perimeter walk) x (perimeter walk). S is 4.
PLEmbedding build_tesseract_torus();

/// Sleeve folded flat and its ends folded inward: a four-layer square in the plane z = 0.
PLEmbedding build_flat_folded_torus(const FlatTorus& torus);

/// A single rectangular patch: not a torus, used to sanity-check cell counting.
PLEmbedding build_square_patch(const FlatTorus& torus, Rect domain);

/// Perimeter walk of the unit square at arc length s in [0, 4].
std::array<double, 2> unit_square_walk(double s);

enum class SmoothKind { kCylinder, kClifford };

struct SmoothChart {
  int id = 0;
  SmoothKind kind = SmoothKind::kCylinder;
  double radius = 0.0;  // r
  double height = 0.0;  // h; cylinder only
  Rect domain;
  SideTag side = SideTag::kPlanar;

  Ambient evaluate(double u, double v) const;
  int dim() const { return kind == SmoothKind::kClifford ? 4 : 3; }
};

struct SmoothEmbedding {
  std::string model;
  FlatTorus torus;
  int ambient_dim = 3;
  std::vector<SmoothChart> charts;
};

/// Doubled cylinder: circumference S, height S/2, exterior for v <= S/2, interior above.
SmoothEmbedding build_cylinder_torus(const FlatTorus& torus);

/// x^2 + y^2 = z^2 + w^2 = r^2 with r = S / (2 pi).
SmoothEmbedding build_clifford_torus(const FlatTorus& torus);

/// Torus side whose Clifford radius is r.
inline FlatTorus torus_for_clifford_radius(double r) { return FlatTorus{2.0 * 3.14159265358979323846 * r}; }

/// Evaluates the lowest-id chart containing p. Throws StructuralError on an atlas gap.
AmbientPoint map_point(const PLEmbedding& e, TorusPoint p);
AmbientPoint map_point(const SmoothEmbedding& e, TorusPoint p);

struct AmbientPolyline {
  int dim = 3;
  std::vector<Ambient> points;
  std::vector<SideTag> sides;  // one per segment
  double length = 0.0;
};

/// Splits every run at chart boundaries and maps each sub-segment through its chart.
AmbientPolyline map_polyline(const PLEmbedding& e, const TorusPolyline& line);

/// Samples each sub-segment with its share of `subdivisions` chords.
AmbientPolyline map_polyline(const SmoothEmbedding& e, const TorusPolyline& line, int subdivisions = 10000);

/// Length of map_polyline(...) without materializing the points.
double ambient_length(const PLEmbedding& e, const TorusPolyline& line);
double ambient_length(const SmoothEmbedding& e, const TorusPolyline& line, int subdivisions = 10000);

}  // namespace flattorus
