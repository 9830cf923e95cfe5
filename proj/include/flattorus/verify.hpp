#pragma once

// Certification of embedding claims: cell counts and genus, vertex angle
// deficits, dihedral angles, seam continuity, path-length isometry and the
// first fundamental form of smooth charts.

#include <cstdint>
#include <vector>

#include "flattorus/embedding.hpp"

namespace flattorus {

/// Raw cell counts; tolerant of boundary edges.
struct CellCounts {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int chi = 0;
  int boundary_edges = 0;     // exactly one incident face
  int nonmanifold_edges = 0;  // three or more incident faces
};

struct TopologyReport {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int chi = 0;
  int genus = 0;
};

CellCounts count_cells(const PLEmbedding& e);

/// Closed-surface topology. Throws StructuralError if any edge does not border
/// exactly two faces, or if chi is odd.
TopologyReport topology_report(const PLEmbedding& e);

struct VertexCurvatureReport {
  int vertex = 0;
  TorusPoint uv;
  int face_count = 0;
  double angle_sum = 0.0;  // radians
  double deficit = 0.0;    // 2*pi - angle_sum
};

/// Corner angles are measured in each face's own frame coordinates, so faces
/// lying back to back in one ambient plane are still told apart.
std::vector<VertexCurvatureReport> angle_deficits(const PLEmbedding& e);

struct DihedralReport {
  int edge = 0;
  int face_a = 0;
  int face_b = 0;
  double degrees = 0.0;
};

/// Angle between the two half-planes at every edge, in [0, 180] degrees:
/// 0 for back-to-back faces, 180 for a flat continuation. 3D only.
std::vector<DihedralReport> dihedral_report(const PLEmbedding& e);

/// Largest distance between the two chart evaluations of a shared edge,
/// sampled at `samples` points per edge.
double continuity_check(const PLEmbedding& e, int samples = 100);
double continuity_check(const SmoothEmbedding& e, int samples = 100);

/// Max relative error between mapped geodesic length and intrinsic distance
/// over `n_samples` random point pairs.
double isometry_check(const PLEmbedding& e, int n_samples, std::uint64_t seed);
double isometry_check(const SmoothEmbedding& e, int n_samples, std::uint64_t seed, int subdivisions = 10000);

/// First fundamental form entries (E, F, G) by central differences.
struct MetricSample {
  double e_ff = 0.0;
  double f_ff = 0.0;
  double g_ff = 0.0;
};

MetricSample first_fundamental_form(const SmoothChart& chart, double u, double v, double step);

/// Max of |E-1|, |F|, |G-1| over a grid x grid lattice of cell centres of the chart domain.
double metric_check(const SmoothChart& chart, int grid, double step = 1e-4);

}  // namespace flattorus
