#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "flattorus/embedding.hpp"
#include "flattorus/projection.hpp"

namespace flattorus {

/// Quad mesh with per-vertex sheet coordinates, used for export and previews.
struct QuadMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Point2> uv;
  std::vector<std::array<int, 4>> quads;  // counter-clockwise in (u, v)
  std::vector<SideTag> quad_sides;
};

/// One quad per chart over the shared atlas vertices. 4D atlases go through `projection`.
QuadMesh atlas_mesh(const PLEmbedding& e, const ProjectionSpec& projection = {});

/// Grid tessellation of every chart of a smooth embedding; `segments` cells per chart side.
QuadMesh tessellate(const SmoothEmbedding& e, int segments, const ProjectionSpec& projection = {});

/// Moves interior quads off their exterior partners: each vertex used by an
/// interior quad gets a copy displaced so every incident interior face plane
/// shifts by `epsilon` along its normal (u x v, which points to the interior side).
QuadMesh offset_interior(const QuadMesh& mesh, double epsilon);

}  // namespace flattorus
