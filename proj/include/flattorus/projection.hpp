#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "flattorus/embedding.hpp"

namespace flattorus {

struct ProjectionSpec {
  enum class Mode { kOrthographic, kPerspective };
  Mode mode = Mode::kPerspective;
  double d = 3.0;  // eye on the w axis at w = d
};

/// "orthographic" or "perspective".
ProjectionSpec::Mode parse_projection_mode(const std::string& name);
const char* projection_mode_name(ProjectionSpec::Mode mode);

/// Orthographic drops w; perspective scales (x, y, z) by d / (d - w).
/// Throws InvalidArgument when a perspective point has |w| >= d or the input is not 4D.
std::vector<Eigen::Vector3d> project_4d(const std::vector<Ambient>& points, const ProjectionSpec& spec);
Eigen::Vector3d project_4d(const Ambient& point, const ProjectionSpec& spec);

}  // namespace flattorus
