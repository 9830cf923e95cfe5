#include "flattorus/projection.hpp"

#include <cmath>

#include "flattorus/errors.hpp"

namespace flattorus {

ProjectionSpec::Mode parse_projection_mode(const std::string& name) {
  if (name == "orthographic") return ProjectionSpec::Mode::kOrthographic;
  if (name == "perspective") return ProjectionSpec::Mode::kPerspective;
  throw InvalidArgument("projection must be 'orthographic' or 'perspective', got '" + name + "'");
}

const char* projection_mode_name(ProjectionSpec::Mode mode) {
  return mode == ProjectionSpec::Mode::kOrthographic ? "orthographic" : "perspective";
}

Eigen::Vector3d project_4d(const Ambient& p, const ProjectionSpec& spec) {
  if (p.size() != 4) throw InvalidArgument("project_4d expects 4D points");
  const Eigen::Vector3d xyz(p(0), p(1), p(2));
  if (spec.mode == ProjectionSpec::Mode::kOrthographic) return xyz;
  if (!std::isfinite(spec.d) || !(std::fabs(p(3)) < spec.d)) {
    throw InvalidArgument("perspective eye distance d must exceed every |w|");
  }
  return xyz * (spec.d / (spec.d - p(3)));
}

std::vector<Eigen::Vector3d> project_4d(const std::vector<Ambient>& points, const ProjectionSpec& spec) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(points.size());
  for (const Ambient& p : points) out.push_back(project_4d(p, spec));
  return out;
}

}  // namespace flattorus
