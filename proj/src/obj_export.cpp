#include "flattorus/obj.hpp"

#include <array>
#include <cstdio>
#include <set>
#include <sstream>

#include "flattorus/errors.hpp"

namespace flattorus {

std::string export_obj(const QuadMesh& mesh, const std::string& name) {
  std::vector<int> index(mesh.vertices.size(), 0);
  for (const auto& q : mesh.quads) {
    for (int k : q) index.at(static_cast<std::size_t>(k)) = 1;
  }
  std::string out = "# flattorus mesh\no " + name + "\n";
  char buf[128];
  int next = 0;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    if (!index[i]) continue;
    index[i] = ++next;
    const Eigen::Vector3d& p = mesh.vertices[i];
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out += buf;
  }
  for (SideTag tag : {SideTag::kExterior, SideTag::kInterior, SideTag::kPlanar}) {
    bool header = false;
    for (std::size_t q = 0; q < mesh.quads.size(); ++q) {
      if (mesh.quad_sides[q] != tag) continue;
      if (!header) {
        out += std::string("g ") + side_tag_name(tag) + "\n";
        header = true;
      }
      const auto& quad = mesh.quads[q];
      std::snprintf(buf, sizeof buf, "f %d %d %d %d\n", index[quad[0]], index[quad[1]], index[quad[2]],
                    index[quad[3]]);
      out += buf;
    }
  }
  return out;
}

std::string export_obj(const PLEmbedding& e, double epsilon, const std::optional<ProjectionSpec>& projection) {
  if (e.ambient_dim == 4 && !projection) {
    throw InvalidArgument("4D atlas '" + e.model + "' needs a projection for OBJ export");
  }
  return export_obj(offset_interior(atlas_mesh(e, projection.value_or(ProjectionSpec{})), epsilon), e.model);
}

std::string export_obj(const SmoothEmbedding& e, int segments, double epsilon,
                       const std::optional<ProjectionSpec>& projection) {
  if (e.ambient_dim == 4 && !projection) {
    throw InvalidArgument("4D embedding '" + e.model + "' needs a projection for OBJ export");
  }
  return export_obj(offset_interior(tessellate(e, segments, projection.value_or(ProjectionSpec{})), epsilon), e.model);
}

std::string export_obj(const FoldFrame& frame, int samples, double epsilon) {
  return export_obj(offset_interior(frame.sample_mesh(samples), epsilon), "fold");
}

ObjSummary summarize_obj(std::string_view text) {
  ObjSummary s;
  std::set<std::array<double, 3>> positions;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind == "v") {
      std::array<double, 3> p{};
      if (!(fields >> p[0] >> p[1] >> p[2])) {
        throw InvalidArgument("OBJ line " + std::to_string(line_no) + ": malformed vertex");
      }
      positions.insert(p);
      ++s.vertices;
    } else if (kind == "f") {
      int count = 0;
      std::string ref;
      while (fields >> ref) {
        const int k = std::stoi(ref.substr(0, ref.find('/')));
        if (k < 1 || k > s.vertices) {
          throw InvalidArgument("OBJ line " + std::to_string(line_no) + ": face index out of range");
        }
        ++count;
      }
      if (count < 3) throw InvalidArgument("OBJ line " + std::to_string(line_no) + ": face needs 3+ vertices");
      ++s.faces;
    }
  }
  s.unique_positions = static_cast<int>(positions.size());
  return s;
}

}  // namespace flattorus
