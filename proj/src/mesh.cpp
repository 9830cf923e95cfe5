#include "flattorus/mesh.hpp"

#include <Eigen/Geometry>
#include <Eigen/QR>
#include <cmath>
#include <map>

#include "flattorus/errors.hpp"

namespace flattorus {

namespace {

Eigen::Vector3d to3(const Ambient& x, const ProjectionSpec& projection) {
  if (x.size() == 4) return project_4d(x, projection);
  return Eigen::Vector3d(x(0), x(1), x(2));
}

int find_vertex(const PLEmbedding& e, Point2 corner) {
  const TorusPoint p = canonicalize(corner, e.torus);
  for (const Vertex& v : e.vertices) {
    if (torus_distance(p, v.uv, e.torus) < 1e-9) return v.id;
  }
  throw StructuralError("chart corner has no atlas vertex");
}

}  // namespace

QuadMesh atlas_mesh(const PLEmbedding& e, const ProjectionSpec& projection) {
  QuadMesh mesh;
  for (const Vertex& v : e.vertices) {
    mesh.vertices.push_back(to3(v.position, projection));
    mesh.uv.push_back({v.uv.u, v.uv.v});
  }
  for (const FaceChart& c : e.charts) {
    const Rect& d = c.domain;
    mesh.quads.push_back({find_vertex(e, {d.u0, d.v0}), find_vertex(e, {d.u1, d.v0}), find_vertex(e, {d.u1, d.v1}),
                          find_vertex(e, {d.u0, d.v1})});
    mesh.quad_sides.push_back(c.side);
  }
  return mesh;
}

QuadMesh tessellate(const SmoothEmbedding& e, int segments, const ProjectionSpec& projection) {
  if (segments < 1) throw InvalidArgument("tessellate needs segments >= 1");
  QuadMesh mesh;
  const int n = segments + 1;
  for (const SmoothChart& c : e.charts) {
    const int base = static_cast<int>(mesh.vertices.size());
    const Rect& d = c.domain;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double u = d.u0 + (d.u1 - d.u0) * i / segments;
        const double v = d.v0 + (d.v1 - d.v0) * j / segments;
        mesh.vertices.push_back(to3(c.evaluate(u, v), projection));
        mesh.uv.push_back({u, v});
      }
    }
    for (int j = 0; j < segments; ++j) {
      for (int i = 0; i < segments; ++i) {
        const int a = base + j * n + i;
        mesh.quads.push_back({a, a + 1, a + 1 + n, a + n});
        mesh.quad_sides.push_back(c.side);
      }
    }
  }
  return mesh;
}

QuadMesh offset_interior(const QuadMesh& mesh, double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be finite and >= 0");
  if (epsilon == 0.0) return mesh;

  std::map<int, std::vector<Eigen::Vector3d>> normals;
  for (std::size_t q = 0; q < mesh.quads.size(); ++q) {
    if (mesh.quad_sides[q] != SideTag::kInterior) continue;
    const auto& quad = mesh.quads[q];
    const Eigen::Vector3d n = (mesh.vertices[quad[2]] - mesh.vertices[quad[0]])
                                  .cross(mesh.vertices[quad[3]] - mesh.vertices[quad[1]]);
    if (n.norm() == 0.0) continue;
    for (int k : quad) normals[k].push_back(n.normalized());
  }

  QuadMesh out = mesh;
  std::map<int, int> copy_of;
  for (const auto& [vertex, ns] : normals) {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(ns.size()), 3);
    for (std::size_t r = 0; r < ns.size(); ++r) a.row(static_cast<Eigen::Index>(r)) = ns[r].transpose();
    const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(a.rows(), epsilon);
    const Eigen::Vector3d shift = a.completeOrthogonalDecomposition().solve(rhs);
    copy_of[vertex] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(mesh.vertices[vertex] + shift);
    out.uv.push_back(mesh.uv[vertex]);
  }
  for (std::size_t q = 0; q < out.quads.size(); ++q) {
    if (out.quad_sides[q] != SideTag::kInterior) continue;
    for (int& k : out.quads[q]) {
      if (const auto it = copy_of.find(k); it != copy_of.end()) k = it->second;
    }
  }
  return out;
}

}  // namespace flattorus
