#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "doctest.h"
#include "flattorus/atlas_json.hpp"
#include "flattorus/crease_svg.hpp"
#include "flattorus/errors.hpp"
#include "flattorus/obj.hpp"
#include "flattorus/projection.hpp"
#include "flattorus/seven_color.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace flattorus;

namespace {

const FlatTorus kT{4.0};

boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

Ambient amb4(double x, double y, double z, double w) {
  Ambient a(4);
  a << x, y, z, w;
  return a;
}

}  // namespace

TEST_CASE("OBJ export of envelope prisms") {
  const ObjSummary box0 = summarize_obj(export_obj(build_box_torus(kT), 0.0));
  CHECK(box0.unique_positions == 8);
  CHECK(box0.vertices == 8);
  CHECK(box0.faces == 8);

  const ObjSummary box5 = summarize_obj(export_obj(build_box_torus(kT), 0.05));
  CHECK(box5.unique_positions == 16);
  CHECK(box5.faces == 8);

  const ObjSummary tri = summarize_obj(export_obj(build_prism_torus(3, kT), 0.0));
  CHECK(tri.unique_positions == 6);
  CHECK(tri.faces == 6);

  CHECK_THROWS_AS(export_obj(build_box_torus(kT), -0.1), InvalidArgument);
}

TEST_CASE("OBJ interior offset moves each interior face plane inward by epsilon") {
  const double eps = 0.05;
  const QuadMesh mesh = offset_interior(atlas_mesh(build_box_torus(kT)), eps);
  for (std::size_t q = 0; q < mesh.quads.size(); ++q) {
    const auto& quad = mesh.quads[q];
    for (int k : quad) {
      const Eigen::Vector3d p = mesh.vertices[k];
      if (mesh.quad_sides[q] == SideTag::kInterior) {
        // The unit square tube shrinks to [eps, 1 - eps]^2.
        CHECK(std::min({p.x() - eps, 1.0 - eps - p.x(), p.y() - eps, 1.0 - eps - p.y()}) >= -1e-15);
        CHECK(std::fabs(std::min(std::fabs(p.x() - eps), std::fabs(p.x() - 1.0 + eps))) +
                  std::fabs(std::min(std::fabs(p.y() - eps), std::fabs(p.y() - 1.0 + eps))) <=
              1e-15);
      } else {
        CHECK(std::min({std::fabs(p.x()), std::fabs(p.x() - 1.0)}) + std::min(std::fabs(p.y()), std::fabs(p.y() - 1.0)) <= 1e-15);
      }
    }
  }
}

TEST_CASE("OBJ winding is counter-clockwise seen from the face's side") {
  const PLEmbedding box = build_box_torus(kT);
  const QuadMesh mesh = atlas_mesh(box);
  const Eigen::Vector3d centre(0.5, 0.5, 1.0);
  for (std::size_t q = 0; q < mesh.quads.size(); ++q) {
    const auto& f = mesh.quads[q];
    const Eigen::Vector3d n = (mesh.vertices[f[1]] - mesh.vertices[f[0]]).cross(mesh.vertices[f[3]] - mesh.vertices[f[0]]);
    const Eigen::Vector3d mid = 0.25 * (mesh.vertices[f[0]] + mesh.vertices[f[1]] + mesh.vertices[f[2]] + mesh.vertices[f[3]]);
    const double outward = n.dot(mid - centre);
    if (mesh.quad_sides[q] == SideTag::kExterior) {
      CHECK(outward > 0.0);
    } else {
      CHECK(outward < 0.0);
    }
  }
}

TEST_CASE("OBJ export of 4D and smooth models") {
  CHECK_THROWS_AS(export_obj(build_tesseract_torus(), 0.0), InvalidArgument);
  const ObjSummary tess = summarize_obj(export_obj(build_tesseract_torus(), 0.0, ProjectionSpec{}));
  CHECK(tess.faces == 16);
  // Perspective sends (0,0,0,0) and (0,0,0,1) to the same point.
  CHECK(tess.unique_positions == 15);
  const ObjSummary flat =
      summarize_obj(export_obj(build_tesseract_torus(), 0.0, ProjectionSpec{ProjectionSpec::Mode::kOrthographic, 3.0}));
  CHECK(flat.unique_positions == 8);
  CHECK_THROWS_AS(export_obj(build_clifford_torus(kT), 8, 0.0), InvalidArgument);
  const ObjSummary cl = summarize_obj(export_obj(build_clifford_torus(kT), 8, 0.0, ProjectionSpec{}));
  CHECK(cl.faces == 64);
  const ObjSummary cyl = summarize_obj(export_obj(build_cylinder_torus(kT), 8, 0.02));
  CHECK(cyl.faces == 128);
  const ObjSummary fold = summarize_obj(export_obj(FoldFrame(FoldStage::kQuarter, 0.5, kT), 8, 0.0));
  CHECK(fold.faces == 64);
  CHECK(fold.vertices == 81);
  CHECK_THROWS_AS(summarize_obj("v 0 0 0\nf 1 2 3\n"), InvalidArgument);
  CHECK_THROWS_AS(summarize_obj("v 0 0\n"), InvalidArgument);
}

TEST_CASE("4D projection") {
  const ProjectionSpec ortho{ProjectionSpec::Mode::kOrthographic, 3.0};
  CHECK(project_4d(amb4(1, 2, 3, 4), ortho) == Eigen::Vector3d(1, 2, 3));
  const ProjectionSpec persp;
  CHECK(persp.d == 3.0);
  CHECK(project_4d(amb4(0, 0, 0, 1), persp) == Eigen::Vector3d(0, 0, 0));
  const Eigen::Vector3d p = project_4d(amb4(0.5, 0.5, 0.5, 0.5), persp);
  CHECK((p - Eigen::Vector3d(0.6, 0.6, 0.6)).norm() <= 1e-15);
  CHECK_THROWS_AS(project_4d(amb4(0, 0, 0, 3), persp), InvalidArgument);
  CHECK_THROWS_AS(project_4d(amb4(0, 0, 0, -3), persp), InvalidArgument);
  CHECK_NOTHROW(project_4d(amb4(0, 0, 0, -2.9), persp));
  CHECK_THROWS_AS(project_4d(std::vector<Ambient>{amb4(0, 0, 0, 0), amb4(0, 0, 0, 5)}, persp), InvalidArgument);
  CHECK(parse_projection_mode("orthographic") == ProjectionSpec::Mode::kOrthographic);
  CHECK_THROWS_AS(parse_projection_mode("fisheye"), InvalidArgument);
}

TEST_CASE("atlas JSON: chart counts and schema") {
  const std::string box = export_atlas_json(build_box_torus(kT));
  const auto j = nlohmann::json::parse(box);
  CHECK(j["schema_version"] == "1");
  CHECK(j["model"] == "box");
  CHECK(j["charts"].size() == 8);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["edges"].size() == 16);
  CHECK(j["test_vectors"].size() == 1000);
  CHECK(j["charts"][4]["side_tag"] == "interior");

  const auto t = nlohmann::json::parse(export_atlas_json(build_tesseract_torus()));
  CHECK(t["charts"].size() == 16);
  CHECK(t["ambient_dim"] == 4);
}

TEST_CASE("atlas JSON round-trips bit for bit") {
  for (const PLEmbedding& e : {build_box_torus(kT), build_prism_torus(7, FlatTorus{3.3}), build_tesseract_torus(),
                               build_flat_folded_torus(kT)}) {
    const AtlasDocument doc = make_atlas_document(e);
    const std::string text = emit_atlas_json(doc);
    const AtlasDocument back = parse_atlas_json(text);
    CHECK(identical(doc, back));
    CHECK(emit_atlas_json(back) == text);
    // Every test vector reproduces the chart formula.
    for (const AtlasTestVector& v : back.test_vectors) {
      const FaceChart& c = back.charts[static_cast<std::size_t>(v.chart)];
      const Ambient x = c.origin + (v.uv.u - c.domain.u0) * c.frame_u + (v.uv.v - c.domain.v0) * c.frame_v;
      CHECK((x - v.x).norm() <= 1e-12);
    }
  }
}

TEST_CASE("atlas JSON rejects bad documents") {
  CHECK_THROWS_AS(parse_atlas_json("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_atlas_json("{\"schema_version\":\"2\"}"), InvalidArgument);
  std::string text = export_atlas_json(build_box_torus(kT));
  text.replace(text.find("\"exterior\""), 10, "\"sideways\"");
  CHECK_THROWS_AS(parse_atlas_json(text), InvalidArgument);
}

TEST_CASE("crease SVG") {
  const std::string box = crease_svg(box_crease_pattern(kT), kT);
  CHECK_NOTHROW(parse_xml(box));
  CHECK(count(box, "<line ") == 10);
  for (const char* at : {"data-axis=\"u\" data-at=\"0\"", "data-axis=\"u\" data-at=\"1\"", "data-axis=\"u\" data-at=\"2\"",
                         "data-axis=\"u\" data-at=\"3\"", "data-axis=\"v\" data-at=\"0\"", "data-axis=\"v\" data-at=\"2\""}) {
    CHECK(count(box, at) >= 1);
  }
  CHECK(count(box, "crease mountain") == 6);
  CHECK(count(box, "crease valley") == 4);
  CHECK(count(box, "width=\"400\"") == 1);

  const std::string empty = crease_svg(CreasePattern{}, kT);
  CHECK_NOTHROW(parse_xml(empty));
  CHECK(count(empty, "<line ") == 0);
  CHECK(count(empty, "<rect ") == 1);
  CHECK_NOTHROW(parse_xml(crease_svg(flatfold_crease_pattern(kT), kT)));
}

TEST_CASE("seven colour map: K7 by an independent raster oracle") {
  const SevenColorTexture tex = seven_color_texture(kT);
  CHECK(tex.report.regions == 7);
  CHECK(tex.report.adjacent_pairs.size() == 21);
  CHECK(tex.report.complete_graph());
  CHECK_NOTHROW(parse_xml(tex.svg));
  CHECK(count(tex.svg, "<polygon ") >= 7);

  const int n = 512;
  std::vector<int> raster(n * n);
  std::vector<int> mapping(7, -1);  // oracle coset -> library region
  int mismatches = 0;
  const SevenColoring coloring(kT);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) * 4.0 / n;
      const double y = (j + 0.5) * 4.0 / n;
      const int r = oracle::seven_color_region(x, y, 4.0);
      REQUIRE(r >= 0);
      raster[j * n + i] = r;
      const int lib = coloring.region_at({x, y});
      if (mapping[r] < 0) mapping[r] = lib;
      if (mapping[r] != lib) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
  std::set<int> regions(raster.begin(), raster.end());
  CHECK(regions.size() == 7);
  std::set<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int c = raster[j * n + i];
      const int right = raster[j * n + (i + 1) % n];
      const int up = raster[((j + 1) % n) * n + i];
      if (right != c) pairs.insert(std::minmax(c, right));
      if (up != c) pairs.insert(std::minmax(c, up));
    }
  }
  CHECK(pairs.size() == 21);
}
