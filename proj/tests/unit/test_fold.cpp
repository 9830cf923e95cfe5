#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "flattorus/embedding.hpp"
#include "flattorus/errors.hpp"
#include "flattorus/fold.hpp"
#include "support/oracles.hpp"

using namespace flattorus;

namespace {

const FlatTorus kT{4.0};

double frame_gap(const FoldFrame& a, const FoldFrame& b, int grid) {
  double worst = 0.0;
  for (int j = 0; j <= grid; ++j) {
    for (int i = 0; i <= grid; ++i) {
      const double u = 4.0 * i / grid;
      const double v = 4.0 * j / grid;
      worst = std::max(worst, (a.position(u, v) - b.position(u, v)).norm());
    }
  }
  return worst;
}

// Polyline length extrapolated from N and 2N chords (chord error is O(h^2)).
double richardson_perimeter(const FoldFrame& f, double u) {
  const double coarse = cross_section_perimeter(f, u, 1 << 15);
  const double fine = cross_section_perimeter(f, u, 1 << 16);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

TEST_CASE("stage parameters are validated") {
  CHECK_THROWS_AS(FoldFrame(FoldStage::kRoll, -0.01, kT), InvalidArgument);
  CHECK_THROWS_AS(FoldFrame(FoldStage::kQuarter, 1.01, kT), InvalidArgument);
  CHECK_THROWS_AS(fold_state(FoldStage::kSquash, NAN, kT), InvalidArgument);
  CHECK(parse_stage("B") == FoldStage::kSquash);
  CHECK_THROWS_AS(parse_stage("D"), InvalidArgument);
}

TEST_CASE("stage A rolls the sheet into the radius S/(2 pi) cylinder") {
  const FoldFrame flat(FoldStage::kRoll, 0.0, kT);
  CHECK((flat.position(1.5, 2.5) - Eigen::Vector3d(1.5, 2.5, 0.0)).norm() == 0.0);
  const FoldFrame rolled(FoldStage::kRoll, 1.0, kT);
  const double r = 2.0 / std::numbers::pi;
  const Eigen::Vector3d axis(0.0, 0.0, r);
  for (double v : {0.0, 0.4, 1.3, 2.0, 3.7}) {
    const Eigen::Vector3d p = rolled.position(0.8, v);
    CHECK(p.x() == doctest::Approx(0.8));
    CHECK((Eigen::Vector3d(0.0, p.y(), p.z()) - axis).norm() == doctest::Approx(r).epsilon(1e-14));
  }
  CHECK((rolled.position(1.0, 0.0) - rolled.position(1.0, 4.0)).norm() <= 1e-15);
}

TEST_CASE("frames agree at stage boundaries") {
  CHECK(frame_gap(FoldFrame(FoldStage::kRoll, 1.0, kT), FoldFrame(FoldStage::kSquash, 0.0, kT), 64) <= 1e-9);
  CHECK(frame_gap(FoldFrame(FoldStage::kSquash, 1.0, kT), FoldFrame(FoldStage::kQuarter, 0.0, kT), 64) <= 1e-9);
}

TEST_CASE("frames vary continuously in t") {
  for (FoldStage stage : {FoldStage::kRoll, FoldStage::kSquash, FoldStage::kQuarter}) {
    for (double t : {0.0, 0.3, 0.999}) {
      CHECK(frame_gap(FoldFrame(stage, t, kT), FoldFrame(stage, t + 1e-6, kT), 16) <= 1e-4);
    }
  }
}

TEST_CASE("stage B keeps the cross-section perimeter") {
  for (int i = 0; i <= 20; ++i) {
    const FoldFrame f(FoldStage::kSquash, i / 20.0, kT);
    CHECK(std::fabs(richardson_perimeter(f, 1.3) - 4.0) <= 1e-9);
  }
  const FoldFrame envelope(FoldStage::kSquash, 1.0, kT);
  CHECK(envelope.position(0.5, 1.0).z() == doctest::Approx(1.0));
  CHECK((envelope.position(0.5, 1.0) - envelope.position(0.5, 3.0)).norm() <= 1e-15);
}

TEST_CASE("stage C closes onto the box atlas") {
  const FoldFrame closed(FoldStage::kQuarter, 1.0, kT);
  const PLEmbedding box = build_box_torus(kT);
  std::vector<Eigen::Vector3d> folded;
  std::vector<Eigen::Vector3d> atlas;
  for (const Vertex& v : box.vertices) {
    folded.push_back(closed.position(v.uv.u, v.uv.v));
    atlas.push_back(v.position.head<3>());
  }
  CHECK(oracle::procrustes_residual(folded, atlas) <= 1e-9);

  folded.clear();
  atlas.clear();
  for (int j = 0; j <= 64; ++j) {
    for (int i = 0; i <= 64; ++i) {
      const double u = 4.0 * i / 64;
      const double v = 4.0 * j / 64;
      folded.push_back(closed.position(u, v));
      atlas.push_back(map_point(box, canonicalize(u, v, kT)).x.head<3>());
    }
  }
  CHECK(oracle::procrustes_residual(folded, atlas) <= 1e-9);
  CHECK(slit_gap(closed) <= 1e-12);
  CHECK(closed.panels().size() == 8);
}

TEST_CASE("procrustes oracle recovers a rigid motion and rejects a stretch") {
  std::vector<Eigen::Vector3d> a = {{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {0, 0, 3}, {1, 1, 1}};
  const Eigen::Matrix3d r = Eigen::AngleAxisd(0.7, Eigen::Vector3d(1, 2, 3).normalized()).toRotationMatrix();
  std::vector<Eigen::Vector3d> b;
  for (const auto& p : a) b.push_back(r * p + Eigen::Vector3d(5, -1, 2));
  CHECK(oracle::procrustes_residual(a, b) <= 1e-12);
  b[3] *= 1.1;
  CHECK(oracle::procrustes_residual(a, b) > 1e-3);
}

TEST_CASE("slit closes monotonically in stage C") {
  double prev = INFINITY;
  for (int i = 0; i <= 50; ++i) {
    const double gap = slit_gap(FoldFrame(FoldStage::kQuarter, i / 50.0, kT));
    CHECK(gap < prev + 1e-15);
    if (i < 50) CHECK(gap < prev);
    prev = gap;
  }
  CHECK(slit_gap(FoldFrame(FoldStage::kQuarter, 0.0, kT)) == doctest::Approx(4.0));
}

TEST_CASE("panel placements are rigid motions") {
  for (double t : {0.0, 0.25, 0.6, 1.0}) {
    const FoldFrame f(FoldStage::kQuarter, t, kT);
    for (const PanelPlacement& p : f.panels()) {
      CHECK((p.rotation.transpose() * p.rotation - Eigen::Matrix3d::Identity()).norm() <= 1e-14);
      CHECK(p.rotation.determinant() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("isometry audit of folded states") {
  CHECK(fold_isometry_audit(FoldFrame(FoldStage::kRoll, 0.5, kT), 1000, 1) <= 1e-6);
  CHECK(fold_isometry_audit(FoldFrame(FoldStage::kSquash, 0.5, kT), 1000, 2) <= 1e-6);
  CHECK(fold_isometry_audit(FoldFrame(FoldStage::kSquash, 1.0, kT), 1000, 3, 0.01, 1) <= 1e-12);
  for (double t : {0.0, 0.3, 0.77, 1.0}) {
    CHECK(fold_isometry_audit(FoldFrame(FoldStage::kQuarter, t, kT), 1000, 4, 0.05, 1) <= 1e-12);
  }
}

TEST_CASE("crease patterns") {
  const CreasePattern box = box_crease_pattern(kT);
  int vertical = 0;
  int horizontal = 0;
  for (const Crease& c : box.creases) {
    if (c.axis == Crease::Axis::kU) {
      ++vertical;
      CHECK(c.at == std::round(c.at));
      CHECK(std::fabs(c.angle_deg) == 90.0);
    } else {
      ++horizontal;
      CHECK((c.at == 0.0 || c.at == 2.0));
      CHECK(c.angle_deg == 180.0);
    }
    CHECK(std::fabs(c.angle_deg) <= 180.0);
  }
  CHECK(vertical == 8);  // u = 0, 1, 2, 3 on the outer and the inner layer
  CHECK(horizontal == 2);
  CHECK_THROWS_AS(prism_crease_pattern(2, kT), InvalidArgument);
  CHECK(flatfold_crease_pattern(kT).creases.size() == 6);
}

TEST_CASE("sampled mesh covers the sheet") {
  const QuadMesh m = FoldFrame(FoldStage::kSquash, 0.4, kT).sample_mesh(8);
  CHECK(m.vertices.size() == 81);
  CHECK(m.quads.size() == 64);
  int interior = 0;
  for (SideTag s : m.quad_sides) interior += s == SideTag::kInterior ? 1 : 0;
  CHECK(interior == 32);
}
