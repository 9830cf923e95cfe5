#include "flattorus/fold.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "flattorus/errors.hpp"

namespace flattorus {

char stage_letter(FoldStage stage) {
  switch (stage) {
    case FoldStage::kRoll:
      return 'A';
    case FoldStage::kSquash:
      return 'B';
    case FoldStage::kQuarter:
      return 'C';
  }
  return 'A';
}

FoldStage parse_stage(std::string_view text) {
  if (text == "A" || text == "a") return FoldStage::kRoll;
  if (text == "B" || text == "b") return FoldStage::kSquash;
  if (text == "C" || text == "c") return FoldStage::kQuarter;
  throw InvalidArgument("fold stage must be A, B or C, got '" + std::string(text) + "'");
}

CreasePattern prism_crease_pattern(int n, const FlatTorus& torus) {
  if (n < 3) throw InvalidArgument("crease pattern needs N >= 3");
  const double s = torus.side();
  const double h = 0.5 * s;
  const double turn = 360.0 / n;
  CreasePattern p;
  p.creases.push_back({Crease::Axis::kV, 0.0, 0.0, s, 180.0, FoldStage::kSquash});
  p.creases.push_back({Crease::Axis::kV, h, 0.0, s, 180.0, FoldStage::kSquash});
  for (int k = 0; k < n; ++k) {
    const double u = (k * s) / n;
    p.creases.push_back({Crease::Axis::kU, u, 0.0, h, turn, FoldStage::kQuarter});
    p.creases.push_back({Crease::Axis::kU, u, h, s, -turn, FoldStage::kQuarter});
  }
  return p;
}

CreasePattern flatfold_crease_pattern(const FlatTorus& torus) {
  const double s = torus.side();
  const double h = 0.5 * s;
  CreasePattern p;
  p.creases.push_back({Crease::Axis::kV, 0.0, 0.0, s, 180.0, FoldStage::kSquash});
  p.creases.push_back({Crease::Axis::kV, h, 0.0, s, 180.0, FoldStage::kSquash});
  for (double u : {0.25 * s, 0.75 * s}) {
    p.creases.push_back({Crease::Axis::kU, u, 0.0, h, 180.0, FoldStage::kQuarter});
    p.creases.push_back({Crease::Axis::kU, u, h, s, -180.0, FoldStage::kQuarter});
  }
  return p;
}

FoldFrame::FoldFrame(FoldStage stage, double t, const FlatTorus& torus) : stage_(stage), t_(t), torus_(torus) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("fold parameter t must lie in [0, 1]");
  if (stage_ != FoldStage::kQuarter) return;

  const double s = torus_.side();
  const double w = 0.25 * s;
  const double h = 0.5 * s;
  const double alpha = t_ * 0.5 * std::numbers::pi;
  const Eigen::Vector3d up = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d corner = Eigen::Vector3d::Zero();
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector3d dir(std::cos(k * alpha), std::sin(k * alpha), 0.0);
    for (int layer = 0; layer < 2; ++layer) {
      const Eigen::Vector3d vdir = layer == 0 ? up : Eigen::Vector3d(-up);
      PanelPlacement panel;
      panel.domain = {k * w, layer * h, (k + 1) * w, (layer + 1) * h};
      panel.rotation.col(0) = dir;
      panel.rotation.col(1) = vdir;
      panel.rotation.col(2) = dir.cross(vdir);
      panel.translation = corner - (k * w) * dir + (layer == 0 ? Eigen::Vector3d::Zero() : Eigen::Vector3d(s * up));
      panels_.push_back(panel);
    }
    corner += w * dir;
  }
}

Eigen::Vector3d FoldFrame::cross_section(double v) const {
  const double s = torus_.side();
  if (stage_ == FoldStage::kRoll) {
    if (t_ == 0.0) return {0.0, v, 0.0};
    const double radius = s / (2.0 * std::numbers::pi * t_);
    const double half = std::sin(0.5 * v / radius);
    return {0.0, radius * std::sin(v / radius), 2.0 * radius * half * half};
  }

  // Stadium: bottom and top semicircles of radius rho joined by vertical straights
  // of length len, walked by arc length from the bottom point.
  const double rho = (1.0 - t_) * s / (2.0 * std::numbers::pi);
  const double len = 0.5 * (s - 2.0 * std::numbers::pi * rho);
  const double quarter = 0.5 * std::numbers::pi * rho;
  const double semi = std::numbers::pi * rho;
  double a = v;
  if (a <= quarter && rho > 0.0) {
    const double half = std::sin(0.5 * a / rho);
    return {0.0, rho * std::sin(a / rho), 2.0 * rho * half * half};
  }
  a -= quarter;
  if (a <= len) return {0.0, rho, rho + a};
  a -= len;
  if (a <= semi && rho > 0.0) return {0.0, rho * std::cos(a / rho), rho + len + rho * std::sin(a / rho)};
  a -= semi;
  if (a <= len) return {0.0, -rho, rho + len - a};
  a -= len;
  if (rho == 0.0) return {0.0, 0.0, 0.0};
  return {0.0, -rho * std::cos(a / rho), rho - rho * std::sin(a / rho)};
}

Eigen::Vector3d FoldFrame::position(double u, double v) const {
  if (stage_ != FoldStage::kQuarter) return Eigen::Vector3d(u, 0.0, 0.0) + cross_section(v);
  for (const PanelPlacement& p : panels_) {
    if (p.domain.contains(u, v)) return p.rotation * Eigen::Vector3d(u, v, 0.0) + p.translation;
  }
  throw InvalidArgument("sheet point outside [0,S]^2");
}

std::vector<double> FoldFrame::creases_u() const {
  if (stage_ != FoldStage::kQuarter) return {};
  const double s = torus_.side();
  return {0.25 * s, 0.5 * s, 0.75 * s};
}

std::vector<double> FoldFrame::creases_v() const {
  const double s = torus_.side();
  if (stage_ == FoldStage::kQuarter || (stage_ == FoldStage::kSquash && t_ == 1.0)) return {0.5 * s};
  return {};
}

QuadMesh FoldFrame::sample_mesh(int samples) const {
  if (samples < 1) throw InvalidArgument("sample_mesh needs samples >= 1");
  const double s = torus_.side();
  QuadMesh mesh;
  const int n = samples + 1;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double u = s * i / samples;
      const double v = s * j / samples;
      mesh.vertices.push_back(position(u, v));
      mesh.uv.push_back({u, v});
    }
  }
  const double h = 0.5 * s;
  for (int j = 0; j < samples; ++j) {
    for (int i = 0; i < samples; ++i) {
      const int a = j * n + i;
      mesh.quads.push_back({a, a + 1, a + 1 + n, a + n});
      const double vmid = s * (j + 0.5) / samples;
      mesh.quad_sides.push_back(vmid < h ? SideTag::kExterior : SideTag::kInterior);
    }
  }
  return mesh;
}

FoldFrame fold_state(FoldStage stage, double t, const FlatTorus& torus) { return FoldFrame(stage, t, torus); }

double cross_section_perimeter(const FoldFrame& frame, double u, int samples) {
  if (samples < 1) throw InvalidArgument("perimeter sampling needs samples >= 1");
  const double s = frame.torus().side();
  double length = 0.0;
  Eigen::Vector3d prev = frame.position(u, 0.0);
  for (int k = 1; k <= samples; ++k) {
    const Eigen::Vector3d next = frame.position(u, s * k / samples);
    length += (next - prev).norm();
    prev = next;
  }
  return length;
}

double slit_gap(const FoldFrame& frame, int samples) {
  const double s = frame.torus().side();
  double gap = 0.0;
  for (int k = 0; k <= samples; ++k) {
    const double v = s * k / std::max(samples, 1);
    gap = std::max(gap, (frame.position(s, v) - frame.position(0.0, v)).norm());
  }
  return gap;
}

double fold_isometry_audit(const FoldFrame& frame, int n, std::uint64_t seed, double segment_length,
                           int subdivisions) {
  if (n <= 0) throw InvalidArgument("fold_isometry_audit needs n > 0");
  if (subdivisions < 1) throw InvalidArgument("fold_isometry_audit needs subdivisions >= 1");
  if (!(segment_length > 0.0)) throw InvalidArgument("segment length must be positive");
  const double s = frame.torus().side();
  const std::vector<double> cu = frame.creases_u();
  const std::vector<double> cv = frame.creases_v();
  auto crosses = [](const std::vector<double>& lines, double a, double b) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    return std::any_of(lines.begin(), lines.end(), [&](double x) { return x > lo && x < hi; });
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, s);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < n) {
    const double u0 = coord(rng);
    const double v0 = coord(rng);
    const double theta = angle(rng);
    const double u1 = u0 + segment_length * std::cos(theta);
    const double v1 = v0 + segment_length * std::sin(theta);
    if (u1 < 0.0 || u1 > s || v1 < 0.0 || v1 > s) continue;
    if (crosses(cu, u0, u1) || crosses(cv, v0, v1)) continue;
    const double intrinsic = std::hypot(u1 - u0, v1 - v0);
    double folded = 0.0;
    Eigen::Vector3d prev = frame.position(u0, v0);
    for (int k = 1; k <= subdivisions; ++k) {
      const double f = static_cast<double>(k) / subdivisions;
      const Eigen::Vector3d next = frame.position(u0 + f * (u1 - u0), v0 + f * (v1 - v0));
      folded += (next - prev).norm();
      prev = next;
    }
    worst = std::max(worst, std::fabs(folded - intrinsic) / intrinsic);
    ++accepted;
  }
  return worst;
}

}  // namespace flattorus
