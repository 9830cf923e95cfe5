#pragma once

// Origami sequence from the flat square sheet to the box torus, as three
// parameter-continuous stages of isometric states:
//   A  roll the sheet into a cylinder (v wraps around, u along the axis)
//   B  squash the cylinder through perimeter-S stadium curves to a flat envelope
//   C  fold the envelope in quarters along u and close the slit

#include <Eigen/Core>
#include <cstdint>
#include <string_view>
#include <vector>

#include "flattorus/mesh.hpp"
#include "flattorus/torus.hpp"

namespace flattorus {

enum class FoldStage { kRoll, kSquash, kQuarter };

char stage_letter(FoldStage stage);
FoldStage parse_stage(std::string_view text);

/// A crease segment on the sheet. Positive angles are mountain folds seen from
/// the printed (game) side, negative angles valley folds.
struct Crease {
  enum class Axis { kU, kV };  // kU: the line u = at; kV: the line v = at
  Axis axis = Axis::kU;
  double at = 0.0;
  double from = 0.0;
  double to = 0.0;
  double angle_deg = 0.0;
  FoldStage stage = FoldStage::kQuarter;

  bool mountain() const { return angle_deg > 0.0; }
};

struct CreasePattern {
  std::vector<Crease> creases;
};

/// Squash creases at v = 0 and v = S/2 plus N wall creases at u = k S / N.
/// N = 4 is the box; the wall creases change sense between the outer and inner layer.
CreasePattern prism_crease_pattern(int n, const FlatTorus& torus);
inline CreasePattern box_crease_pattern(const FlatTorus& torus) { return prism_crease_pattern(4, torus); }
CreasePattern flatfold_crease_pattern(const FlatTorus& torus);

/// Rigid placement of one panel: position = rotation * (u, v, 0) + translation.
struct PanelPlacement {
  Rect domain;
  Eigen::Matrix3d rotation;
  Eigen::Vector3d translation;
};

class FoldFrame {
 public:
  FoldFrame(FoldStage stage, double t, const FlatTorus& torus);

  FoldStage stage() const { return stage_; }
  double t() const { return t_; }
  const FlatTorus& torus() const { return torus_; }

  /// Folded position of sheet point (u, v) in [0,S]^2.
  Eigen::Vector3d position(double u, double v) const;

  /// Rigid panels; populated for stage C only (A and B are analytic bendings).
  const std::vector<PanelPlacement>& panels() const { return panels_; }

  /// Sheet lines across which the folded state is not smooth.
  std::vector<double> creases_u() const;
  std::vector<double> creases_v() const;

  /// (samples+1)^2 grid over the sheet with samples^2 quads.
  QuadMesh sample_mesh(int samples) const;

 private:
  Eigen::Vector3d cross_section(double v) const;

  FoldStage stage_;
  double t_;
  FlatTorus torus_;
  std::vector<PanelPlacement> panels_;
};

/// Rejects t outside [0, 1].
FoldFrame fold_state(FoldStage stage, double t, const FlatTorus& torus);

/// Length of the folded curve v -> position(u, v), v in [0, S], by polyline sampling.
double cross_section_perimeter(const FoldFrame& frame, double u, int samples);

/// Largest distance between matching points of the two free slit edges u = 0 and u = S.
double slit_gap(const FoldFrame& frame, int samples = 64);

/// Max relative error between the folded length of a straight sheet segment
/// (polyline of `subdivisions` chords) and its flat length, over n random
/// segments of the given length that cross no crease of the frame.
double fold_isometry_audit(const FoldFrame& frame, int n, std::uint64_t seed, double segment_length = 0.01,
                           int subdivisions = 64);

}  // namespace flattorus
