#pragma once

// JSON documents shared by the CLI and the HTTP service (other than the atlas).

#include <cstdint>
#include <string>

#include "flattorus/fold.hpp"
#include "flattorus/models.hpp"

namespace flattorus {

std::string models_json();

/// Sampled fold mesh plus panels and crease lines, schema_version "1".
std::string fold_frame_json(const FoldFrame& frame, int samples);

/// Chart parameters of a smooth embedding.
std::string smooth_embedding_json(const SmoothEmbedding& e);

struct VerifyOptions {
  int pairs = 10000;
  std::uint64_t seed = 1;
  int subdivisions = 10000;  // smooth charts
  int metric_grid = 32;
  double metric_step = 1e-4;
};

/// Topology, curvature, dihedrals, seams and isometry for a PL model;
/// seams, isometry and the first fundamental form for a smooth one.
std::string verify_report_json(const Model& model, const VerifyOptions& options);

/// Geodesic from `from` along the lifted displacement `delta`, with its intrinsic
/// and ambient lengths. PL models also list the ambient polyline.
std::string geodesic_json(const Model& model, TorusPoint from, TorusVector delta, int subdivisions = 10000);

}  // namespace flattorus
