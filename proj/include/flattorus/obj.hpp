#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flattorus/fold.hpp"
#include "flattorus/mesh.hpp"

namespace flattorus {

/// ASCII Wavefront OBJ with one `f` quad per mesh quad, grouped by side tag.
/// Vertices no quad references are dropped.
std::string export_obj(const QuadMesh& mesh, const std::string& name);

/// Chart quads with interior faces pushed `epsilon` towards the interior side.
/// 4D atlases need a projection; without one this throws InvalidArgument.
std::string export_obj(const PLEmbedding& e, double epsilon, const std::optional<ProjectionSpec>& projection = {});
std::string export_obj(const SmoothEmbedding& e, int segments, double epsilon,
                       const std::optional<ProjectionSpec>& projection = {});
std::string export_obj(const FoldFrame& frame, int samples, double epsilon);

struct ObjSummary {
  int vertices = 0;
  int faces = 0;
  int unique_positions = 0;  // distinct `v` lines by exact coordinates
};

/// Syntactic check: every face index must refer to an existing vertex.
/// Throws InvalidArgument naming the offending line.
ObjSummary summarize_obj(std::string_view text);

}  // namespace flattorus
