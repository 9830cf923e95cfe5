#pragma once

// AtlasDocument: the JSON contract between the core and the viewer.
// Numbers are written with 17 significant digits so every double survives
// a text round trip bit for bit.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flattorus/embedding.hpp"

namespace flattorus {

inline constexpr const char* kAtlasSchemaVersion = "1";
inline constexpr std::uint64_t kAtlasTestVectorSeed = 20240601;

struct AtlasVertex {
  int id = 0;
  TorusPoint uv;
  Ambient position;
  std::vector<int> faces;
};

struct AtlasEdge {
  int id = 0;
  int v0 = 0;
  int v1 = 0;
  std::vector<int> faces;
};

/// A torus point with its map_point image, for checking other chart evaluators.
struct AtlasTestVector {
  TorusPoint uv;
  Ambient x;
  int chart = 0;
  SideTag side = SideTag::kPlanar;
};

struct AtlasDocument {
  std::string schema_version = kAtlasSchemaVersion;
  std::string model;
  double side = 4.0;
  int ambient_dim = 3;
  std::vector<FaceChart> charts;
  std::vector<AtlasVertex> vertices;
  std::vector<AtlasEdge> edges;
  std::vector<AtlasTestVector> test_vectors;
};

AtlasDocument make_atlas_document(const PLEmbedding& e, int test_vectors = 1000,
                                  std::uint64_t seed = kAtlasTestVectorSeed);
std::string emit_atlas_json(const AtlasDocument& doc);
inline std::string export_atlas_json(const PLEmbedding& e) { return emit_atlas_json(make_atlas_document(e)); }

/// Throws InvalidArgument on malformed JSON, missing fields or a schema_version other than "1".
AtlasDocument parse_atlas_json(std::string_view text);

/// Field-by-field equality with doubles compared by bit pattern.
bool identical(const AtlasDocument& a, const AtlasDocument& b);

}  // namespace flattorus
