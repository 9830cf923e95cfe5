#pragma once

// Named embeddings selectable from the CLI and the HTTP service.

#include <string>
#include <variant>
#include <vector>

#include "flattorus/embedding.hpp"

namespace flattorus {

struct ModelInfo {
  std::string name;
  bool piecewise_linear = true;
  int ambient_dim = 3;
  std::vector<std::string> params;
};

const std::vector<ModelInfo>& model_catalog();
bool is_known_model(const std::string& name);

struct ModelSpec {
  std::string name = "box";
  int n = 4;          // prism only
  double size = 4.0;  // torus side S
};

using Model = std::variant<PLEmbedding, SmoothEmbedding>;

/// Throws InvalidArgument for an unknown name or invalid parameters
/// (prism N < 3, tesseract with S != 4, non-positive size).
Model build_model(const ModelSpec& spec);

}  // namespace flattorus
