#include "flattorus/models.hpp"

#include <algorithm>
#include <cmath>

#include "flattorus/errors.hpp"

namespace flattorus {

const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog = {
      {"box", true, 3, {"size"}},
      {"prism", true, 3, {"n", "size"}},
      {"cylinder", false, 3, {"size"}},
      {"clifford", false, 4, {"size"}},
      {"tesseract", true, 4, {}},
      {"flatfold", true, 3, {"size"}},
  };
  return catalog;
}

bool is_known_model(const std::string& name) {
  const auto& c = model_catalog();
  return std::any_of(c.begin(), c.end(), [&](const ModelInfo& m) { return m.name == name; });
}

Model build_model(const ModelSpec& spec) {
  if (!std::isfinite(spec.size) || spec.size <= 0.0) throw InvalidArgument("size must be finite and positive");
  const FlatTorus torus(spec.size);
  if (spec.name == "box") return build_box_torus(torus);
  if (spec.name == "prism") return build_prism_torus(spec.n, torus);
  if (spec.name == "cylinder") return build_cylinder_torus(torus);
  if (spec.name == "clifford") return build_clifford_torus(torus);
  if (spec.name == "flatfold") return build_flat_folded_torus(torus);
  if (spec.name == "tesseract") {
    if (spec.size != 4.0) throw InvalidArgument("the tesseract torus has side 4");
    return build_tesseract_torus();
  }
  throw InvalidArgument("unknown model '" + spec.name + "'");
}

}  // namespace flattorus
