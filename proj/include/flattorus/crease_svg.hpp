#pragma once

#include <string>

#include "flattorus/fold.hpp"

namespace flattorus {

inline constexpr double kPixelsPerUnit = 100.0;

/// SVG 1.1 drawing of the sheet with its creases; mountain folds red dash-dot,
/// valley folds blue dashed. Each crease carries class and data attributes.
std::string crease_svg(const CreasePattern& pattern, const FlatTorus& torus);

}  // namespace flattorus
