#pragma once

// A seven-region map on the square torus in which every region touches every
// other one. Built from the hexagonal tiling coloured by (a + 3b) mod 7 in
// axial coordinates, taken modulo the index-7 lattice generated by the axial
// vectors (1, 2) and (-3, 1); the torus square is mapped linearly onto the
// fundamental parallelogram of that lattice.

#include <string>
#include <utility>
#include <vector>

#include "flattorus/torus.hpp"

namespace flattorus {

struct SevenColorReport {
  int regions = 0;
  std::vector<std::pair<int, int>> adjacent_pairs;  // (a, b) with a < b, sorted

  bool complete_graph() const { return regions == 7 && adjacent_pairs.size() == 21; }
};

class SevenColoring {
 public:
  /// Checks the lattice algebra behind the construction; throws StructuralError if it fails.
  explicit SevenColoring(const FlatTorus& torus = FlatTorus{});

  const FlatTorus& torus() const { return torus_; }

  /// Region 0..6 containing p (nearest hexagon centre, ties to the smaller axial pair).
  int region_at(TorusPoint p) const;

  /// Hexagon of axial cell (a, b) in torus coordinates of the universal cover.
  std::vector<Point2> hexagon(int a, int b) const;

  static int color_of(int a, int b);

 private:
  FlatTorus torus_;
};

/// Adjacency by scanning a resolution x resolution pixel raster with wrap-around
/// 4-neighbour comparisons.
SevenColorReport raster_adjacency(const SevenColoring& coloring, int resolution);

std::string seven_color_svg(const SevenColoring& coloring);

struct SevenColorTexture {
  std::string svg;
  SevenColorReport report;
};

/// SVG plus a raster adjacency report. Throws StructuralError unless the map
/// has exactly 7 regions forming K7.
SevenColorTexture seven_color_texture(const FlatTorus& torus = FlatTorus{}, int resolution = 512);

}  // namespace flattorus
