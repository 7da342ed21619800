#pragma once

#include <array>
#include <string>
#include <vector>

#include "octo/eisenstein.hpp"
#include "octo/rational.hpp"

namespace octo {

/// Planar point (x, y * sqrt(3)) with x and y exact; the plane embeds
/// 1 -> (1, 0) and w -> (-1/2, sqrt(3)/2).
struct ExactPoint {
  Rational x;
  Rational y_sqrt3;

  [[nodiscard]] double x_value() const { return x.convert_to<double>(); }
  [[nodiscard]] double y_value() const;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

ExactPoint embed(const EisensteinInt& z);

/// A corner of the hexagonal (Voronoi) tiling, i.e. the centroid of a unit
/// lattice triangle. Up triangles are (base, base+1, base+1+w); down
/// triangles are (base, base+1+w, base+w). Both listings are counterclockwise.
struct HexCorner {
  EisensteinInt base;
  bool up = true;

  /// The three lattice points around the corner, counterclockwise.
  [[nodiscard]] std::array<EisensteinInt, 3> surrounding_cells() const;
  [[nodiscard]] ExactPoint position() const;

  friend bool operator==(const HexCorner&, const HexCorner&) = default;
};

/// Corners of the Voronoi cell of `center`, counterclockwise from angle 30 deg.
std::array<HexCorner, 6> cell_corners(const EisensteinInt& center);

struct HexCell {
  Representative rep;
  ExactPoint center;
  std::array<HexCorner, 6> corners;
};

struct MapCorner {
  HexCorner corner;
  /// Residues of the surrounding cells, counterclockwise.
  std::array<Residue, 3> residues;
  /// Corner class modulo the lattice: 2 * residue(base) + (up ? 0 : 1).
  int corner_class = 0;
  /// Number of the seven shaded cells having this corner.
  int shaded_cells = 0;
  bool circled = false;
};

/// Renderer-agnostic model of the seven-hexagon fundamental domain.
struct HexagonMap {
  Chirality chirality = Chirality::Standard;
  /// Generator of the period lattice (2 - w, or 2 - w^2 for Mirror).
  EisensteinInt lattice_generator;
  /// The six shortest nonzero periods: +-g, +-w g, +-w^2 g.
  std::vector<EisensteinInt> neighbor_translates;
  std::vector<HexCell> cells;
  /// Distinct corners of the shaded cells, in first-seen order.
  std::vector<MapCorner> corners;
  /// Boundary of the union of shaded cells as a closed polygon.
  std::vector<ExactPoint> outline;
  /// One marker per circled corner class.
  std::vector<MapCorner> circled;

  /// Distinct corner classes among `corners`.
  [[nodiscard]] int corner_class_count() const;
};

/// A corner is circled when its surrounding residues, read
/// counterclockwise, follow the orientation rule edge by edge.
bool corner_is_circled(const std::array<Residue, 3>& ccw_residues, Chirality chirality);

HexagonMap hexagon_map_geometry(Chirality chirality = Chirality::Standard);

}  // namespace octo
