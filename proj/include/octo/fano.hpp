#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "octo/check_report.hpp"

namespace octo {

inline constexpr int kPointCount = 7;

/// Three point labels in {0..6}. For an unordered line the entries are
/// ascending; for a cyclic line the smallest label comes first.
using Line = std::array<int, 3>;

/// A relabeling of {0..6}: point i maps to perm[i].
using PointPermutation = std::array<int, kPointCount>;

/// Rotates a cyclic triple so that its smallest element is first.
/// Orientation is preserved: (2,0,1) -> (0,1,2), (2,1,0) -> (0,2,1).
Line canonical_cycle(const Line& t);

/// Sorts a triple ascending.
Line sorted_line(Line t);

/// Unoriented Fano plane on points {0..6}.
class FanoPlane {
 public:
  /// Throws InputError unless the lines satisfy every projective-plane axiom.
  static FanoPlane from_lines(std::span<const Line> lines);

  [[nodiscard]] const std::array<Line, kPointCount>& lines() const { return lines_; }
  [[nodiscard]] bool contains_line(Line l) const;
  /// Third point of the unique line through distinct a and b.
  [[nodiscard]] int third_point(int a, int b) const;

  friend bool operator==(const FanoPlane&, const FanoPlane&) = default;

 private:
  FanoPlane() = default;
  std::array<Line, kPointCount> lines_{};
};

/// Fano plane with a cyclic order on each line.
class OrientedFanoPlane {
 public:
  /// Triples may be given in any rotation; they are canonicalized and sorted.
  /// Throws InputError if a triple repeats a point or the underlying lines do
  /// not form a projective plane.
  static OrientedFanoPlane from_cyclic_lines(std::span<const Line> lines);

  [[nodiscard]] const std::array<Line, kPointCount>& lines() const { return lines_; }

  /// Copy with line `index` (in sorted order) traversed the other way round.
  [[nodiscard]] OrientedFanoPlane with_line_reversed(std::size_t index) const;
  /// Copy with every line reversed.
  [[nodiscard]] OrientedFanoPlane reversed() const;

  friend bool operator==(const OrientedFanoPlane&, const OrientedFanoPlane&) = default;

 private:
  OrientedFanoPlane() = default;
  std::array<Line, kPointCount> lines_{};
};

/// Cyclic lines (n+1, n+2, n+4) mod 7 for n = 0..6.
OrientedFanoPlane standard_fano();

/// Checks the four axioms: seven distinct lines, every pair of points on
/// exactly one line, every two lines meeting in exactly one point, every point
/// on exactly three lines. All failures are reported, at most ten witnesses
/// per axiom. Throws InputError for wrong counts or labels outside {0..6}.
CheckReport verify_projective_plane(std::span<const Line> lines);

/// The three lines through p, in the plane's sorted order.
std::array<Line, 3> lines_through(const FanoPlane& plane, int p);

/// Forgets the cyclic order of each line.
FanoPlane underlying(const OrientedFanoPlane& op);

/// Image of `plane` under `perm`.
FanoPlane relabel(const FanoPlane& plane, const PointPermutation& perm);
OrientedFanoPlane relabel(const OrientedFanoPlane& plane, const PointPermutation& perm);

/// First permutation (lexicographic) carrying the lines of p1 onto those of
/// p2, or nullopt.
std::optional<PointPermutation> planes_isomorphic(const FanoPlane& p1, const FanoPlane& p2);

PointPermutation inverse_permutation(const PointPermutation& perm);

/// One line per line of the plane, points separated by spaces.
std::string to_text(const FanoPlane& plane);
/// As above with each line prefixed by "cyclic:".
std::string to_text(const OrientedFanoPlane& plane);

}  // namespace octo
