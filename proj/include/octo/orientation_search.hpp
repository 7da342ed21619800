#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "octo/fano.hpp"
#include "octo/tournament.hpp"
#include "octo/triangulation.hpp"

namespace octo {

/// Raised when an operation needs a tournament whose directed 3-cycles
/// triangulate a surface and the argument is not one.
class NotTriangulatingError : public std::invalid_argument {
 public:
  NotTriangulatingError() : std::invalid_argument("not a triangulating orientation") {}
};

/// Vertex sets of the directed 3-cycles.
std::vector<Line> cycle_vertex_sets(const Tournament& t);

/// True iff the directed 3-cycles of t form a closed triangulated surface on
/// all seven vertices.
bool oriented_triangulation_test(const Tournament& t);

/// Triangulation formed by the directed 3-cycles. Throws NotTriangulatingError.
Triangulation cycle_triangulation(const Tournament& t);

/// The dual colour class containing the lexicographically smallest directed
/// triangle, each with its directed-cycle orientation. Throws
/// NotTriangulatingError.
std::vector<OrientedTriangle> black_triangles(const Tournament& t);
/// The other class.
std::vector<OrientedTriangle> white_triangles(const Tournament& t);

/// Black triangles read as the cyclic lines of a Fano plane.
OrientedFanoPlane fano_from_orientation(const Tournament& t);

/// Bitmask kernel: survivors among masks [begin, end), ascending.
std::vector<std::uint32_t> scan_masks_fast(std::uint32_t begin, std::uint32_t end);

/// Direct per-mask evaluation through directed_three_cycles and
/// check_triangulation; shares no code with the bitmask kernel.
bool oriented_triangulation_test_slow(const Tournament& t);
std::vector<std::uint32_t> scan_masks_slow(std::uint32_t begin, std::uint32_t end);

/// Deterministic ~1/64 subset of the mask space used to cross-check the two
/// scans.
bool in_oracle_sample(std::uint32_t mask);
std::vector<std::uint32_t> oracle_sample();

struct IsomorphismClass {
  std::uint32_t representative = 0;  // canonical (minimum) mask
  std::size_t size = 0;
};

struct SearchReport {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> survivors;
  std::vector<IsomorphismClass> classes;
  std::uint32_t paley_mask = 0;
  bool paley_survives = false;
};

/// Scans all 2^21 orientations, split into `threads` contiguous ranges, and
/// groups survivors by canonical form. Output does not depend on `threads`.
SearchReport search_orientations(unsigned threads = 1);

/// Groups masks into isomorphism classes, ordered by representative.
std::vector<IsomorphismClass> isomorphism_classes(std::span<const std::uint32_t> masks);

/// Bit i set iff the i-th of the 35 sorted vertex triples is present.
std::uint64_t triangle_set_mask(std::span<const Line> triangles);
/// Minimum triangle_set_mask over all 5040 relabelings.
std::uint64_t canonical_triangle_set(std::span<const Line> triangles);
/// First permutation carrying set a onto set b.
std::optional<PointPermutation> triangle_sets_isomorphic(std::span<const Line> a,
                                                         std::span<const Line> b);

struct TriangulationEnumeration {
  /// Families of triples covering each edge of K7 exactly twice.
  std::size_t double_covers = 0;
  /// Those whose vertex links are single cycles, ascending.
  std::vector<Triangulation> surfaces;
  bool all_isomorphic = false;
  bool all_orientable = false;
};

/// Backtracking over the 35 vertex triples with edge-multiplicity pruning.
TriangulationEnumeration enumerate_triangulations();

}  // namespace octo
