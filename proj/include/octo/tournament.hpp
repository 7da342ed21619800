#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "octo/fano.hpp"

namespace octo {

inline constexpr int kVertexCount = 7;
inline constexpr int kEdgeCount = 21;
inline constexpr std::uint32_t kMaskCount = 1u << kEdgeCount;

/// Lexicographic edge index of {i, j}: (0,1)=0, (0,2)=1, ..., (5,6)=20.
int edge_index(int i, int j);

/// Endpoints (low, high) of edge `index`.
std::pair<int, int> edge_endpoints(int index);

/// Orientation of K7. Bit edge_index(i,j) of the mask is set iff the edge
/// between i < j points from i to j.
class Tournament {
 public:
  constexpr Tournament() = default;
  explicit constexpr Tournament(std::uint32_t mask) : mask_(mask & (kMaskCount - 1)) {}

  /// Every edge from low to high label.
  static constexpr Tournament transitive() { return Tournament(kMaskCount - 1); }

  [[nodiscard]] constexpr std::uint32_t mask() const { return mask_; }
  /// True iff the edge between distinct a and b points from a to b.
  [[nodiscard]] bool beats(int a, int b) const;
  [[nodiscard]] int out_degree(int v) const;

  [[nodiscard]] Tournament with_edge_flipped(int i, int j) const;
  /// Every edge reversed.
  [[nodiscard]] Tournament reversed() const { return Tournament(~mask_); }
  /// Vertex v becomes perm[v].
  [[nodiscard]] Tournament relabel(const PointPermutation& perm) const;

  friend constexpr bool operator==(Tournament, Tournament) = default;
  friend constexpr auto operator<=>(Tournament, Tournament) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// A directed triangle a -> b -> c -> a, stored with the smallest vertex first.
struct OrientedTriangle {
  Line cycle{};

  static OrientedTriangle from_cycle(const Line& t) { return {canonical_cycle(t)}; }
  [[nodiscard]] Line vertices() const { return sorted_line(cycle); }

  friend bool operator==(const OrientedTriangle&, const OrientedTriangle&) = default;
  friend auto operator<=>(const OrientedTriangle&, const OrientedTriangle&) = default;
};

/// Every vertex triple whose edges form a directed cycle, ascending.
std::vector<OrientedTriangle> directed_three_cycles(const Tournament& t);

/// First vertex permutation (lexicographic) p with t1.relabel(p) == t2.
std::optional<PointPermutation> tournaments_isomorphic(const Tournament& t1, const Tournament& t2);

/// Smallest mask over all 5040 relabelings.
Tournament canonical_form(const Tournament& t);

/// All 5040 permutations of {0..6} in lexicographic order.
const std::vector<PointPermutation>& all_permutations();

}  // namespace octo
