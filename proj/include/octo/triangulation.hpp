#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octo/fano.hpp"

namespace octo {

inline constexpr int kMaxTriangulationVertices = 14;

using Edge = std::pair<int, int>;  // first < second

/// Closed combinatorial surface given by its triangles. Only
/// check_triangulation constructs one, so every instance satisfies: each
/// covered edge lies in exactly two triangles, the edge graph is connected
/// and spans all vertices, and every vertex link is a single cycle.
class Triangulation {
 public:
  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  /// Sorted triples, ascending.
  [[nodiscard]] const std::vector<Line>& triangles() const { return triangles_; }
  [[nodiscard]] std::size_t edge_count() const { return edge_triangles_.size(); }
  /// Indices (into triangles()) of the two triangles on an edge.
  [[nodiscard]] const std::map<Edge, std::pair<int, int>>& edge_triangles() const {
    return edge_triangles_;
  }
  /// Link of v as a cyclic sequence of neighbouring vertices.
  [[nodiscard]] const std::vector<int>& link(int v) const { return links_.at(v); }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.vertex_count_ == b.vertex_count_ && a.triangles_ == b.triangles_;
  }

 private:
  friend struct TriangulationBuilder;
  int vertex_count_ = 0;
  std::vector<Line> triangles_;
  std::map<Edge, std::pair<int, int>> edge_triangles_;
  std::vector<std::vector<int>> links_;
};

struct TriangulationDefect {
  /// "edge double cover", "connected skeleton" or "vertex link".
  std::string condition;
  std::string witness;
};

struct TriangulationCheck {
  std::optional<Triangulation> triangulation;
  std::optional<TriangulationDefect> defect;

  [[nodiscard]] bool ok() const { return triangulation.has_value(); }
};

/// Validates triangles over {0..vertex_count-1} as a closed surface. Throws
/// InputError for malformed input: vertex_count outside 1..14, labels out of
/// range, a repeated vertex, or a repeated triangle.
TriangulationCheck check_triangulation(std::span<const Line> triangles, int vertex_count);

/// V - E + F.
int euler_characteristic(const Triangulation& tri);

struct DualBipartition {
  std::vector<Line> black;
  std::vector<Line> white;
};

/// Two-colouring of triangles so that edge-adjacent triangles differ; the
/// class holding the smallest triangle is black. nullopt on an odd dual cycle.
std::optional<DualBipartition> dual_bipartition(const Triangulation& tri);

/// Cyclic orientation for every triangle such that each shared edge is
/// traversed in opposite directions, or nullopt if none exists.
std::optional<std::vector<Line>> coherent_orientation(const Triangulation& tri);

bool is_orientable(const Triangulation& tri);

/// Image of the triangle set under a vertex permutation, sorted.
std::vector<Line> relabel_triangles(std::span<const Line> triangles, std::span<const int> perm);

/// Sorted list of sorted triples, e.g. "[[0,1,3],[0,1,5],...]".
std::string to_text(const Triangulation& tri);

}  // namespace octo
