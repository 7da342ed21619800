#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octo/fano.hpp"
#include "octo/triangulation.hpp"

namespace octo {

inline constexpr int kMaxGraphVertices = 16;

/// Loopless undirected graph on at most 16 vertices, adjacency as bit rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(int vertex_count);

  void add_edge(int u, int v);
  void set_tag(int v, std::string tag) { tags_.at(v) = std::move(tag); }

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
  [[nodiscard]] std::uint16_t row(int v) const { return rows_[v]; }
  [[nodiscard]] int degree(int v) const;
  [[nodiscard]] int edge_count() const;
  [[nodiscard]] std::vector<int> neighbors(int v) const;
  [[nodiscard]] const std::string& tag(int v) const { return tags_.at(v); }

 private:
  int n_ = 0;
  std::array<std::uint16_t, kMaxGraphVertices> rows_{};
  std::vector<std::string> tags_;
};

/// One vertex per triangle (in tri.triangles() order), adjacent when the
/// triangles share an edge. Tags read "triangle {a,b,c}".
SimpleGraph dual_graph(const Triangulation& tri);

/// Points 0..6 become vertices 0..6 ("point p"); line i of plane.lines()
/// becomes vertex 7+i ("line {a,b,c}").
SimpleGraph incidence_graph(const FanoPlane& plane);

/// mapping[v] is the image in g2 of vertex v of g1. Every returned mapping is
/// re-validated edge by edge.
std::optional<std::vector<int>> graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

struct Bipartition {
  std::vector<int> first;  // holds vertex 0
  std::vector<int> second;
};
std::optional<Bipartition> is_bipartite(const SimpleGraph& g);

/// Length of a shortest cycle; 0 for a forest.
int girth(const SimpleGraph& g);

std::vector<int> degree_sequence(const SimpleGraph& g);

std::string to_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace octo
