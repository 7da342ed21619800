#include "octo/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

namespace octo {

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxGraphVertices)
    throw InputError("graph size out of range: " + std::to_string(vertex_count));
  tags_.resize(static_cast<std::size_t>(vertex_count));
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("loops are not allowed");
  rows_[u] |= static_cast<std::uint16_t>(1u << v);
  rows_[v] |= static_cast<std::uint16_t>(1u << u);
}

int SimpleGraph::degree(int v) const { return std::popcount(rows_[v]); }

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (has_edge(v, w)) out.push_back(w);
  return out;
}

SimpleGraph dual_graph(const Triangulation& tri) {
  const auto& tris = tri.triangles();
  SimpleGraph g(static_cast<int>(tris.size()));
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    g.set_tag(static_cast<int>(i), "triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                                       "," + std::to_string(t[2]) + "}");
  }
  for (const auto& [e, p] : tri.edge_triangles()) g.add_edge(p.first, p.second);
  return g;
}

SimpleGraph incidence_graph(const FanoPlane& plane) {
  SimpleGraph g(2 * kPointCount);
  for (int p = 0; p < kPointCount; ++p) g.set_tag(p, "point " + std::to_string(p));
  for (int i = 0; i < kPointCount; ++i) {
    const auto& l = plane.lines()[i];
    g.set_tag(kPointCount + i, "line {" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," +
                                   std::to_string(l[2]) + "}");
    for (int p : l) g.add_edge(p, kPointCount + i);
  }
  return g;
}

namespace {

bool mapping_is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const std::vector<int>& map) {
  for (int u = 0; u < g1.vertex_count(); ++u)
    for (int v = 0; v < g1.vertex_count(); ++v)
      if (u != v && g1.has_edge(u, v) != g2.has_edge(map[u], map[v])) return false;
  return true;
}

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& g1, const SimpleGraph& g2) : g1_(g1), g2_(g2) {
    // Assign in BFS order so each new vertex usually has a mapped neighbour.
    const int n = g1.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        order_.push_back(v);
        for (int w : g1.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
      }
    }
    map_.assign(static_cast<std::size_t>(n), -1);
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const int v = order_[k];
    for (int c = 0; c < g2_.vertex_count(); ++c) {
      if ((used_ >> c) & 1u) continue;
      if (g2_.degree(c) != g1_.degree(v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = order_[j];
        ok = g1_.has_edge(u, v) == g2_.has_edge(map_[u], c);
      }
      if (!ok) continue;
      map_[v] = c;
      used_ |= 1u << c;
      if (extend(k + 1)) return true;
      used_ &= ~(1u << c);
      map_[v] = -1;
    }
    return false;
  }

  const SimpleGraph& g1_;
  const SimpleGraph& g2_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::uint32_t used_ = 0;
};

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (degree_sequence(g1) != degree_sequence(g2)) return std::nullopt;
  auto map = IsoSearch(g1, g2).run();
  if (map && !mapping_is_isomorphism(g1, g2, *map)) return std::nullopt;
  return map;
}

std::optional<Bipartition> is_bipartite(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

int girth(const SimpleGraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<int> degree_sequence(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!g.tag(v).empty()) os << " [label=\"" << g.tag(v) << "\"]";
    os << ";\n";
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace octo
