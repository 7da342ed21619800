#include "octo/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace octo {
namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

std::string tri_str(const Line& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::array<Edge, 3> edges_of(const Line& t) {
  return {make_edge(t[0], t[1]), make_edge(t[1], t[2]), make_edge(t[0], t[2])};
}

}  // namespace

struct TriangulationBuilder {
  static TriangulationCheck build(std::span<const Line> input, int vertex_count) {
    if (vertex_count < 1 || vertex_count > kMaxTriangulationVertices)
      throw InputError("vertex count out of range: " + std::to_string(vertex_count));
    std::vector<Line> tris;
    tris.reserve(input.size());
    for (const auto& t : input) {
      for (int v : t)
        if (v < 0 || v >= vertex_count)
          throw InputError("vertex out of range in triangle " + tri_str(t));
      const auto s = sorted_line(t);
      if (s[0] == s[1] || s[1] == s[2]) throw InputError("triangle repeats a vertex: " + tri_str(t));
      tris.push_back(s);
    }
    std::sort(tris.begin(), tris.end());
    if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
      throw InputError("duplicate triangle");

    TriangulationCheck out;
    auto defect = [&](std::string condition, std::string witness) {
      out.defect = TriangulationDefect{std::move(condition), std::move(witness)};
      return out;
    };

    // (i) every covered edge lies in exactly two triangles.
    std::map<Edge, std::vector<int>> cover;
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (const auto& e : edges_of(tris[i])) cover[e].push_back(static_cast<int>(i));
    for (const auto& [e, ts] : cover) {
      if (ts.size() == 2) continue;
      const std::string times = ts.size() == 1 ? "once" : std::to_string(ts.size()) + " times";
      return defect("edge double cover", "edge " + edge_str(e) + " covered " + times);
    }

    // (ii) covered edges form a connected graph on all vertices.
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<bool> touched(static_cast<std::size_t>(vertex_count), false);
    for (const auto& [e, ts] : cover) {
      touched[e.first] = touched[e.second] = true;
      parent[find(e.first)] = find(e.second);
    }
    for (int v = 0; v < vertex_count; ++v) {
      if (!touched[v]) return defect("connected skeleton", "vertex " + std::to_string(v) + " is isolated");
      if (find(v) != find(0))
        return defect("connected skeleton",
                      "vertices 0 and " + std::to_string(v) + " lie in different components");
    }

    // (iii) each vertex link is one closed cycle.
    std::vector<std::vector<int>> links(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) {
      std::map<int, std::vector<int>> adj;
      for (const auto& t : tris) {
        if (t[0] != v && t[1] != v && t[2] != v) continue;
        std::array<int, 2> rest{};
        std::size_t k = 0;
        for (int x : t)
          if (x != v) rest[k++] = x;
        adj[rest[0]].push_back(rest[1]);
        adj[rest[1]].push_back(rest[0]);
      }
      // Degree 2 in the link follows from the double cover.
      std::vector<int> cycle;
      int prev = -1;
      int at = adj.begin()->first;
      do {
        cycle.push_back(at);
        const auto& nb = adj[at];
        const int next = (prev == -1) ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
        prev = at;
        at = next;
      } while (at != cycle.front() && cycle.size() <= adj.size());
      if (cycle.size() != adj.size())
        return defect("vertex link", "link of vertex " + std::to_string(v) + " splits: cycle of " +
                                         std::to_string(cycle.size()) + " out of " +
                                         std::to_string(adj.size()) + " neighbours");
      links[v] = std::move(cycle);
    }

    Triangulation tri;
    tri.vertex_count_ = vertex_count;
    tri.triangles_ = std::move(tris);
    for (const auto& [e, ts] : cover) tri.edge_triangles_[e] = {ts[0], ts[1]};
    tri.links_ = std::move(links);
    out.triangulation = std::move(tri);
    return out;
  }
};

TriangulationCheck check_triangulation(std::span<const Line> triangles, int vertex_count) {
  return TriangulationBuilder::build(triangles, vertex_count);
}

int euler_characteristic(const Triangulation& tri) {
  return tri.vertex_count() - static_cast<int>(tri.edge_count()) +
         static_cast<int>(tri.triangles().size());
}

std::optional<DualBipartition> dual_bipartition(const Triangulation& tri) {
  const auto& tris = tri.triangles();
  std::vector<std::vector<int>> adj(tris.size());
  for (const auto& [e, p] : tri.edge_triangles()) {
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
  }
  std::vector<int> color(tris.size(), -1);
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : adj[t]) {
        if (color[u] == -1) {
          color[u] = 1 - color[t];
          stack.push_back(u);
        } else if (color[u] == color[t]) {
          return std::nullopt;
        }
      }
    }
  }
  // triangles() is sorted, so index 0 is the smallest and is coloured 0.
  DualBipartition out;
  for (std::size_t i = 0; i < tris.size(); ++i) (color[i] == 0 ? out.black : out.white).push_back(tris[i]);
  return out;
}

std::optional<std::vector<Line>> coherent_orientation(const Triangulation& tri) {
  const auto& tris = tri.triangles();
  std::vector<std::optional<Line>> orient(tris.size());
  auto traverses = [](const Line& cyc, int a, int b) {
    for (int k = 0; k < 3; ++k)
      if (cyc[k] == a && cyc[(k + 1) % 3] == b) return true;
    return false;
  };
  std::vector<std::vector<std::pair<int, Edge>>> adj(tris.size());
  for (const auto& [e, p] : tri.edge_triangles()) {
    adj[p.first].push_back({p.second, e});
    adj[p.second].push_back({p.first, e});
  }
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (orient[s]) continue;
    orient[s] = tris[s];
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      const Line& cyc = *orient[t];
      for (const auto& [u, e] : adj[t]) {
        // t runs a -> b along the edge; u must run b -> a.
        const auto [a, b] = traverses(cyc, e.first, e.second) ? e : Edge{e.second, e.first};
        const auto& tu = tris[u];
        const int c = tu[0] + tu[1] + tu[2] - a - b;
        const Line want = canonical_cycle({b, a, c});
        if (!orient[u]) {
          orient[u] = want;
          stack.push_back(u);
        } else if (*orient[u] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Line> out;
  for (const auto& o : orient) out.push_back(*o);
  return out;
}

bool is_orientable(const Triangulation& tri) { return coherent_orientation(tri).has_value(); }

std::vector<Line> relabel_triangles(std::span<const Line> triangles, std::span<const int> perm) {
  std::vector<Line> out;
  out.reserve(triangles.size());
  for (const auto& t : triangles) out.push_back(sorted_line({perm[t[0]], perm[t[1]], perm[t[2]]}));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_text(const Triangulation& tri) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& t : tri.triangles()) {
    os << (first ? "" : ",") << '[' << t[0] << ',' << t[1] << ',' << t[2] << ']';
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace octo
