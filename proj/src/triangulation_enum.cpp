#include <algorithm>

#include "octo/orientation_search.hpp"

namespace octo {
namespace {

constexpr int kTripleCount = 35;

struct Triples {
  std::array<Line, kTripleCount> sets{};
  std::array<std::array<int, 3>, kTripleCount> edges{};
  std::array<std::vector<int>, kEdgeCount> by_edge;

  Triples() {
    int k = 0;
    for (int a = 0; a < kVertexCount; ++a)
      for (int b = a + 1; b < kVertexCount; ++b)
        for (int c = b + 1; c < kVertexCount; ++c) {
          sets[k] = {a, b, c};
          edges[k] = {edge_index(a, b), edge_index(b, c), edge_index(a, c)};
          for (int e : edges[k]) by_edge[e].push_back(k);
          ++k;
        }
  }
};

const Triples& triples() {
  static const Triples t;
  return t;
}

int triple_index(const Line& sorted) {
  const auto& s = triples().sets;
  const auto it = std::lower_bound(s.begin(), s.end(), sorted);
  if (it == s.end() || *it != sorted) throw InputError("not a triple of distinct vertices in {0..6}");
  return static_cast<int>(it - s.begin());
}

enum class Status : std::uint8_t { Open, In, Out };

// Chooses sets of triples covering each edge exactly twice. At each node the
// most constrained deficient edge is branched on; candidates tried earlier at
// the same node are excluded below it, so every family is produced once.
class DoubleCoverSearch {
 public:
  std::vector<std::vector<int>> run() {
    recurse();
    return std::move(solutions_);
  }

 private:
  bool feasible(int t) const {
    if (status_[t] != Status::Open) return false;
    for (int e : triples().edges[t])
      if (cover_[e] >= 2) return false;
    return true;
  }

  void recurse() {
    int best_edge = -1;
    std::size_t best_options = SIZE_MAX;
    for (int e = 0; e < kEdgeCount; ++e) {
      if (cover_[e] == 2) continue;
      std::size_t options = 0;
      for (int t : triples().by_edge[e]) options += feasible(t) ? 1 : 0;
      if (options < static_cast<std::size_t>(2 - cover_[e])) return;
      if (options < best_options) {
        best_options = options;
        best_edge = e;
      }
    }
    if (best_edge < 0) {
      solutions_.push_back(chosen_);
      return;
    }
    std::vector<int> excluded;
    for (int t : triples().by_edge[best_edge]) {
      if (!feasible(t)) continue;
      set(t, Status::In);
      chosen_.push_back(t);
      recurse();
      chosen_.pop_back();
      set(t, Status::Open);
      status_[t] = Status::Out;
      excluded.push_back(t);
    }
    for (int t : excluded) status_[t] = Status::Open;
  }

  void set(int t, Status s) {
    const int delta = s == Status::In ? 1 : -1;
    for (int e : triples().edges[t]) cover_[e] += delta;
    status_[t] = s;
  }

  std::array<int, kEdgeCount> cover_{};
  std::array<Status, kTripleCount> status_{};
  std::vector<int> chosen_;
  std::vector<std::vector<int>> solutions_;
};

}  // namespace

std::uint64_t triangle_set_mask(std::span<const Line> triangles) {
  std::uint64_t m = 0;
  for (const auto& t : triangles) m |= std::uint64_t{1} << triple_index(sorted_line(t));
  return m;
}

std::uint64_t canonical_triangle_set(std::span<const Line> triangles) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& p : all_permutations())
    best = std::min(best, triangle_set_mask(relabel_triangles(triangles, p)));
  return best;
}

std::optional<PointPermutation> triangle_sets_isomorphic(std::span<const Line> a,
                                                         std::span<const Line> b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto target = triangle_set_mask(b);
  for (const auto& p : all_permutations())
    if (triangle_set_mask(relabel_triangles(a, p)) == target) return p;
  return std::nullopt;
}

TriangulationEnumeration enumerate_triangulations() {
  TriangulationEnumeration out;
  const auto families = DoubleCoverSearch().run();
  out.double_covers = families.size();
  for (const auto& family : families) {
    std::vector<Line> tris;
    for (int t : family) tris.push_back(triples().sets[t]);
    auto check = check_triangulation(tris, kVertexCount);
    if (check.ok()) out.surfaces.push_back(std::move(*check.triangulation));
  }
  std::sort(out.surfaces.begin(), out.surfaces.end(),
            [](const Triangulation& x, const Triangulation& y) { return x.triangles() < y.triangles(); });

  out.all_orientable = std::all_of(out.surfaces.begin(), out.surfaces.end(),
                                   [](const Triangulation& t) { return is_orientable(t); });
  out.all_isomorphic = true;
  if (!out.surfaces.empty()) {
    const auto ref = canonical_triangle_set(out.surfaces.front().triangles());
    for (const auto& s : out.surfaces)
      if (canonical_triangle_set(s.triangles()) != ref) out.all_isomorphic = false;
  }
  return out;
}

}  // namespace octo
