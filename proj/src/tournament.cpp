#include "octo/tournament.hpp"

#include <algorithm>
#include <bit>

namespace octo {
namespace {

constexpr auto kEdgeIndexTable = [] {
  std::array<std::array<int, kVertexCount>, kVertexCount> t{};
  int k = 0;
  for (int i = 0; i < kVertexCount; ++i) {
    t[i][i] = -1;
    for (int j = i + 1; j < kVertexCount; ++j) {
      t[i][j] = k;
      t[j][i] = k;
      ++k;
    }
  }
  return t;
}();

void require_vertex(int v) {
  if (v < 0 || v >= kVertexCount) throw InputError("vertex out of range: " + std::to_string(v));
}

}  // namespace

int edge_index(int i, int j) {
  require_vertex(i);
  require_vertex(j);
  if (i == j) throw InputError("edge needs distinct endpoints");
  return kEdgeIndexTable[i][j];
}

std::pair<int, int> edge_endpoints(int index) {
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j)
      if (kEdgeIndexTable[i][j] == index) return {i, j};
  throw InputError("edge index out of range: " + std::to_string(index));
}

bool Tournament::beats(int a, int b) const {
  const bool low_to_high = (mask_ >> edge_index(a, b)) & 1u;
  return a < b ? low_to_high : !low_to_high;
}

int Tournament::out_degree(int v) const {
  require_vertex(v);
  int d = 0;
  for (int w = 0; w < kVertexCount; ++w)
    if (w != v && beats(v, w)) ++d;
  return d;
}

Tournament Tournament::with_edge_flipped(int i, int j) const {
  return Tournament(mask_ ^ (1u << edge_index(i, j)));
}

Tournament Tournament::relabel(const PointPermutation& perm) const {
  std::uint32_t out = 0;
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j) {
      // Edge i->j (or j->i) becomes perm[i]->perm[j] (or the reverse).
      const int pi = perm[i], pj = perm[j];
      const bool i_to_j = beats(i, j);
      const bool low_to_high = (pi < pj) == i_to_j;
      if (low_to_high) out |= 1u << kEdgeIndexTable[pi][pj];
    }
  return Tournament(out);
}

std::vector<OrientedTriangle> directed_three_cycles(const Tournament& t) {
  std::vector<OrientedTriangle> out;
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      for (int c = b + 1; c < kVertexCount; ++c) {
        if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a))
          out.push_back({{a, b, c}});
        else if (t.beats(a, c) && t.beats(c, b) && t.beats(b, a))
          out.push_back({{a, c, b}});
      }
  return out;
}

const std::vector<PointPermutation>& all_permutations() {
  static const std::vector<PointPermutation> perms = [] {
    std::vector<PointPermutation> v;
    PointPermutation p{0, 1, 2, 3, 4, 5, 6};
    do v.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

std::optional<PointPermutation> tournaments_isomorphic(const Tournament& t1, const Tournament& t2) {
  // Cheap invariant first: sorted score sequences must agree.
  std::array<int, kVertexCount> s1{}, s2{};
  for (int v = 0; v < kVertexCount; ++v) {
    s1[v] = t1.out_degree(v);
    s2[v] = t2.out_degree(v);
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  for (const auto& p : all_permutations())
    if (t1.relabel(p) == t2) return p;
  return std::nullopt;
}

Tournament canonical_form(const Tournament& t) {
  Tournament best = t;
  for (const auto& p : all_permutations()) best = std::min(best, t.relabel(p));
  return best;
}

}  // namespace octo
