#include "octo/orientation_search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

#include "octo/eisenstein.hpp"

namespace octo {
namespace {

// One entry per vertex triple a < b < c. The triple is a directed cycle iff
// the three edge bits read (ab, bc, ac) = (1, 1, 0) or (0, 0, 1).
struct TripleKernel {
  std::uint32_t edges = 0;
  std::uint32_t forward = 0;   // a -> b -> c -> a
  std::uint32_t backward = 0;  // a -> c -> b -> a
  std::array<std::uint8_t, 3> v{};
};

constexpr int kTripleCount = 35;
constexpr std::uint32_t kAllEdges = kMaskCount - 1;

constexpr int edge_bit(int i, int j) {
  // Lexicographic index of (i, j), i < j, on 7 vertices.
  return i * (2 * kVertexCount - i - 1) / 2 + (j - i - 1);
}

constexpr auto kTriples = [] {
  std::array<TripleKernel, kTripleCount> t{};
  int k = 0;
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      for (int c = b + 1; c < kVertexCount; ++c) {
        const std::uint32_t ab = 1u << edge_bit(a, b), bc = 1u << edge_bit(b, c),
                            ac = 1u << edge_bit(a, c);
        t[k].edges = ab | bc | ac;
        t[k].forward = ab | bc;
        t[k].backward = ac;
        t[k].v = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                  static_cast<std::uint8_t>(c)};
        ++k;
      }
  return t;
}();

// Edges (v, w) with w > v, and with w < v.
constexpr auto kHighEdges = [] {
  std::array<std::uint32_t, kVertexCount> m{};
  for (int v = 0; v < kVertexCount; ++v)
    for (int w = v + 1; w < kVertexCount; ++w) m[v] |= 1u << edge_bit(v, w);
  return m;
}();
constexpr auto kLowEdges = [] {
  std::array<std::uint32_t, kVertexCount> m{};
  for (int v = 0; v < kVertexCount; ++v)
    for (int w = 0; w < v; ++w) m[v] |= 1u << edge_bit(w, v);
  return m;
}();

bool survives_fast(std::uint32_t m) {
  // A tournament on 7 vertices has 35 - sum C(d_v, 2) directed 3-cycles, and
  // the 42 = 21 * 2 edge slots demand 14 of them, which forces every d_v = 3.
  for (int v = 0; v < kVertexCount; ++v)
    if (std::popcount(m & kHighEdges[v]) + std::popcount(~m & kLowEdges[v]) != 3) return false;

  std::array<std::uint8_t, 14> cyc{};
  int n = 0;
  std::uint32_t once = 0, twice = 0, thrice = 0;
  for (int i = 0; i < kTripleCount; ++i) {
    const std::uint32_t x = m & kTriples[i].edges;
    if (x != kTriples[i].forward && x != kTriples[i].backward) continue;
    if (n == 14) return false;
    cyc[n++] = static_cast<std::uint8_t>(i);
    const std::uint32_t e = kTriples[i].edges;
    thrice |= twice & e;
    twice |= once & e;
    once |= e;
  }
  if (thrice != 0 || twice != kAllEdges) return false;

  // Link of v: six triangles give six link edges; they must close up into a
  // single hexagon.
  for (int v = 0; v < kVertexCount; ++v) {
    std::array<std::uint8_t, kVertexCount> adj{};
    for (int k = 0; k < n; ++k) {
      const auto& tv = kTriples[cyc[k]].v;
      if (tv[0] != v && tv[1] != v && tv[2] != v) continue;
      int x = -1, y = -1;
      for (int u : tv)
        if (u != v) (x < 0 ? x : y) = u;
      adj[x] |= static_cast<std::uint8_t>(1u << y);
      adj[y] |= static_cast<std::uint8_t>(1u << x);
    }
    const int start = v == 0 ? 1 : 0;
    int prev = -1, at = start, steps = 0;
    std::uint32_t visited = 0;
    do {
      visited |= 1u << at;
      const std::uint32_t nb = adj[at] & ~(prev >= 0 ? 1u << prev : 0u);
      if (nb == 0) return false;
      prev = at;
      at = std::countr_zero(nb);
      ++steps;
    } while (at != start && steps <= kVertexCount);
    if (steps != kVertexCount - 1 || std::popcount(visited) != kVertexCount - 1) return false;
  }
  return true;
}

}  // namespace

std::vector<Line> cycle_vertex_sets(const Tournament& t) {
  std::vector<Line> out;
  for (const auto& c : directed_three_cycles(t)) out.push_back(c.vertices());
  std::sort(out.begin(), out.end());
  return out;
}

bool oriented_triangulation_test(const Tournament& t) { return survives_fast(t.mask()); }

bool oriented_triangulation_test_slow(const Tournament& t) {
  const auto sets = cycle_vertex_sets(t);
  return check_triangulation(sets, kVertexCount).ok();
}

Triangulation cycle_triangulation(const Tournament& t) {
  const auto sets = cycle_vertex_sets(t);
  auto check = check_triangulation(sets, kVertexCount);
  if (!check.ok()) throw NotTriangulatingError();
  return std::move(*check.triangulation);
}

namespace {

std::pair<std::vector<OrientedTriangle>, std::vector<OrientedTriangle>> colour_classes(
    const Tournament& t) {
  const auto tri = cycle_triangulation(t);
  const auto bip = dual_bipartition(tri);
  if (!bip) throw NotTriangulatingError();
  auto cycles = directed_three_cycles(t);
  std::sort(cycles.begin(), cycles.end());
  const Line anchor = cycles.front().vertices();
  const bool anchor_black = std::find(bip->black.begin(), bip->black.end(), anchor) != bip->black.end();
  const auto& black_sets = anchor_black ? bip->black : bip->white;
  std::vector<OrientedTriangle> black, white;
  for (const auto& c : cycles) {
    const bool is_black =
        std::find(black_sets.begin(), black_sets.end(), c.vertices()) != black_sets.end();
    (is_black ? black : white).push_back(c);
  }
  return {black, white};
}

}  // namespace

std::vector<OrientedTriangle> black_triangles(const Tournament& t) { return colour_classes(t).first; }

std::vector<OrientedTriangle> white_triangles(const Tournament& t) {
  return colour_classes(t).second;
}

OrientedFanoPlane fano_from_orientation(const Tournament& t) {
  std::vector<Line> lines;
  for (const auto& c : black_triangles(t)) lines.push_back(c.cycle);
  return OrientedFanoPlane::from_cyclic_lines(lines);
}

std::vector<std::uint32_t> scan_masks_fast(std::uint32_t begin, std::uint32_t end) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = begin; m < end; ++m)
    if (survives_fast(m)) out.push_back(m);
  return out;
}

std::vector<std::uint32_t> scan_masks_slow(std::uint32_t begin, std::uint32_t end) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = begin; m < end; ++m)
    if (oriented_triangulation_test_slow(Tournament(m))) out.push_back(m);
  return out;
}

bool in_oracle_sample(std::uint32_t mask) {
  // Top six bits of an odd multiplicative hash: a fixed 1/64 of all masks,
  // spread over the whole space.
  return static_cast<std::uint32_t>(mask * 2654435761u) >> 26 == 0;
}

std::vector<std::uint32_t> oracle_sample() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < kMaskCount; ++m)
    if (in_oracle_sample(m)) out.push_back(m);
  return out;
}

std::vector<IsomorphismClass> isomorphism_classes(std::span<const std::uint32_t> masks) {
  std::map<std::uint32_t, std::size_t> classes;
  for (auto m : masks) ++classes[canonical_form(Tournament(m)).mask()];
  std::vector<IsomorphismClass> out;
  for (const auto& [rep, n] : classes) out.push_back({rep, n});
  return out;
}

SearchReport search_orientations(unsigned threads) {
  threads = std::max(1u, threads);
  std::vector<std::vector<std::uint32_t>> parts(threads);
  std::vector<std::thread> workers;
  const std::uint32_t chunk = (kMaskCount + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint32_t begin = std::min(kMaskCount, i * chunk);
    const std::uint32_t end = std::min(kMaskCount, begin + chunk);
    if (threads == 1)
      parts[i] = scan_masks_fast(begin, end);
    else
      workers.emplace_back([&parts, i, begin, end] { parts[i] = scan_masks_fast(begin, end); });
  }
  for (auto& w : workers) w.join();

  SearchReport report;
  report.total = kMaskCount;
  // Ranges are contiguous and ascending, so concatenation stays sorted.
  for (const auto& p : parts) report.survivors.insert(report.survivors.end(), p.begin(), p.end());
  report.classes = isomorphism_classes(report.survivors);
  report.paley_mask = paley_tournament().mask();
  report.paley_survives = std::binary_search(report.survivors.begin(), report.survivors.end(),
                                             report.paley_mask);
  return report;
}

}  // namespace octo
