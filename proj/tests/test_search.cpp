#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "octo/eisenstein.hpp"
#include "octo/octonion.hpp"
#include "octo/orientation_search.hpp"
#include "octo/regression_constants.hpp"

using namespace octo;

namespace {

const SearchReport& full_search() {
  static const SearchReport report = search_orientations(1);
  return report;
}

std::set<OrientedTriangle> index_rule_cycles(int d1, int d2, int d3) {
  std::set<OrientedTriangle> out;
  for (int n = 0; n < 7; ++n) out.insert(OrientedTriangle::from_cycle({(n + d1) % 7, (n + d2) % 7, (n + d3) % 7}));
  return out;
}

}  // namespace

TEST(OrientedTriangulationTest, Examples) {
  const auto paley = paley_tournament();
  EXPECT_TRUE(oriented_triangulation_test(paley));
  EXPECT_TRUE(oriented_triangulation_test(paley.reversed()));
  EXPECT_FALSE(oriented_triangulation_test(Tournament::transitive()));
  for (int i = 0; i < kEdgeCount; ++i) {
    const auto [a, b] = edge_endpoints(i);
    EXPECT_FALSE(oriented_triangulation_test(paley.with_edge_flipped(a, b))) << a << "," << b;
  }
}

TEST(OrientedTriangulationTest, NeedsTriangulatingInput) {
  EXPECT_THROW(cycle_triangulation(Tournament::transitive()), NotTriangulatingError);
  EXPECT_THROW(black_triangles(Tournament::transitive()), NotTriangulatingError);
  EXPECT_THROW(fano_from_orientation(paley_tournament().with_edge_flipped(0, 1)), NotTriangulatingError);
}

TEST(OrientedTriangulationTest, FastMatchesSlowOnSample) {
  const auto sample = oracle_sample();
  EXPECT_EQ(sample.size(), regression::kSampleSize);
  std::size_t survivors = 0;
  for (auto m : sample) {
    const Tournament t(m);
    const bool fast = oriented_triangulation_test(t);
    ASSERT_EQ(fast, oriented_triangulation_test_slow(t)) << m;
    survivors += fast ? 1 : 0;
  }
  EXPECT_EQ(survivors, regression::kSampleSurvivorCount);
}

TEST(OrientedTriangulationTest, FastMatchesSlowNearSurvivors) {
  // Single and double edge flips of survivors probe the boundary of the test.
  for (std::size_t k = 0; k < full_search().survivors.size(); k += 8) {
    const Tournament t(full_search().survivors[k]);
    for (int i = 0; i < kEdgeCount; ++i) {
      const auto [a, b] = edge_endpoints(i);
      const auto once = t.with_edge_flipped(a, b);
      EXPECT_EQ(oriented_triangulation_test(once), oriented_triangulation_test_slow(once));
      for (int j = i + 1; j < kEdgeCount; ++j) {
        const auto [c, d] = edge_endpoints(j);
        const auto twice = once.with_edge_flipped(c, d);
        ASSERT_EQ(oriented_triangulation_test(twice), oriented_triangulation_test_slow(twice)) << twice.mask();
      }
    }
  }
}

TEST(ScanMasks, RangesAgree) {
  const std::uint32_t begin = 1956555u - 3000u, end = 1956555u + 3000u;
  const auto fast = scan_masks_fast(begin, end);
  EXPECT_EQ(fast, scan_masks_slow(begin, end));
  EXPECT_NE(std::find(fast.begin(), fast.end(), 1956555u), fast.end());
  EXPECT_TRUE(scan_masks_fast(0, 4096).empty());
}

TEST(SearchOrientations, Totals) {
  const auto& report = full_search();
  EXPECT_EQ(report.total, kMaskCount);
  EXPECT_EQ(report.survivors.size(), regression::kSurvivorCount);
  EXPECT_TRUE(std::is_sorted(report.survivors.begin(), report.survivors.end()));
  ASSERT_EQ(report.classes.size(), 1u);
  EXPECT_EQ(report.classes[0].size, report.survivors.size());
  EXPECT_EQ(report.paley_mask, paley_tournament().mask());
  EXPECT_TRUE(report.paley_survives);
  EXPECT_EQ(report.classes[0].representative, canonical_form(paley_tournament()).mask());
}

TEST(SearchOrientations, SurvivorsAreThePaleyOrbit) {
  // Orbit-stabilizer: count automorphisms directly, then enumerate the orbit.
  const auto paley = paley_tournament();
  std::size_t automorphisms = 0;
  std::set<std::uint32_t> orbit;
  for (const auto& p : all_permutations()) {
    const auto image = paley.relabel(p);
    automorphisms += image == paley ? 1 : 0;
    orbit.insert(image.mask());
  }
  EXPECT_EQ(automorphisms, 21u);
  EXPECT_EQ(orbit.size(), 5040u / automorphisms);
  EXPECT_EQ(std::vector<std::uint32_t>(orbit.begin(), orbit.end()), full_search().survivors);
}

TEST(SearchOrientations, ThreadCountDoesNotMatter) {
  const auto three = search_orientations(3);
  EXPECT_EQ(three.survivors, full_search().survivors);
  EXPECT_EQ(three.classes.size(), full_search().classes.size());
  EXPECT_EQ(three.classes[0].representative, full_search().classes[0].representative);
}

TEST(SearchOrientations, SurvivorInvariants) {
  const auto& survivors = full_search().survivors;
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    const Tournament t(survivors[k]);
    for (int v = 0; v < 7; ++v) ASSERT_EQ(t.out_degree(v), 3);
    ASSERT_EQ(directed_three_cycles(t).size(), 14u);
    const auto tri = cycle_triangulation(t);
    EXPECT_EQ(euler_characteristic(tri), 0);
    EXPECT_TRUE(is_orientable(tri));
    const auto black = black_triangles(t);
    const auto white = white_triangles(t);
    ASSERT_EQ(black.size(), 7u);
    ASSERT_EQ(white.size(), 7u);
    std::vector<Line> bl, wl;
    for (const auto& c : black) bl.push_back(c.cycle);
    for (const auto& c : white) wl.push_back(c.cycle);
    EXPECT_TRUE(verify_projective_plane(bl).passed());
    EXPECT_TRUE(verify_projective_plane(wl).passed());
    if (k % 16 == 0) {
      EXPECT_TRUE(verify_alternative(structure_constants(fano_from_orientation(t))).passed) << t.mask();
    }
  }
}

TEST(BlackTriangles, Paley) {
  const auto paley = paley_tournament();
  const auto black = black_triangles(paley);
  EXPECT_EQ(std::set<OrientedTriangle>(black.begin(), black.end()), index_rule_cycles(1, 2, 4));
  const auto white = white_triangles(paley);
  EXPECT_EQ(std::set<OrientedTriangle>(white.begin(), white.end()), index_rule_cycles(3, 5, 6));
  EXPECT_EQ(black.front(), OrientedTriangle::from_cycle({0, 1, 3}));
}

TEST(FanoFromOrientation, PaleyGivesStandardPlane) {
  EXPECT_EQ(fano_from_orientation(paley_tournament()), standard_fano());
  EXPECT_EQ(structure_constants(fano_from_orientation(paley_tournament())), StructureConstants::from_index_rules());
}

TEST(OracleSample, Deterministic) {
  std::size_t n = 0;
  for (std::uint32_t m = 0; m < kMaskCount; ++m) n += in_oracle_sample(m) ? 1 : 0;
  EXPECT_EQ(n, oracle_sample().size());
  for (auto m : oracle_sample()) EXPECT_TRUE(in_oracle_sample(m));
}

TEST(IsomorphismClasses, Grouping) {
  const auto paley = paley_tournament().mask();
  const auto trans = Tournament::transitive().mask();
  const std::vector<std::uint32_t> masks{paley, trans, Tournament(paley).reversed().mask(), 0u};
  const auto classes = isomorphism_classes(masks);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].size + classes[1].size, 4u);
  for (const auto& c : classes) EXPECT_EQ(c.size, 2u);
}

TEST(TriangleSets, CanonicalAndIsomorphic) {
  const auto a = cycle_vertex_sets(paley_tournament());
  PointPermutation p{4, 0, 5, 1, 6, 2, 3};
  std::vector<int> perm(p.begin(), p.end());
  const auto b = relabel_triangles(a, perm);
  EXPECT_EQ(canonical_triangle_set(a), canonical_triangle_set(b));
  const auto found = triangle_sets_isomorphic(a, b);
  ASSERT_TRUE(found);
  std::vector<int> fp(found->begin(), found->end());
  EXPECT_EQ(relabel_triangles(a, fp), b);
  EXPECT_EQ(__builtin_popcountll(triangle_set_mask(a)), 14);
}
