#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "octo/orientation_search.hpp"
#include "octo/regression_constants.hpp"

using namespace octo;

namespace {

// Include/exclude walk over the 35 triples in lexicographic order. An edge is
// settled once its last triple has been decided and must then be covered twice.
class SubsetOracle {
 public:
  SubsetOracle() {
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c) triples_.push_back({a, b, c});
    last_.fill(-1);
    for (int i = 0; i < 35; ++i)
      for (auto e : edges(triples_[i])) last_[e] = i;
  }

  std::vector<std::vector<Line>> run() {
    walk(0);
    return std::move(found_);
  }

 private:
  static std::array<int, 3> edges(const Line& t) {
    return {t[0] * 7 + t[1], t[0] * 7 + t[2], t[1] * 7 + t[2]};
  }

  void walk(int i) {
    for (int e = 0; e < 49; ++e)
      if (last_[e] >= 0 && last_[e] < i && cover_[e] != 2) return;
    if (i == 35) {
      found_.push_back(chosen_);
      return;
    }
    const auto es = edges(triples_[i]);
    if (cover_[es[0]] < 2 && cover_[es[1]] < 2 && cover_[es[2]] < 2) {
      for (auto e : es) ++cover_[e];
      chosen_.push_back(triples_[i]);
      walk(i + 1);
      chosen_.pop_back();
      for (auto e : es) --cover_[e];
    }
    walk(i + 1);
  }

  std::vector<Line> triples_;
  std::array<int, 49> last_{};
  std::array<int, 49> cover_{};
  std::vector<Line> chosen_;
  std::vector<std::vector<Line>> found_;
};

const TriangulationEnumeration& enumeration() {
  static const auto e = enumerate_triangulations();
  return e;
}

}  // namespace

TEST(EnumerateTriangulations, DoubleCoversMatchSubsetOracle) {
  const auto families = SubsetOracle().run();
  EXPECT_EQ(families.size(), regression::kDoubleCoverCount);
  EXPECT_EQ(enumeration().double_covers, families.size());

  std::set<std::vector<Line>> oracle_surfaces;
  for (const auto& f : families) {
    EXPECT_EQ(f.size(), 14u);
    if (check_triangulation(f, 7).ok()) oracle_surfaces.insert(f);
  }
  std::set<std::vector<Line>> surfaces;
  for (const auto& s : enumeration().surfaces) surfaces.insert(s.triangles());
  EXPECT_EQ(surfaces, oracle_surfaces);
}

TEST(EnumerateTriangulations, AllSurfacesAreOneTorus) {
  const auto& e = enumeration();
  ASSERT_EQ(e.surfaces.size(), regression::kTriangulationCount);
  EXPECT_TRUE(e.all_isomorphic);
  EXPECT_TRUE(e.all_orientable);
  const auto canon = canonical_triangle_set(e.surfaces.front().triangles());
  for (const auto& s : e.surfaces) {
    EXPECT_EQ(euler_characteristic(s), 0);
    EXPECT_TRUE(is_orientable(s));
    EXPECT_EQ(canonical_triangle_set(s.triangles()), canon);
  }
}

TEST(EnumerateTriangulations, SurvivorsCoverEverySurfaceTwice) {
  // Each surface has two coherent orientations, each read off one survivor.
  std::set<std::vector<Line>> surfaces;
  for (const auto& s : enumeration().surfaces) surfaces.insert(s.triangles());
  std::map<std::vector<Line>, int> hits;
  for (auto m : search_orientations(1).survivors) {
    const auto tris = cycle_triangulation(Tournament(m)).triangles();
    EXPECT_TRUE(surfaces.count(tris)) << m;
    ++hits[tris];
  }
  EXPECT_EQ(hits.size(), surfaces.size());
  for (const auto& [tris, n] : hits) EXPECT_EQ(n, 2);
}
