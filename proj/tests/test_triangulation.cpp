#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "octo/triangulation.hpp"

using namespace octo;

namespace {

const std::vector<Line> kOctahedron{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                                    {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}};

// Six-vertex projective plane: the hemi-icosahedron.
const std::vector<Line> kProjectivePlane{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

// Two tetrahedra sharing nothing.
const std::vector<Line> kTwoTetrahedra{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                       {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}};

// Two tetrahedra glued at vertex 0 (a pinched surface).
const std::vector<Line> kPinched{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                 {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}};

// Seven-vertex torus from the index rules, both classes.
std::vector<Line> torus() {
  std::vector<Line> out;
  for (int n = 0; n < 7; ++n) {
    out.push_back(sorted_line({(n + 1) % 7, (n + 2) % 7, (n + 4) % 7}));
    out.push_back(sorted_line({(n + 3) % 7, (n + 5) % 7, (n + 6) % 7}));
  }
  return out;
}

}  // namespace

TEST(CheckTriangulation, Octahedron) {
  const auto check = check_triangulation(kOctahedron, 6);
  ASSERT_TRUE(check.ok());
  const auto& tri = *check.triangulation;
  EXPECT_EQ(euler_characteristic(tri), 2);
  EXPECT_EQ(tri.edge_count(), 12u);
  EXPECT_TRUE(is_orientable(tri));
  const auto split = dual_bipartition(tri);
  ASSERT_TRUE(split);
  EXPECT_EQ(split->black.size(), 4u);
  EXPECT_EQ(split->white.size(), 4u);
  EXPECT_EQ(split->black.front(), (Line{0, 1, 2}));
  EXPECT_EQ(tri.link(0).size(), 4u);
}

TEST(CheckTriangulation, ProjectivePlaneIsNonOrientable) {
  const auto check = check_triangulation(kProjectivePlane, 6);
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(euler_characteristic(*check.triangulation), 1);
  EXPECT_FALSE(is_orientable(*check.triangulation));
  EXPECT_FALSE(coherent_orientation(*check.triangulation));
  EXPECT_FALSE(dual_bipartition(*check.triangulation));
}

TEST(CheckTriangulation, SevenVertexTorus) {
  const auto t = torus();
  const auto check = check_triangulation(t, 7);
  ASSERT_TRUE(check.ok());
  const auto& tri = *check.triangulation;
  EXPECT_EQ(euler_characteristic(tri), 0);
  EXPECT_EQ(tri.edge_count(), 21u);
  EXPECT_TRUE(is_orientable(tri));
  for (int v = 0; v < 7; ++v) EXPECT_EQ(tri.link(v).size(), 6u);
  const auto split = dual_bipartition(tri);
  ASSERT_TRUE(split);
  EXPECT_EQ(split->black.size(), 7u);
  std::set<Line> index_rule;
  for (int n = 0; n < 7; ++n) index_rule.insert(sorted_line({(n + 1) % 7, (n + 2) % 7, (n + 4) % 7}));
  EXPECT_EQ(std::set<Line>(split->black.begin(), split->black.end()), index_rule);
}

TEST(CheckTriangulation, CoherentOrientationIsConsistent) {
  const auto tri = *check_triangulation(torus(), 7).triangulation;
  const auto oriented = coherent_orientation(tri);
  ASSERT_TRUE(oriented);
  std::set<std::pair<int, int>> directed;
  for (const auto& t : *oriented)
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(directed.insert({t[i], t[(i + 1) % 3]}).second);
  EXPECT_EQ(directed.size(), 42u);
  for (const auto& [a, b] : directed) EXPECT_TRUE(directed.count({b, a}));
}

TEST(CheckTriangulation, MissingTriangleLeavesSingleCoveredEdges) {
  auto t = torus();
  t.erase(std::find(t.begin(), t.end(), Line{1, 2, 4}));
  const auto check = check_triangulation(t, 7);
  ASSERT_FALSE(check.ok());
  EXPECT_EQ(check.defect->condition, "edge double cover");
  EXPECT_NE(check.defect->witness.find("covered once"), std::string::npos);
}

TEST(CheckTriangulation, DisconnectedFails) {
  const auto check = check_triangulation(kTwoTetrahedra, 8);
  ASSERT_FALSE(check.ok());
  EXPECT_EQ(check.defect->condition, "connected skeleton");
  // An isolated vertex also breaks connectivity.
  const auto isolated = check_triangulation(kOctahedron, 7);
  ASSERT_FALSE(isolated.ok());
  EXPECT_EQ(isolated.defect->condition, "connected skeleton");
}

TEST(CheckTriangulation, PinchedVertexFailsLink) {
  const auto check = check_triangulation(kPinched, 7);
  ASSERT_FALSE(check.ok());
  EXPECT_EQ(check.defect->condition, "vertex link");
}

TEST(CheckTriangulation, MalformedInput) {
  EXPECT_THROW(check_triangulation(kOctahedron, 0), InputError);
  EXPECT_THROW(check_triangulation(kOctahedron, 15), InputError);
  EXPECT_THROW(check_triangulation(kOctahedron, 5), InputError);
  std::vector<Line> repeated_vertex{{0, 0, 1}};
  EXPECT_THROW(check_triangulation(repeated_vertex, 3), InputError);
  auto dup = kOctahedron;
  dup.push_back({2, 1, 0});
  EXPECT_THROW(check_triangulation(dup, 6), InputError);
}

TEST(CheckTriangulation, OrderAndLabelInvariance) {
  auto t = kOctahedron;
  std::reverse(t.begin(), t.end());
  for (auto& l : t) std::swap(l[0], l[2]);
  EXPECT_EQ(*check_triangulation(t, 6).triangulation, *check_triangulation(kOctahedron, 6).triangulation);
  const std::vector<int> perm{5, 3, 1, 0, 2, 4};
  const auto relabeled = relabel_triangles(kOctahedron, perm);
  EXPECT_TRUE(std::is_sorted(relabeled.begin(), relabeled.end()));
  const auto check = check_triangulation(relabeled, 6);
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(euler_characteristic(*check.triangulation), 2);
}

TEST(TriangulationText, Sorted) {
  EXPECT_EQ(to_text(*check_triangulation(kOctahedron, 6).triangulation),
            "[[0,1,2],[0,1,4],[0,2,3],[0,3,4],[1,2,5],[1,4,5],[2,3,5],[3,4,5]]");
}
