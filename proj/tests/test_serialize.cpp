#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "octo/orientation_search.hpp"
#include "octo/serialize.hpp"

using namespace octo;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(s);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST(PlaneJson, RoundTripProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    PointPermutation p{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(p.begin(), p.end(), rng);
    auto plane = relabel(standard_fano(), p);
    for (std::size_t i = 0; i < 7; ++i)
      if (rng() % 2) plane = plane.with_line_reversed(i);
    const Json j = to_json(plane);
    EXPECT_EQ(oriented_fano_plane_from_json(Json::parse(j.dump())), plane);
    EXPECT_EQ(fano_plane_from_json(j), underlying(plane));
    EXPECT_EQ(fano_plane_from_json(to_json(underlying(plane))), underlying(plane));
  }
}

TEST(PlaneJson, Shape) {
  const Json j = to_json(standard_fano());
  EXPECT_EQ(j.dump(), R"({"lines":[[0,1,3],[0,2,6],[0,4,5],[1,2,4],[1,5,6],[2,3,5],[3,4,6]],"oriented":true})");
}

TEST(PlaneJson, RejectsMalformed) {
  EXPECT_THROW(fano_plane_from_json(Json::parse("{}")), InputError);
  EXPECT_THROW(fano_plane_from_json(Json::parse(R"({"lines":[[0,1]]})")), InputError);
  EXPECT_THROW(fano_plane_from_json(Json::parse(R"({"lines":[[0,1,"x"]]})")), InputError);
  EXPECT_THROW(fano_plane_from_json(Json::parse(R"({"lines":[[0,1,2],[0,1,2],[0,1,2],[0,1,2],[0,1,2],[0,1,2],[0,1,2]]})")),
               InputError);
  EXPECT_THROW(oriented_fano_plane_from_json(to_json(underlying(standard_fano()))), InputError);
}

TEST(RenderTable, CsvParsesBackToProducts) {
  const auto sc = StructureConstants::from_index_rules();
  const auto csv = render_table(sc, TableFormat::Csv);
  const auto rows = split(csv, '\n');
  ASSERT_EQ(rows.size(), 10u);  // header, 8 rows, trailing empty
  EXPECT_EQ(rows[0], ",1,e0,e1,e2,e3,e4,e5,e6");
  for (int r = 0; r < kBasisSize; ++r) {
    const auto cells = split(rows[r + 1], ',');
    ASSERT_EQ(cells.size(), 9u);
    EXPECT_EQ(cells[0], basis_name(r));
    for (int c = 0; c < kBasisSize; ++c) EXPECT_EQ(cells[c + 1], to_string(sc.product(r, c)));
  }
  EXPECT_EQ(split(rows[2], ',')[3], "e3");   // e0 e1 = e3
  EXPECT_EQ(split(rows[3], ',')[2], "-e3");  // e1 e0 = -e3
}

TEST(RenderTable, JsonEntries) {
  const auto sc = StructureConstants::from_index_rules();
  const auto j = Json::parse(render_table(sc, TableFormat::Json));
  ASSERT_EQ(j["basis"].size(), 8u);
  EXPECT_EQ(j["table"][imaginary_slot(1)][imaginary_slot(2)], "e4");
  EXPECT_EQ(j["table"][imaginary_slot(2)][imaginary_slot(1)], "-e4");
  for (int s = 1; s < 8; ++s) EXPECT_EQ(j["table"][s][s], "-1");
  EXPECT_EQ(j["table"][0][0], "1");
}

TEST(RenderTable, TextHasHeaderAndRows) {
  const auto text = render_table(StructureConstants::from_index_rules(), TableFormat::Text);
  const auto rows = split(text, '\n');
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0], "       1  e0  e1  e2  e3  e4  e5  e6");
  EXPECT_EQ(rows[2].substr(0, 12), "  e0  e0  -1");
}

TEST(ResidueTableJson, Contents) {
  const auto j = residue_table_json();
  EXPECT_EQ(j["representatives"].size(), 7u);
  EXPECT_EQ(j["squares"], Json::parse("[1,2,4]"));
  EXPECT_EQ(j["edges"].size(), 21u);
  EXPECT_EQ(j["edges"][0], Json::parse("[0,1]"));
}

TEST(SearchReportJson, Fields) {
  SearchReport r;
  r.total = 5;
  r.survivors = {1, 2};
  r.classes = {{1, 2}};
  r.paley_mask = 9;
  const auto j = to_json(r);
  EXPECT_EQ(j["total"], 5);
  EXPECT_EQ(j["survivors"], Json::parse("[1,2]"));
  EXPECT_EQ(j["classes"][0]["size"], 2);
  EXPECT_EQ(j["paley_mask"], 9);
}

TEST(CheckJson, Fields) {
  CheckResult r("demo");
  r.checked = 3;
  r.fail("bad");
  const auto j = to_json(r);
  EXPECT_EQ(j["name"], "demo");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["checked"], 3);
  EXPECT_EQ(j["counterexamples"], Json::parse(R"(["bad"])"));
}
