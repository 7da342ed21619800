#include "octo/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace octo {
namespace {

Json lines_json(const std::array<Line, kPointCount>& lines) {
  Json out = Json::array();
  for (const auto& l : lines) out.push_back({l[0], l[1], l[2]});
  return out;
}

std::vector<Line> lines_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    throw InputError("plane JSON needs a \"lines\" array");
  std::vector<Line> lines;
  for (const auto& l : j["lines"]) {
    if (!l.is_array() || l.size() != 3) throw InputError("each line needs three points");
    Line t{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!l[k].is_number_integer()) throw InputError("point labels must be integers");
      t[k] = l[k].get<int>();
    }
    lines.push_back(t);
  }
  return lines;
}

}  // namespace

Json to_json(const FanoPlane& plane) {
  return Json{{"lines", lines_json(plane.lines())}, {"oriented", false}};
}

Json to_json(const OrientedFanoPlane& plane) {
  return Json{{"lines", lines_json(plane.lines())}, {"oriented", true}};
}

FanoPlane fano_plane_from_json(const Json& j) { return FanoPlane::from_lines(lines_from_json(j)); }

OrientedFanoPlane oriented_fano_plane_from_json(const Json& j) {
  if (!j.value("oriented", false)) throw InputError("plane JSON is not oriented");
  return OrientedFanoPlane::from_cyclic_lines(lines_from_json(j));
}

std::string render_table(const StructureConstants& sc, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::Text: {
      os << std::setw(4) << "";
      for (int c = 0; c < kBasisSize; ++c) os << std::setw(4) << basis_name(c);
      os << '\n';
      for (int r = 0; r < kBasisSize; ++r) {
        os << std::setw(4) << basis_name(r);
        for (int c = 0; c < kBasisSize; ++c) os << std::setw(4) << to_string(sc.product(r, c));
        os << '\n';
      }
      break;
    }
    case TableFormat::Csv: {
      for (int c = 0; c < kBasisSize; ++c) os << ',' << basis_name(c);
      os << '\n';
      for (int r = 0; r < kBasisSize; ++r) {
        os << basis_name(r);
        for (int c = 0; c < kBasisSize; ++c) os << ',' << to_string(sc.product(r, c));
        os << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      Json basis = Json::array();
      Json table = Json::array();
      for (int r = 0; r < kBasisSize; ++r) {
        basis.push_back(basis_name(r));
        Json row = Json::array();
        for (int c = 0; c < kBasisSize; ++c) row.push_back(to_string(sc.product(r, c)));
        table.push_back(std::move(row));
      }
      os << Json{{"basis", basis}, {"table", table}}.dump() << '\n';
      break;
    }
  }
  return os.str();
}

Json residue_table_json(Chirality chirality) {
  Json reps = Json::array();
  for (const auto& r : residue_representatives(chirality))
    reps.push_back({{"value", {r.value.a, r.value.b}}, {"label", r.label}, {"residue", r.residue.value()}});
  Json squares = Json::array();
  for (int v = 1; v < 7; ++v)
    if (is_square_residue(Residue(v))) squares.push_back(v);
  Json edges = Json::array();
  const auto t = paley_tournament(chirality);
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j)
      edges.push_back(t.beats(i, j) ? Json{i, j} : Json{j, i});
  return Json{{"representatives", reps}, {"squares", squares}, {"edges", edges}};
}

Json to_json(const SearchReport& report) {
  Json classes = Json::array();
  for (const auto& c : report.classes) classes.push_back({{"representative", c.representative}, {"size", c.size}});
  return Json{{"total", report.total},
              {"survivors", report.survivors},
              {"classes", classes},
              {"paley_mask", report.paley_mask}};
}

Json to_json(const Triangulation& tri) {
  Json out = Json::array();
  for (const auto& t : tri.triangles()) out.push_back({t[0], t[1], t[2]});
  return out;
}

Json to_json(const SimpleGraph& g) {
  Json vertices = Json::array();
  Json adjacency = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"id", v}, {"tag", g.tag(v)}});
    adjacency.push_back(g.neighbors(v));
  }
  return Json{{"vertices", vertices}, {"adjacency", adjacency}};
}

Json to_json(const CheckResult& r) {
  return Json{{"name", r.name},
              {"passed", r.passed},
              {"checked", r.checked},
              {"counterexamples", r.counterexamples}};
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return checks;
}

}  // namespace octo
