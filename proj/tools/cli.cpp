#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "octo/graph.hpp"
#include "octo/orientation_search.hpp"
#include "octo/regression_constants.hpp"

namespace octo::cli {
namespace {

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void RunReport::add(const CheckReport& r) {
  for (const auto& c : r.checks) checks.push_back(c);
}

void RunReport::expect(const std::string& name, bool ok, const std::string& witness) {
  CheckResult r(name);
  r.checked = 1;
  if (!ok) r.fail(witness);
  checks.push_back(std::move(r));
}

Json RunReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back(octo::to_json(c));
  Json counters_json = Json::object();
  for (const auto& [k, v] : counters) counters_json[k] = v;
  Json out{{"tool", kToolName},
           {"version", kToolVersion},
           {"command", command},
           {"parameters", parameters},
           {"checks", checks_json},
           {"counters", counters_json},
           {"passed", passed()},
           {"elapsed_seconds", elapsed_seconds}};
  if (!details.empty()) out["details"] = details;
  return out;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << kToolName << ' ' << kToolVersion << ' ' << command << '\n';
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.checked << " checked)\n";
    for (const auto& w : c.counterexamples) os << "       " << w << '\n';
  }
  for (const auto& [k, v] : counters) os << k << ": " << v << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", elapsed_seconds);
  os << "elapsed: " << buf << " s\n";
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

TableSource parse_table_source(const std::string& s) {
  if (s == "fano") return TableSource::Fano;
  if (s == "lattice") return TableSource::Lattice;
  if (s == "index") return TableSource::Index;
  throw UsageError("unknown table source: " + s);
}

TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw UsageError("unknown table format: " + s);
}

StructureConstants table_from_source(TableSource source) {
  switch (source) {
    case TableSource::Fano:
      return structure_constants(standard_fano());
    case TableSource::Lattice:
      return structure_constants(fano_from_orientation(paley_tournament()));
    case TableSource::Index:
      return StructureConstants::from_index_rules();
  }
  throw UsageError("unknown table source");
}

std::string cmd_table(TableSource source, TableFormat format) {
  return render_table(table_from_source(source), format);
}

RunReport cmd_verify_algebra(const AlgebraOptions& opts) {
  Stopwatch clock;
  RunReport report;
  report.command = "verify-algebra";
  report.parameters = {{"seed", opts.seed}, {"trials", opts.trials}};
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");

  auto plane = standard_fano();
  if (opts.mutate_line) {
    if (*opts.mutate_line >= plane.lines().size()) throw UsageError("--mutate-line must be in 0..6");
    report.parameters["mutate_line"] = *opts.mutate_line;
    plane = plane.with_line_reversed(*opts.mutate_line);
  }
  const auto sc = structure_constants(plane);

  report.add(verify_alternative(sc));
  report.add(verify_norm_multiplicative(sc, opts.trials, opts.seed));
  report.add(verify_quaternion_subalgebras(sc, sc.plane()));
  report.add(verify_inverses(sc, opts.inverse_samples, opts.seed));
  report.add(verify_flexible(sc, opts.inverse_samples, opts.seed));
  report.elapsed_seconds = clock.seconds();
  return report;
}

RunReport cmd_search(const SearchOptions& opts) {
  Stopwatch clock;
  RunReport report;
  report.command = "search-orientations";
  report.parameters = {{"threads", opts.threads}, {"oracle", opts.oracle}};

  const auto search = search_orientations(opts.threads);
  report.count("total", static_cast<std::int64_t>(search.total));
  report.count("survivors", static_cast<std::int64_t>(search.survivors.size()));
  report.count("classes", static_cast<std::int64_t>(search.classes.size()));
  report.count("paley_mask", search.paley_mask);

  report.expect("all 2^21 masks scanned", search.total == kMaskCount);
  report.expect("survivors non-empty", !search.survivors.empty());
  report.expect("single isomorphism class", search.classes.size() == 1,
                std::to_string(search.classes.size()) + " classes");
  report.expect("Paley tournament survives", search.paley_survives);
  report.expect("survivor count matches regression constant",
                search.survivors.size() == regression::kSurvivorCount,
                std::to_string(search.survivors.size()) + " != " +
                    std::to_string(regression::kSurvivorCount));

  CheckResult torus("every survivor triangulates a torus");
  const auto paley = paley_tournament();
  for (auto m : search.survivors) {
    ++torus.checked;
    const Tournament t(m);
    const auto tri = cycle_triangulation(t);
    bool regular = true;
    for (int v = 0; v < kVertexCount; ++v) regular = regular && t.out_degree(v) == 3;
    bool links = true;
    for (int v = 0; v < kVertexCount; ++v) links = links && tri.link(v).size() == 6;
    const auto bip = dual_bipartition(tri);
    const bool ok = tri.triangles().size() == 14 && regular && links &&
                    euler_characteristic(tri) == 0 && is_orientable(tri) && bip &&
                    bip->black.size() == 7 && bip->white.size() == 7 &&
                    verify_projective_plane(fano_from_orientation(t).lines()).passed() &&
                    tournaments_isomorphic(paley, t).has_value();
    if (!ok) torus.fail("mask " + std::to_string(m));
  }
  report.add(std::move(torus));

  if (opts.oracle) {
    const auto sample = oracle_sample();
    std::vector<std::uint32_t> fast, slow;
    for (auto m : sample) {
      if (oriented_triangulation_test(Tournament(m))) fast.push_back(m);
      if (oriented_triangulation_test_slow(Tournament(m))) slow.push_back(m);
    }
    report.count("sample_size", static_cast<std::int64_t>(sample.size()));
    report.count("sample_survivors", static_cast<std::int64_t>(slow.size()));
    report.expect("fast and slow paths agree on the 1/64 sample", fast == slow);
    std::vector<std::uint32_t> in_sample;
    std::copy_if(search.survivors.begin(), search.survivors.end(), std::back_inserter(in_sample),
                 in_oracle_sample);
    report.expect("full scan restricted to the sample matches the oracle", in_sample == slow);
    report.expect("sample survivor count matches regression constant",
                  slow.size() == regression::kSampleSurvivorCount);
  }

  report.details = {{"search", to_json(search)}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

RunReport cmd_triangulations() {
  Stopwatch clock;
  RunReport report;
  report.command = "enumerate-triangulations";
  const auto e = enumerate_triangulations();
  report.count("double_covers", static_cast<std::int64_t>(e.double_covers));
  report.count("triangulations", static_cast<std::int64_t>(e.surfaces.size()));

  report.expect("labeled count matches regression constant",
                e.surfaces.size() == regression::kTriangulationCount,
                std::to_string(e.surfaces.size()) + " != " +
                    std::to_string(regression::kTriangulationCount));
  report.expect("all triangulations pairwise isomorphic", e.all_isomorphic);
  report.expect("all triangulations orientable (no Klein bottle)", e.all_orientable);
  CheckResult shape("14 triangles and Euler characteristic 0");
  for (const auto& s : e.surfaces) {
    ++shape.checked;
    if (s.triangles().size() != 14 || euler_characteristic(s) != 0) shape.fail(to_text(s));
  }
  report.add(std::move(shape));

  Json surfaces = Json::array();
  for (const auto& s : e.surfaces) surfaces.push_back(to_json(s));
  report.details = {{"triangulations", surfaces}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

RunReport cmd_dual() {
  Stopwatch clock;
  RunReport report;
  report.command = "dual";
  const auto tri = cycle_triangulation(paley_tournament());
  const auto dual = dual_graph(tri);
  const auto incidence = incidence_graph(underlying(standard_fano()));

  report.count("vertices", dual.vertex_count());
  report.count("edges", dual.edge_count());
  report.expect("14 vertices and 21 edges", dual.vertex_count() == 14 && dual.edge_count() == 21);
  const auto degrees = degree_sequence(dual);
  report.expect("3-regular",
                std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 3; }));
  const auto parts = is_bipartite(dual);
  report.expect("bipartite with a 7+7 split",
                parts && parts->first.size() == 7 && parts->second.size() == 7);
  const int g = girth(dual);
  report.count("girth", g);
  report.expect("girth 6", g == 6, "girth " + std::to_string(g));

  // Colour classes of the dual agree with the triangulation's own 2-colouring.
  const auto bip = dual_bipartition(tri);
  bool same_classes = parts && bip;
  if (same_classes) {
    std::vector<Line> first;
    for (int v : parts->first) first.push_back(tri.triangles()[v]);
    same_classes = first == bip->black || first == bip->white;
  }
  report.expect("bipartition matches dual 2-colouring", same_classes);

  const auto map = graphs_isomorphic(dual, incidence);
  report.expect("isomorphic to the Fano incidence graph", map.has_value());
  bool side_consistent = map.has_value() && parts.has_value();
  if (side_consistent) {
    auto side = [&](int v) { return (*map)[v] < kPointCount; };
    const bool first_points = side(parts->first.front());
    for (int v : parts->first) side_consistent = side_consistent && side(v) == first_points;
    for (int v : parts->second) side_consistent = side_consistent && side(v) != first_points;
    report.details["mapping"] = *map;
    report.details["points_class"] = first_points ? "first" : "second";
  }
  report.expect("mapping sends colour classes to points and lines", side_consistent);
  report.details["dual"] = to_json(dual);
  report.elapsed_seconds = clock.seconds();
  return report;
}

namespace {

constexpr double kCanvas = 700.0;
constexpr double kUnit = 100.0;  // lattice spacing; hexagon circumradius 57.735

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// Canvas coordinates; the y axis points down.
std::pair<double, double> canvas(const ExactPoint& p, const EisensteinInt& shift = {}) {
  const auto s = embed(shift);
  return {kCanvas / 2 + kUnit * (p.x_value() + s.x_value()),
          kCanvas / 2 - kUnit * (p.y_value() + s.y_value())};
}

std::string px(const ExactPoint& p, const EisensteinInt& shift = {}) {
  const auto [x, y] = canvas(p, shift);
  return fmt(x) + "," + fmt(y);
}

std::string points_attr(const std::vector<ExactPoint>& pts, const EisensteinInt& shift = {}) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + px(pts[i], shift);
  return out;
}

}  // namespace

std::string render_svg(const HexagonMap& map, const DrawOptions& opts) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"700\" height=\"700\" "
        "viewBox=\"0 0 700 700\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"700\" height=\"700\" fill=\"#ffffff\"/>\n";

  if (opts.show_translates) {
    os << "  <g id=\"translates\" fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"1\" "
          "stroke-dasharray=\"4,3\">\n";
    for (const auto& t : map.neighbor_translates)
      os << "    <polygon class=\"translate\" points=\"" << points_attr(map.outline, t) << "\"/>\n";
    os << "  </g>\n";
  }

  os << "  <g id=\"cells\" fill=\"#d0d0d0\" stroke=\"#404040\" stroke-width=\"1.5\">\n";
  for (const auto& cell : map.cells) {
    std::vector<ExactPoint> pts;
    for (const auto& c : cell.corners) pts.push_back(c.position());
    os << "    <polygon class=\"cell\" data-residue=\"" << cell.rep.residue.value() << "\" points=\""
       << points_attr(pts) << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <polygon id=\"fundamental-domain\" points=\"" << points_attr(map.outline)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"/>\n";

  os << "  <g id=\"labels\" font-family=\"serif\" font-size=\"20\" text-anchor=\"middle\" "
        "fill=\"#000000\">\n";
  for (const auto& cell : map.cells) {
    const auto [cx, y] = canvas(cell.center);
    const std::string x = fmt(cx);
    os << "    <text x=\"" << x << "\" y=\"" << fmt(y + 2) << "\">" << cell.rep.label << "</text>\n";
    if (opts.show_residues)
      os << "    <text x=\"" << x << "\" y=\"" << fmt(y + 22) << "\" font-size=\"14\" fill=\"#505050\">("
         << cell.rep.residue.value() << ")</text>\n";
  }
  os << "  </g>\n";

  os << "  <g id=\"circled\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"2\">\n";
  for (const auto& m : map.circled) {
    const auto [x, y] = canvas(m.corner.position());
    os << "    <circle class=\"circled\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"8\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string cmd_draw(const DrawOptions& opts) {
  return render_svg(hexagon_map_geometry(opts.chirality), opts);
}

}  // namespace octo::cli
