#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octo/check_report.hpp"
#include "octo/eisenstein.hpp"
#include "octo/hexagon_map.hpp"
#include "octo/serialize.hpp"

namespace octo::cli {

inline constexpr const char* kToolName = "octo";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ExitCode : int { Pass = 0, CheckFailure = 1, Usage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::int64_t>> counters;
  /// Extra machine-readable payload, included in JSON output only.
  Json details = Json::object();
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool passed() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void add(const CheckReport& r);
  /// Adds a check with no witnesses beyond `witness` on failure.
  void expect(const std::string& name, bool ok, const std::string& witness = {});
  void count(const std::string& name, std::int64_t value) { counters.emplace_back(name, value); }

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

enum class TableSource { Fano, Lattice, Index };
TableSource parse_table_source(const std::string& s);
TableFormat parse_table_format(const std::string& s);

StructureConstants table_from_source(TableSource source);
std::string cmd_table(TableSource source, TableFormat format);

struct AlgebraOptions {
  std::uint64_t seed = 7;
  std::size_t trials = 1000;
  std::size_t inverse_samples = 100;
  std::optional<std::size_t> mutate_line;
};
RunReport cmd_verify_algebra(const AlgebraOptions& opts);

struct SearchOptions {
  unsigned threads = 1;
  /// Also run the slow per-mask oracle on the 1/64 sample and compare.
  bool oracle = false;
};
RunReport cmd_search(const SearchOptions& opts);

RunReport cmd_triangulations();

RunReport cmd_dual();

struct DrawOptions {
  Chirality chirality = Chirality::Standard;
  bool show_residues = true;
  bool show_translates = true;
};
/// SVG 1.1 document for the seven-hexagon map.
std::string render_svg(const HexagonMap& map, const DrawOptions& opts);
std::string cmd_draw(const DrawOptions& opts);

}  // namespace octo::cli
