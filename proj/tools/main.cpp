// octo: build and verify the octonion multiplication table from the Fano
// plane, the Eisenstein lattice quotient and the index rules mod 7, and check
// the K7 torus triangulation behind them.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using octo::cli::ExitCode;

int emit(const octo::cli::RunReport& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json().dump(2) << '\n';
  else
    std::cout << report.to_text();
  return static_cast<int>(report.passed() ? ExitCode::Pass : ExitCode::CheckFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonion multiplication, the Fano plane and the K7 torus map", "octo"};
  app.set_version_flag("--version", std::string(octo::cli::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t seed = 7;
  unsigned threads = 1;
  app.add_option("--format", format, "Output format: text or json (table also accepts csv)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", seed, "Seed for sampled octonions");
  app.add_option("--threads", threads, "Worker threads for the orientation scan")
      ->check(CLI::Range(1u, 256u));

  auto* table = app.add_subcommand("table", "Print the 8x8 multiplication table");
  std::string source = "fano";
  table->add_option("--source", source, "fano, lattice or index")
      ->check(CLI::IsMember({"fano", "lattice", "index"}));

  auto* algebra = app.add_subcommand("verify-algebra", "Check alternativity, norm, inverses, quaternion lines");
  octo::cli::AlgebraOptions algebra_opts;
  std::size_t mutate_line = 0;
  algebra->add_option("--trials", algebra_opts.trials, "Sampled pairs for the norm check")
      ->check(CLI::PositiveNumber);
  auto* mutate = algebra->add_option("--mutate-line", mutate_line, "Reverse one line's cyclic order (0..6)")
                     ->check(CLI::Range(0, 6));

  auto* search = app.add_subcommand("search-orientations", "Scan all 2^21 orientations of K7");
  octo::cli::SearchOptions search_opts;
  search->add_flag("--oracle", search_opts.oracle, "Cross-check the 1/64 sample against the slow path");

  auto* tri = app.add_subcommand("enumerate-triangulations", "Enumerate triangulations with K7 skeleton");
  auto* dual = app.add_subcommand("dual", "Compare the dual graph with the Fano incidence graph");

  auto* draw = app.add_subcommand("draw", "Write the seven-hexagon map as SVG");
  std::string output = "-";
  bool mirror = false;
  bool no_residues = false;
  bool no_translates = false;
  draw->add_option("-o,--output", output, "Output path, - for stdout");
  draw->add_flag("--mirror", mirror, "Use the mirror lattice (2 - w^2) and the non-residue rule");
  draw->add_flag("--no-residues", no_residues, "Omit residue numbers under the cell labels");
  draw->add_flag("--no-translates", no_translates, "Omit the neighbouring lattice translates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  try {
    if (format == "csv" && !table->parsed())
      throw octo::cli::UsageError("--format csv is only available for table");

    if (table->parsed()) {
      std::cout << octo::cli::cmd_table(octo::cli::parse_table_source(source),
                                        octo::cli::parse_table_format(format));
      return static_cast<int>(ExitCode::Pass);
    }
    if (algebra->parsed()) {
      algebra_opts.seed = seed;
      if (mutate->count() > 0) algebra_opts.mutate_line = mutate_line;
      return emit(octo::cli::cmd_verify_algebra(algebra_opts), format);
    }
    if (search->parsed()) {
      search_opts.threads = threads;
      return emit(octo::cli::cmd_search(search_opts), format);
    }
    if (tri->parsed()) return emit(octo::cli::cmd_triangulations(), format);
    if (dual->parsed()) return emit(octo::cli::cmd_dual(), format);
    if (draw->parsed()) {
      octo::cli::DrawOptions opts;
      opts.chirality = mirror ? octo::Chirality::Mirror : octo::Chirality::Standard;
      opts.show_residues = !no_residues;
      opts.show_translates = !no_translates;
      const auto svg = octo::cli::cmd_draw(opts);
      if (output == "-") {
        std::cout << svg;
      } else {
        std::ofstream out(output, std::ios::binary);
        out << svg;
        if (!out) {
          std::cerr << "octo: cannot write " << output << '\n';
          return static_cast<int>(ExitCode::CheckFailure);
        }
      }
      return static_cast<int>(ExitCode::Pass);
    }
  } catch (const octo::cli::UsageError& e) {
    std::cerr << "octo: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }
  return static_cast<int>(ExitCode::Usage);
}
