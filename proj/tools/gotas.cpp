// gotas: command-line front end for ordered topological rough-set spaces.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gotas/cli.hpp"

namespace {

gotas::cli::Format parse_format(const std::string& s) {
  return s == "json" ? gotas::cli::Format::json : gotas::cli::Format::table;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gotas::cli;

  CLI::App app{"Rough-set approximations over ordered topological approximation spaces"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "table";
  auto format_check = CLI::IsMember({"table", "json"});

  auto* topology = app.add_subcommand("topology", "Print the open sets generated by the document");
  topology->add_option("file", file, "Space document (JSON)")->required();

  AnalyzeOptions analyze_opts;
  std::string family, direction;
  auto* analyze = app.add_subcommand("analyze", "Approximations, regions and accuracy of a set");
  analyze->add_option("file", file, "Space document (JSON)")->required();
  analyze->add_option("--set", analyze_opts.set, "Comma-separated labels, e.g. a,c")->required();
  analyze->add_option("--family", family, "r | s | p | gamma | beta");
  analyze->add_option("--direction", direction, "inc | dec");
  analyze->add_option("--format", format, "table | json")->check(format_check);
  analyze->add_flag("--literal-gamma-exactness", analyze_opts.literal_gamma_exactness,
                    "Gamma exactness compares lower in one direction with upper in the other");

  CheckCommandOptions check_opts;
  std::size_t samples = 0;
  auto* check = app.add_subcommand("check", "Verify the proposition suite on the document's space");
  check->add_option("file", file, "Space document (JSON)")->required();
  auto* exhaustive_flag =
      check->add_flag("--exhaustive", check_opts.exhaustive, "All subsets and subset pairs");
  auto* samples_opt = check->add_option("--samples", samples, "Random subset pairs to test");
  exhaustive_flag->excludes(samples_opt);
  check->add_option("--seed", check_opts.seed, "Seed for --samples");
  check->add_option("--format", format, "table | json")->check(format_check);
  check->add_flag("--corrupt-gamma-upper", check_opts.corrupt_gamma_upper)->group("");

  auto* diff = app.add_subcommand("oracle-diff", "Compare R lower/upper against brute force");
  diff->add_option("file", file, "Space document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*topology) return cmd_topology(file, std::cout, std::cerr);

  if (*analyze) {
    if (!family.empty()) {
      analyze_opts.family = parse_family(family);
      if (!analyze_opts.family) {
        std::cerr << "error: --family: unknown family '" << family << "'\n";
        return kInputError;
      }
    }
    if (!direction.empty()) {
      analyze_opts.direction = parse_direction(direction);
      if (!analyze_opts.direction) {
        std::cerr << "error: --direction: unknown direction '" << direction << "'\n";
        return kInputError;
      }
    }
    analyze_opts.format = parse_format(format);
    return cmd_analyze(file, analyze_opts, std::cout, std::cerr);
  }

  if (*check) {
    if (samples_opt->count() > 0) check_opts.samples = samples;
    check_opts.format = parse_format(format);
    return cmd_check(file, check_opts, std::cout, std::cerr);
  }

  return cmd_oracle_diff(file, std::cout, std::cerr);
}
