#pragma once

// Command implementations behind the `gotas` executable. Each command writes
// to the given streams and returns the process exit code:
//   0  success / every proposition held / no mismatches
//   1  a proposition failed or the oracle disagreed
//   2  bad input (parse error, unknown label, order axiom, cap exceeded)

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gotas/approximations.hpp"
#include "gotas/document.hpp"
#include "gotas/mutants.hpp"
#include "gotas/oracle.hpp"
#include "gotas/render.hpp"

namespace gotas::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

enum class Format { table, json };

inline std::string lowercase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::optional<Family> parse_family(const std::string& text) {
  std::string s = lowercase(text);
  if (s == "r") return Family::R;
  if (s == "s" || s == "semi") return Family::S;
  if (s == "p" || s == "pre") return Family::P;
  if (s == "gamma" || s == "g") return Family::Gamma;
  if (s == "beta" || s == "b") return Family::Beta;
  return std::nullopt;
}

inline std::optional<Direction> parse_direction(const std::string& text) {
  std::string s = lowercase(text);
  if (s == "inc") return Direction::Inc;
  if (s == "dec") return Direction::Dec;
  return std::nullopt;
}

// "a, c" -> {"a", "c"}; empty or blank text is the empty set.
inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    auto b = current.find_first_not_of(" \t");
    auto e = current.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(current.substr(b, e - b + 1));
    current.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else current += c;
  }
  flush();
  return out;
}

// Runs `body`, mapping input problems to exit code 2.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

inline int cmd_topology(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Gotas g = build_space(load_document(path));
    for (const auto& o : g.topology().opens()) out << format_subset(o) << '\n';
    out << "count: " << g.topology().opens().size() << '\n';
    return kOk;
  });
}

struct AnalyzeOptions {
  std::string set;
  std::optional<Family> family{};
  std::optional<Direction> direction{};
  Format format = Format::table;
  // Compare gamma lower/upper across directions instead of within one.
  bool literal_gamma_exactness = false;
};

inline int cmd_analyze(const std::string& path, const AnalyzeOptions& opts, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    Gotas g = build_space(load_document(path));
    std::vector<std::string> labels = split_labels(opts.set);
    for (const auto& l : labels) {
      if (!g.universe().contains(l)) throw error("--set: unknown label '" + l + "'");
    }
    Subset a = subset_of(g.universe(), labels);

    std::vector<ReportRow> rows;
    for (auto& row : full_report(g, a)) {
      if (opts.family && row.family != *opts.family) continue;
      if (opts.direction && row.direction != *opts.direction) continue;
      if (opts.literal_gamma_exactness && row.family == Family::Gamma)
        row.report.exact = gamma_exact_mixed_direction(g, a, row.direction);
      rows.push_back(std::move(row));
    }
    if (opts.format == Format::json) out << report_json(a, rows).dump(2) << '\n';
    else write_report_table(out, a, rows);
    return kOk;
  });
}

struct CheckCommandOptions {
  bool exhaustive = false;
  std::optional<std::size_t> samples{};
  std::uint64_t seed = 1;
  Format format = Format::table;
  bool corrupt_gamma_upper = false;  // mutation fixture; hidden from --help
};

inline int cmd_check(const std::string& path, const CheckCommandOptions& opts, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    if (opts.exhaustive && opts.samples) throw error("--exhaustive and --samples are exclusive");
    Gotas g = build_space(load_document(path));

    CheckOptions check;
    check.space_label = path;
    check.seed = opts.seed;
    if (opts.samples) {
      check.mode = CheckMode::sampled;
      check.samples = *opts.samples;
    } else if (!opts.exhaustive && g.universe().size() > check.exhaustive_cap) {
      check.mode = CheckMode::sampled;
    }

    auto reports = opts.corrupt_gamma_upper
                       ? check_propositions(g, check, mutants::CorruptedGammaUpper{})
                       : check_propositions(g, check);
    if (opts.format == Format::json) {
      auto j = check_json(reports);
      j["mode"] = check.mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
      out << j.dump(2) << '\n';
    } else {
      write_check_table(out, reports);
    }
    return all_passed(reports) ? kOk : kCheckFailed;
  });
}

inline int cmd_oracle_diff(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Gotas g = build_space(load_document(path));
    DiffReport report = oracle_diff(g);
    for (const auto& m : report.mismatches) {
      out << m.op << " " << to_string(m.direction) << " A=" << format_subset(m.argument)
          << ": computed " << format_subset(m.computed) << ", oracle " << format_subset(m.expected)
          << '\n';
    }
    out << report.mismatches.size() << " mismatches / " << report.comparisons << " comparisons\n";
    return report.mismatches.empty() ? kOk : kCheckFailed;
  });
}

}  // namespace gotas::cli
