#pragma once

// Text and JSON rendering for subsets, reports and proposition results.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gotas/approximations.hpp"
#include "gotas/oracle.hpp"

namespace gotas {

// `{a, c}` with members in universe order; `{}` for the empty set.
inline std::string format_subset(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s.labels()) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

inline std::string format_accuracy(const Accuracy& a) {
  if (a.denominator() == 1) return std::to_string(a.numerator());
  return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
}

inline nlohmann::json to_json(const Subset& s) { return s.labels(); }

inline nlohmann::json to_json(const Accuracy& a) {
  return {{"numerator", a.numerator()}, {"denominator", a.denominator()}};
}

inline nlohmann::json to_json(const ReportRow& row) {
  const auto& r = row.report;
  return {{"family", to_string(row.family)},
          {"direction", to_string(row.direction)},
          {"lower", to_json(r.lower)},
          {"upper", to_json(r.upper)},
          {"boundary", to_json(r.boundary)},
          {"positive", to_json(r.positive)},
          {"negative", to_json(r.negative)},
          {"accuracy", to_json(r.accuracy)},
          {"exact", r.exact}};
}

// Left-aligned columns separated by two spaces.
inline void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{"family",   "direction", "lower",    "upper", "boundary",
                                             "positive", "negative",  "accuracy", "class"};
  return cols;
}

inline std::vector<std::string> table_cells(const ReportRow& row) {
  const auto& r = row.report;
  return {std::string(to_string(row.family)),
          std::string(to_string(row.direction)),
          format_subset(r.lower),
          format_subset(r.upper),
          format_subset(r.boundary),
          format_subset(r.positive),
          format_subset(r.negative),
          format_accuracy(r.accuracy),
          r.exact ? "exact" : "rough"};
}

inline void write_report_table(std::ostream& out, const Subset& a, const std::vector<ReportRow>& rows) {
  out << "A = " << format_subset(a) << '\n';
  std::vector<std::vector<std::string>> cells{report_columns()};
  for (const auto& r : rows) cells.push_back(table_cells(r));
  write_table(out, cells);
}

inline nlohmann::json report_json(const Subset& a, const std::vector<ReportRow>& rows) {
  nlohmann::json j{{"set", to_json(a)}, {"rows", nlohmann::json::array()}};
  for (const auto& r : rows) j["rows"].push_back(to_json(r));
  return j;
}

inline std::string format_violation(const Violation& v) {
  std::string out = std::string(to_string(v.direction)) + " ";
  const char* names[] = {"A", "B"};
  for (std::size_t i = 0; i < v.witnesses.size(); ++i)
    out += std::string(i < 2 ? names[i] : "X") + "=" + format_subset(v.witnesses[i]) + " ";
  return out + "(" + v.detail + ")";
}

inline void write_check_table(std::ostream& out, const std::vector<PropositionReport>& reports) {
  std::vector<std::vector<std::string>> cells;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    cells.push_back({r.id, "instances=" + std::to_string(r.instances), r.passed() ? "PASS" : "FAIL"});
    if (!r.passed()) ++failed;
  }
  // Witness lines interleave with the table, so render rows one at a time.
  std::ostringstream table;
  write_table(table, cells);
  std::istringstream lines(table.str());
  std::string line;
  for (const auto& r : reports) {
    std::getline(lines, line);
    out << line << '\n';
    for (const auto& v : r.violations) out << "    witness[" << v.space << "]: " << format_violation(v) << '\n';
    if (r.violation_count > r.violations.size())
      out << "    ... " << (r.violation_count - r.violations.size()) << " more\n";
  }
  out << "summary: " << reports.size() << " propositions, " << failed << " failed\n";
}

inline nlohmann::json check_json(const std::vector<PropositionReport>& reports) {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& v : r.violations) {
      nlohmann::json sets = nlohmann::json::array();
      for (const auto& w : v.witnesses) sets.push_back(to_json(w));
      witnesses.push_back({{"space", v.space},
                           {"direction", to_string(v.direction)},
                           {"subsets", sets},
                           {"detail", v.detail}});
    }
    props.push_back({{"id", r.id},
                     {"statement", r.statement},
                     {"instances", r.instances},
                     {"violations", r.violation_count},
                     {"passed", r.passed()},
                     {"witnesses", witnesses}});
  }
  return {{"propositions", props}, {"passed", all_passed(reports)}};
}

}  // namespace gotas
