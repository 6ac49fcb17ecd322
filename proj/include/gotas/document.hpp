#pragma once

// JSON space documents.
//
//   {
//     "universe": ["a", "b", "c", "d"],
//     "base":     [["a"], ["a", "b"], ["c", "d"]],      // or "relation": [["a","b"], ...]
//     "order":    [["a", "b"], ["b", "d"], ...],
//     "options":  { "auto_reflexive": true }
//   }
//
// Exactly one of "base" and "relation" must be present. Errors name the
// offending field (e.g. `order[2][1]`) or, for malformed JSON, the line.

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gotas/approximations.hpp"

namespace gotas {

class document_error : public error {
 public:
  using error::error;
};

using LabelPair = std::pair<std::string, std::string>;

struct SpaceDocument {
  std::vector<std::string> universe;
  std::optional<std::vector<LabelPair>> relation;
  std::optional<std::vector<std::vector<std::string>>> base;
  std::vector<LabelPair> order;
  bool auto_reflexive = true;
};

namespace detail {

inline std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1 + static_cast<std::size_t>(
                             std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
  return std::to_string(line);
}

inline std::string as_label(const nlohmann::json& j, const std::string& field) {
  if (!j.is_string()) throw document_error(field + ": expected a string label");
  return j.get<std::string>();
}

inline std::vector<std::string> as_labels(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw document_error(field + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_label(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<LabelPair> as_pairs(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw document_error(field + ": expected an array of label pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw document_error(f + ": expected [x, y]");
    out.emplace_back(as_label(j[i][0], f + "[0]"), as_label(j[i][1], f + "[1]"));
  }
  return out;
}

}  // namespace detail

inline SpaceDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw document_error("line " + detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1) +
                         ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw document_error("document: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "universe" && key != "relation" && key != "base" && key != "order" &&
        key != "options")
      throw document_error(key + ": unknown field");
  }

  SpaceDocument doc;
  if (!j.contains("universe")) throw document_error("universe: missing");
  doc.universe = detail::as_labels(j["universe"], "universe");

  bool has_relation = j.contains("relation"), has_base = j.contains("base");
  if (has_relation == has_base)
    throw document_error("relation/base: exactly one of the two must be given");
  if (has_relation) doc.relation = detail::as_pairs(j["relation"], "relation");
  if (has_base) {
    const auto& b = j["base"];
    if (!b.is_array()) throw document_error("base: expected an array of label lists");
    std::vector<std::vector<std::string>> sets;
    for (std::size_t i = 0; i < b.size(); ++i)
      sets.push_back(detail::as_labels(b[i], "base[" + std::to_string(i) + "]"));
    doc.base = std::move(sets);
  }
  if (j.contains("order")) doc.order = detail::as_pairs(j["order"], "order");
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw document_error("options: expected an object");
    for (const auto& [key, value] : o.items()) {
      if (key != "auto_reflexive") throw document_error("options." + key + ": unknown option");
      if (!value.is_boolean()) throw document_error("options.auto_reflexive: expected a boolean");
      doc.auto_reflexive = value.get<bool>();
    }
  }
  return doc;
}

inline SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw document_error(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

namespace detail {

inline Index resolve(const Universe& u, const std::string& label, const std::string& field) {
  if (!u.contains(label)) throw document_error(field + ": unknown label '" + label + "'");
  return u.index(label);
}

}  // namespace detail

// Resolves labels and builds the space; order axioms surface as order_error.
inline Gotas build_space(const SpaceDocument& doc) {
  Universe u = [&] {
    try {
      return make_universe(doc.universe);
    } catch (const error& e) {
      throw document_error(std::string("universe: ") + e.what());
    }
  }();

  std::optional<Topology> topology;
  if (doc.base) {
    std::vector<Subset> base;
    for (std::size_t i = 0; i < doc.base->size(); ++i) {
      Mask bits = 0;
      const auto& labels = (*doc.base)[i];
      for (std::size_t k = 0; k < labels.size(); ++k)
        bits |= Mask{1} << detail::resolve(u, labels[k], "base[" + std::to_string(i) + "][" +
                                                             std::to_string(k) + "]");
      base.push_back(u.from_mask(bits));
    }
    topology = generate_topology(u, base);
  } else {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < doc.relation->size(); ++i) {
      std::string f = "relation[" + std::to_string(i) + "]";
      pairs.emplace_back(detail::resolve(u, (*doc.relation)[i].first, f + "[0]"),
                         detail::resolve(u, (*doc.relation)[i].second, f + "[1]"));
    }
    topology = generate_topology(BinaryRelation(u, std::move(pairs)));
  }

  std::vector<IndexPair> order;
  for (std::size_t i = 0; i < doc.order.size(); ++i) {
    std::string f = "order[" + std::to_string(i) + "]";
    order.emplace_back(detail::resolve(u, doc.order[i].first, f + "[0]"),
                       detail::resolve(u, doc.order[i].second, f + "[1]"));
  }
  PartialOrder rho = validate_order(u, std::move(order), OrderOptions{doc.auto_reflexive});
  return Gotas(std::move(*topology), std::move(rho));
}

}  // namespace gotas
