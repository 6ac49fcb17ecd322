#pragma once

#include <string>
#include <vector>

#include "gotas/gotas.hpp"

namespace gotas::testing {

// U = {a, b, c, d}, base {a}, {a, b}, {c, d}, and the partial order with
// a < b < d, a < c < d.
inline Gotas example_space() {
  Universe u = make_universe({"a", "b", "c", "d"});
  std::vector<Subset> base{subset_of(u, {"a"}), subset_of(u, {"a", "b"}),
                           subset_of(u, {"c", "d"})};
  Topology t = generate_topology(u, base);
  PartialOrder rho = validate_order(
      u, std::vector<std::pair<std::string, std::string>>{
             {"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"a", "b"},
             {"b", "d"}, {"a", "d"}, {"a", "c"}, {"c", "d"}});
  return Gotas(std::move(t), std::move(rho));
}

inline Subset set(const Gotas& g, std::vector<std::string> labels) {
  return subset_of(g.universe(), labels);
}

inline std::string source_path(const std::string& rel) {
  return std::string(GOTAS_SOURCE_DIR) + "/" + rel;
}

}  // namespace gotas::testing
