#pragma once

// Partial orders on a universe and increasing/decreasing subsets.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gotas/topology.hpp"
#include "gotas/universe.hpp"

namespace gotas {

enum class OrderAxiom { reflexive, antisymmetric, transitive };

inline const char* to_string(OrderAxiom a) {
  switch (a) {
    case OrderAxiom::reflexive: return "reflexivity";
    case OrderAxiom::antisymmetric: return "antisymmetry";
    case OrderAxiom::transitive: return "transitivity";
  }
  return "?";
}

// Thrown by validate_order. The witness is the offending pair: the missing
// loop (x,x), the pair (x,y) whose reverse is also present, or the missing
// transitive pair (x,z).
class order_error : public error {
 public:
  order_error(OrderAxiom axiom, std::pair<std::string, std::string> witness,
              const std::string& detail)
      : error("order violates " + std::string(to_string(axiom)) + ": " + detail),
        axiom_(axiom),
        witness_(std::move(witness)) {}

  OrderAxiom axiom() const { return axiom_; }
  const std::pair<std::string, std::string>& witness() const { return witness_; }

 private:
  OrderAxiom axiom_;
  std::pair<std::string, std::string> witness_;
};

struct OrderOptions {
  bool auto_reflexive = true;
};

class PartialOrder {
 public:
  const Universe& universe() const { return universe_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }

  // { y : x ρ y } and { y : y ρ x }; both contain x.
  Mask above(Index x) const { return above_.at(x); }
  Mask below(Index x) const { return below_.at(x); }

  bool related(Index x, Index y) const { return ((above_.at(x) >> y) & 1U) != 0; }

  bool is_equality() const { return pairs_.size() == universe_.size(); }

 private:
  PartialOrder(Universe u, std::vector<IndexPair> pairs, std::vector<Mask> above,
               std::vector<Mask> below)
      : universe_(std::move(u)),
        pairs_(std::move(pairs)),
        above_(std::move(above)),
        below_(std::move(below)) {}

  Universe universe_;
  std::vector<IndexPair> pairs_;
  std::vector<Mask> above_;
  std::vector<Mask> below_;

  friend PartialOrder validate_order(const Universe&, std::vector<IndexPair>,
                                     OrderOptions);
};

// Checks reflexivity, then antisymmetry, then transitivity, and reports the
// first violation. Missing transitive pairs are never filled in.
inline PartialOrder validate_order(const Universe& u, std::vector<IndexPair> pairs,
                                   OrderOptions opts = {}) {
  const std::size_t n = u.size();
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw error("order pair references an index outside the universe");
  }
  if (opts.auto_reflexive) {
    for (Index i = 0; i < n; ++i) pairs.emplace_back(i, i);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<Mask> above(n, 0), below(n, 0);
  for (auto [x, y] : pairs) {
    above[x] |= Mask{1} << y;
    below[y] |= Mask{1} << x;
  }
  auto lbl = [&u](Index i) { return u.label(i); };

  for (Index x = 0; x < n; ++x) {
    if (((above[x] >> x) & 1U) == 0)
      throw order_error(OrderAxiom::reflexive, {lbl(x), lbl(x)},
                        "missing (" + lbl(x) + ", " + lbl(x) + ")");
  }
  for (auto [x, y] : pairs) {
    if (x != y && ((above[y] >> x) & 1U) != 0)
      throw order_error(OrderAxiom::antisymmetric, {lbl(x), lbl(y)},
                        "both (" + lbl(x) + ", " + lbl(y) + ") and (" + lbl(y) + ", " +
                            lbl(x) + ") present");
  }
  for (auto [x, y] : pairs) {
    Mask missing = above[y] & ~above[x];
    if (missing != 0) {
      Index z = std::countr_zero(missing);
      throw order_error(OrderAxiom::transitive, {lbl(x), lbl(z)},
                        "(" + lbl(x) + ", " + lbl(y) + ") and (" + lbl(y) + ", " + lbl(z) +
                            ") present but (" + lbl(x) + ", " + lbl(z) + ") missing");
    }
  }
  return PartialOrder(u, std::move(pairs), std::move(above), std::move(below));
}

inline PartialOrder validate_order(
    const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs,
    OrderOptions opts = {}) {
  std::vector<IndexPair> idx;
  idx.reserve(pairs.size());
  for (const auto& [x, y] : pairs) idx.emplace_back(u.index(x), u.index(y));
  return validate_order(u, std::move(idx), opts);
}

inline PartialOrder equality_order(const Universe& u) { return validate_order(u, std::vector<IndexPair>{}); }

// a ∈ A and a ρ x imply x ∈ A.
inline bool is_increasing(const PartialOrder& order, const Subset& a) {
  a.require_same(order.universe().empty());
  for (Index i : a.indices()) {
    if ((order.above(i) & ~a.bits()) != 0) return false;
  }
  return true;
}

// a ∈ A and x ρ a imply x ∈ A.
inline bool is_decreasing(const PartialOrder& order, const Subset& a) {
  a.require_same(order.universe().empty());
  for (Index i : a.indices()) {
    if ((order.below(i) & ~a.bits()) != 0) return false;
  }
  return true;
}

}  // namespace gotas
