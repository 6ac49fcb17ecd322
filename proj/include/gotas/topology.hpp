#pragma once

// Finite topologies generated from a binary relation or from an explicit base.

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gotas/universe.hpp"

namespace gotas {

using IndexPair = std::pair<Index, Index>;

// A general relation x R y on a universe; no structural constraints.
class BinaryRelation {
 public:
  BinaryRelation(Universe u, std::vector<IndexPair> pairs) : universe_(std::move(u)) {
    for (auto [x, y] : pairs) {
      if (x >= universe_.size() || y >= universe_.size())
        throw error("relation pair references an index outside the universe");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    pairs_ = std::move(pairs);
  }

  static BinaryRelation from_labels(
      const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<IndexPair> idx;
    idx.reserve(pairs.size());
    for (const auto& [x, y] : pairs) idx.emplace_back(u.index(x), u.index(y));
    return BinaryRelation(u, std::move(idx));
  }

  static BinaryRelation equality(const Universe& u) {
    std::vector<IndexPair> idx;
    for (Index i = 0; i < u.size(); ++i) idx.emplace_back(i, i);
    return BinaryRelation(u, std::move(idx));
  }

  const Universe& universe() const { return universe_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }

 private:
  Universe universe_;
  std::vector<IndexPair> pairs_;
};

// { xR : x in U } with xR = { y : x R y }, duplicates removed, first occurrence kept.
inline std::vector<Subset> right_neighborhoods(const BinaryRelation& r) {
  const Universe& u = r.universe();
  std::vector<Mask> rows(u.size(), 0);
  for (auto [x, y] : r.pairs()) rows[x] |= Mask{1} << y;
  std::vector<Subset> out;
  std::set<Mask> seen;
  for (Mask m : rows) {
    if (seen.insert(m).second) out.push_back(u.from_mask(m));
  }
  return out;
}

class Topology {
 public:
  const Universe& universe() const { return universe_; }

  // Sorted by cardinality, then lexicographically on member indices.
  const std::vector<Subset>& opens() const { return opens_; }
  // Complements of opens(), in the same order.
  const std::vector<Subset>& closeds() const { return closeds_; }

  bool is_open(const Subset& a) const {
    a.require_same(universe_.empty());
    return std::binary_search(open_masks_.begin(), open_masks_.end(), a.bits());
  }

  bool is_closed(const Subset& a) const { return is_open(complement(a)); }

 private:
  Topology(Universe u, const std::set<Mask>& family) : universe_(std::move(u)) {
    open_masks_.assign(family.begin(), family.end());
    for (Mask m : open_masks_) opens_.push_back(universe_.from_mask(m));
    std::sort(opens_.begin(), opens_.end(), canonical_less);
    for (const auto& o : opens_) closeds_.push_back(complement(o));
  }

  Universe universe_;
  std::vector<Subset> opens_;
  std::vector<Subset> closeds_;
  std::vector<Mask> open_masks_;  // ascending, for membership tests

  friend Topology generate_topology(const Universe&, std::span<const Subset>);
};

// Smallest topology containing `base`: intersections, then unions, then ∅ and U,
// repeated until nothing new appears.
inline Topology generate_topology(const Universe& u, std::span<const Subset> base) {
  std::set<Mask> family;
  for (const auto& s : base) {
    s.require_same(u.empty());
    family.insert(s.bits());
  }

  auto close_under = [&family](auto op) {
    bool grew = false;
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Mask> current(family.begin(), family.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (family.insert(op(current[i], current[j])).second) changed = true;
        }
      }
      grew = grew || changed;
    }
    return grew;
  };

  for (bool changed = true; changed;) {
    changed = close_under([](Mask a, Mask b) { return a & b; });
    changed = close_under([](Mask a, Mask b) { return a | b; }) || changed;
    changed = family.insert(Mask{0}).second || changed;
    changed = family.insert(u.full_mask()).second || changed;
  }
  return Topology(u, family);
}

inline Topology generate_topology(const BinaryRelation& r) {
  auto base = right_neighborhoods(r);
  return generate_topology(r.universe(), base);
}

// Greatest open subset of A.
inline Subset interior(const Topology& t, const Subset& a) {
  Mask out = 0;
  for (const auto& o : t.opens()) {
    if (is_subset(o, a)) out |= o.bits();
  }
  return t.universe().from_mask(out);
}

// Smallest closed superset of A.
inline Subset closure(const Topology& t, const Subset& a) {
  Mask out = t.universe().full_mask();
  for (const auto& c : t.closeds()) {
    if (is_subset(a, c)) out &= c.bits();
  }
  return t.universe().from_mask(out);
}

}  // namespace gotas
