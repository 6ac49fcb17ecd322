#pragma once

// Ordered rough-set approximations over a space (U, τ, ρ).
//
// The two primitives are the order-restricted interior and closure:
//
//   r_lower(A, Inc)  greatest open increasing subset of A
//   r_upper(A, Inc)  smallest closed increasing superset of A
//
// (Dec swaps "increasing" for "decreasing"). Every other family is a literal
// composition of these two within a single direction:
//
//   S  lower A ∩ C(I(A))               upper A ∪ I(C(A))
//   P  lower A ∩ I(C(A))               upper A ∪ C(I(A))
//   γ  lower A ∩ [C(I(A)) ∪ I(C(A))]   upper A ∪ [C(I(A)) ∪ I(C(A))]
//   β  lower A ∩ C(I(C(A)))            upper A ∪ I(C(I(A)))
//
// with I = r_lower and C = r_upper. Regions and accuracy are derived from a
// pluggable operator set (see ApproximationOperators) so the proposition
// checker can be pointed at deliberately broken variants.

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "gotas/order.hpp"
#include "gotas/topology.hpp"
#include "gotas/universe.hpp"

namespace gotas {

enum class Direction { Inc, Dec };
enum class Family { R, S, P, Gamma, Beta };

inline constexpr std::array<Direction, 2> kDirections{Direction::Inc, Direction::Dec};
inline constexpr std::array<Family, 5> kFamilies{Family::R, Family::S, Family::P,
                                                 Family::Gamma, Family::Beta};

inline constexpr Direction opposite(Direction d) {
  return d == Direction::Inc ? Direction::Dec : Direction::Inc;
}

inline std::string_view to_string(Direction d) { return d == Direction::Inc ? "Inc" : "Dec"; }

inline std::string_view to_string(Family j) {
  switch (j) {
    case Family::R: return "R";
    case Family::S: return "S";
    case Family::P: return "P";
    case Family::Gamma: return "Gamma";
    case Family::Beta: return "Beta";
  }
  return "?";
}

using Accuracy = boost::rational<std::int64_t>;

class Gotas {
 public:
  Gotas(Topology topology, PartialOrder order)
      : topology_(std::move(topology)), order_(std::move(order)) {
    if (!(topology_.universe() == order_.universe()))
      throw error("topology and order are defined over different universes");
    for (const auto& o : topology_.opens()) {
      if (is_increasing(order_, o)) inc_opens_.push_back(o.bits());
      if (is_decreasing(order_, o)) dec_opens_.push_back(o.bits());
    }
    for (const auto& c : topology_.closeds()) {
      if (is_increasing(order_, c)) inc_closeds_.push_back(c.bits());
      if (is_decreasing(order_, c)) dec_closeds_.push_back(c.bits());
    }
  }

  const Universe& universe() const { return topology_.universe(); }
  const Topology& topology() const { return topology_; }
  const PartialOrder& order() const { return order_; }

  // Opens (closeds) that are also increasing or decreasing per `d`.
  const std::vector<Mask>& monotone_opens(Direction d) const {
    return d == Direction::Inc ? inc_opens_ : dec_opens_;
  }
  const std::vector<Mask>& monotone_closeds(Direction d) const {
    return d == Direction::Inc ? inc_closeds_ : dec_closeds_;
  }

 private:
  Topology topology_;
  PartialOrder order_;
  std::vector<Mask> inc_opens_, dec_opens_, inc_closeds_, dec_closeds_;
};

inline Subset r_lower(const Gotas& g, const Subset& a, Direction d) {
  a.require_same(g.universe().empty());
  Mask out = 0;
  for (Mask o : g.monotone_opens(d)) {
    if ((o & ~a.bits()) == 0) out |= o;
  }
  return g.universe().from_mask(out);
}

inline Subset r_upper(const Gotas& g, const Subset& a, Direction d) {
  a.require_same(g.universe().empty());
  Mask out = g.universe().full_mask();
  for (Mask c : g.monotone_closeds(d)) {
    if ((a.bits() & ~c) == 0) out &= c;
  }
  return g.universe().from_mask(out);
}

inline Subset semi_lower(const Gotas& g, const Subset& a, Direction d) {
  return a & r_upper(g, r_lower(g, a, d), d);
}

inline Subset semi_upper(const Gotas& g, const Subset& a, Direction d) {
  return a | r_lower(g, r_upper(g, a, d), d);
}

inline Subset pre_lower(const Gotas& g, const Subset& a, Direction d) {
  return a & r_lower(g, r_upper(g, a, d), d);
}

inline Subset pre_upper(const Gotas& g, const Subset& a, Direction d) {
  return a | r_upper(g, r_lower(g, a, d), d);
}

inline Subset gamma_lower(const Gotas& g, const Subset& a, Direction d) {
  return a & (r_upper(g, r_lower(g, a, d), d) | r_lower(g, r_upper(g, a, d), d));
}

inline Subset gamma_upper(const Gotas& g, const Subset& a, Direction d) {
  return a | (r_upper(g, r_lower(g, a, d), d) | r_lower(g, r_upper(g, a, d), d));
}

inline Subset beta_lower(const Gotas& g, const Subset& a, Direction d) {
  return a & r_upper(g, r_lower(g, r_upper(g, a, d), d), d);
}

inline Subset beta_upper(const Gotas& g, const Subset& a, Direction d) {
  return a | r_lower(g, r_upper(g, r_lower(g, a, d), d), d);
}

inline Subset lower(const Gotas& g, const Subset& a, Family j, Direction d) {
  switch (j) {
    case Family::R: return r_lower(g, a, d);
    case Family::S: return semi_lower(g, a, d);
    case Family::P: return pre_lower(g, a, d);
    case Family::Gamma: return gamma_lower(g, a, d);
    case Family::Beta: return beta_lower(g, a, d);
  }
  throw error("unknown family");
}

inline Subset upper(const Gotas& g, const Subset& a, Family j, Direction d) {
  switch (j) {
    case Family::R: return r_upper(g, a, d);
    case Family::S: return semi_upper(g, a, d);
    case Family::P: return pre_upper(g, a, d);
    case Family::Gamma: return gamma_upper(g, a, d);
    case Family::Beta: return beta_upper(g, a, d);
  }
  throw error("unknown family");
}

template <class Ops>
concept ApproximationOperators =
    requires(const Ops& ops, const Gotas& g, const Subset& a, Family j, Direction d) {
      { ops.lower(g, a, j, d) } -> std::same_as<Subset>;
      { ops.upper(g, a, j, d) } -> std::same_as<Subset>;
    };

struct StandardOperators {
  Subset lower(const Gotas& g, const Subset& a, Family j, Direction d) const {
    return gotas::lower(g, a, j, d);
  }
  Subset upper(const Gotas& g, const Subset& a, Family j, Direction d) const {
    return gotas::upper(g, a, j, d);
  }
};

static_assert(ApproximationOperators<StandardOperators>);

template <ApproximationOperators Ops = StandardOperators>
Subset boundary(const Gotas& g, const Subset& a, Family j, Direction d, const Ops& ops = {}) {
  return ops.upper(g, a, j, d) - ops.lower(g, a, j, d);
}

template <ApproximationOperators Ops = StandardOperators>
Subset positive(const Gotas& g, const Subset& a, Family j, Direction d, const Ops& ops = {}) {
  return ops.lower(g, a, j, d);
}

// Cross-direction: the Inc negative region removes the Dec upper approximation.
template <ApproximationOperators Ops = StandardOperators>
Subset negative(const Gotas& g, const Subset& a, Family j, Direction d, const Ops& ops = {}) {
  return complement(ops.upper(g, a, j, opposite(d)));
}

// |lower| / |upper|; the empty set is exact with accuracy 1.
template <ApproximationOperators Ops = StandardOperators>
Accuracy accuracy(const Gotas& g, const Subset& a, Family j, Direction d, const Ops& ops = {}) {
  if (a.empty()) return Accuracy(1);
  auto lo = static_cast<std::int64_t>(ops.lower(g, a, j, d).cardinality());
  auto up = static_cast<std::int64_t>(ops.upper(g, a, j, d).cardinality());
  if (up == 0) return Accuracy(1);  // only reachable with a broken operator set
  return Accuracy(lo, up);
}

template <ApproximationOperators Ops = StandardOperators>
bool is_exact(const Gotas& g, const Subset& a, Family j, Direction d, const Ops& ops = {}) {
  return ops.lower(g, a, j, d) == ops.upper(g, a, j, d);
}

// Diagnostic only: gamma exactness compared across directions, lower in `d`
// against upper in the opposite direction.
inline bool gamma_exact_mixed_direction(const Gotas& g, const Subset& a, Direction d) {
  return gamma_lower(g, a, d) == gamma_upper(g, a, opposite(d));
}

struct ApproxReport {
  Subset lower;
  Subset upper;
  Subset boundary;
  Subset positive;
  Subset negative;
  Accuracy accuracy;
  bool exact;
};

struct ReportRow {
  Family family;
  Direction direction;
  ApproxReport report;
};

template <ApproximationOperators Ops = StandardOperators>
ApproxReport approximate(const Gotas& g, const Subset& a, Family j, Direction d,
                         const Ops& ops = {}) {
  Subset lo = ops.lower(g, a, j, d);
  Subset up = ops.upper(g, a, j, d);
  return ApproxReport{lo,
                      up,
                      up - lo,
                      lo,
                      negative(g, a, j, d, ops),
                      accuracy(g, a, j, d, ops),
                      lo == up};
}

// Ten rows: families in order R, S, P, Gamma, Beta; Inc before Dec.
template <ApproximationOperators Ops = StandardOperators>
std::vector<ReportRow> full_report(const Gotas& g, const Subset& a, const Ops& ops = {}) {
  std::vector<ReportRow> rows;
  rows.reserve(kFamilies.size() * kDirections.size());
  for (Family j : kFamilies) {
    for (Direction d : kDirections) rows.push_back({j, d, approximate(g, a, j, d, ops)});
  }
  return rows;
}

}  // namespace gotas
