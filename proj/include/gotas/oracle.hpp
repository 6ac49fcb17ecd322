#pragma once

// Brute-force reference implementations and the proposition checker.
//
// The oracle answers r_lower/r_upper straight from their definitions by
// scanning the whole powerset, never by taking unions or intersections of
// the qualifying sets. It also insists that the qualifying family has a
// single inclusion-maximal (resp. minimal) member, which is the existence
// claim the definitions rely on.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gotas/approximations.hpp"

namespace gotas {

class cap_exceeded : public error {
 public:
  cap_exceeded(std::size_t size, std::size_t cap, const std::string& what)
      : error(what + " supports at most " + std::to_string(cap) + " elements, universe has " +
              std::to_string(size)) {}
};

inline constexpr std::size_t kDefaultOracleCap = 20;
inline constexpr std::size_t kDefaultExhaustiveCap = 5;

// GOTAS_ORACLE_CAP overrides the default; malformed values are ignored.
inline std::size_t oracle_cap() {
  if (const char* env = std::getenv("GOTAS_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<std::size_t>(v);
  }
  return kDefaultOracleCap;
}

namespace detail {

inline bool monotone(const PartialOrder& order, const Subset& s, Direction d) {
  return d == Direction::Inc ? is_increasing(order, s) : is_decreasing(order, s);
}

// Members of `family` not strictly below (or above, if `maximal` is false)
// another member.
inline std::vector<Mask> extremes(const std::vector<Mask>& family, bool maximal) {
  std::vector<Mask> out;
  for (Mask x : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](Mask y) {
      if (x == y) return false;
      return maximal ? (x & ~y) == 0 : (y & ~x) == 0;
    });
    if (!dominated) out.push_back(x);
  }
  return out;
}

}  // namespace detail

inline Subset oracle_r_lower(const Gotas& g, const Subset& a, Direction d,
                             std::size_t cap = oracle_cap()) {
  const Universe& u = g.universe();
  a.require_same(u.empty());
  if (u.size() > cap) throw cap_exceeded(u.size(), cap, "oracle");
  std::vector<Mask> candidates;
  for (Mask m = 0;; ++m) {
    Subset s = u.from_mask(m);
    if (g.topology().is_open(s) && detail::monotone(g.order(), s, d) && is_subset(s, a))
      candidates.push_back(m);
    if (m == u.full_mask()) break;
  }
  auto top = detail::extremes(candidates, true);
  if (top.size() != 1)
    throw std::logic_error("monotone open subsets of A have " + std::to_string(top.size()) +
                           " maximal elements");
  return u.from_mask(top.front());
}

inline Subset oracle_r_upper(const Gotas& g, const Subset& a, Direction d,
                             std::size_t cap = oracle_cap()) {
  const Universe& u = g.universe();
  a.require_same(u.empty());
  if (u.size() > cap) throw cap_exceeded(u.size(), cap, "oracle");
  std::vector<Mask> candidates;
  for (Mask m = 0;; ++m) {
    Subset s = u.from_mask(m);
    if (g.topology().is_closed(s) && detail::monotone(g.order(), s, d) && is_subset(a, s))
      candidates.push_back(m);
    if (m == u.full_mask()) break;
  }
  auto bottom = detail::extremes(candidates, false);
  if (bottom.size() != 1)
    throw std::logic_error("monotone closed supersets of A have " +
                           std::to_string(bottom.size()) + " minimal elements");
  return u.from_mask(bottom.front());
}

struct Mismatch {
  std::string op;  // "r_lower" or "r_upper"
  Direction direction;
  Subset argument;
  Subset computed;
  Subset expected;
};

struct DiffReport {
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
};

// Compares r_lower/r_upper with the oracle on every subset, both directions.
inline DiffReport oracle_diff(const Gotas& g, std::size_t cap = oracle_cap()) {
  const Universe& u = g.universe();
  if (u.size() > cap) throw cap_exceeded(u.size(), cap, "oracle");
  DiffReport report;
  for (Mask m = 0;; ++m) {
    Subset a = u.from_mask(m);
    for (Direction d : kDirections) {
      Subset lo = r_lower(g, a, d), lo_ref = oracle_r_lower(g, a, d, cap);
      Subset up = r_upper(g, a, d), up_ref = oracle_r_upper(g, a, d, cap);
      report.comparisons += 2;
      if (!(lo == lo_ref)) report.mismatches.push_back({"r_lower", d, a, lo, lo_ref});
      if (!(up == up_ref)) report.mismatches.push_back({"r_upper", d, a, up, up_ref});
    }
    if (m == u.full_mask()) break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Proposition checker

struct Violation {
  std::string space;
  Direction direction;
  std::vector<Subset> witnesses;
  std::string detail;
};

struct PropositionReport {
  std::string id;
  std::string statement;
  std::size_t instances = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few only; see violation_count

  bool passed() const { return violation_count == 0; }
};

enum class CheckMode { exhaustive, sampled };

struct CheckOptions {
  CheckMode mode = CheckMode::exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::size_t max_witnesses = 3;
  std::string space_label = "space";
};

namespace detail {

// All ten lower/upper approximations of one subset, indexed [direction][family].
struct Evaluation {
  std::array<std::array<Mask, 5>, 2> lo{};
  std::array<std::array<Mask, 5>, 2> up{};
};

inline constexpr std::size_t at(Direction d) { return d == Direction::Inc ? 0 : 1; }
inline constexpr std::size_t at(Family j) { return static_cast<std::size_t>(j); }

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

template <ApproximationOperators Ops>
class Evaluator {
 public:
  Evaluator(const Gotas& g, const Ops& ops) : g_(g), ops_(ops) {}

  const Evaluation& operator()(Mask m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    Evaluation e;
    Subset a = g_.universe().from_mask(m);
    for (Direction d : kDirections) {
      for (Family j : kFamilies) {
        e.lo[at(d)][at(j)] = ops_.lower(g_, a, j, d).bits();
        e.up[at(d)][at(j)] = ops_.upper(g_, a, j, d).bits();
      }
    }
    return cache_.emplace(m, e).first->second;
  }

  Mask full() const { return g_.universe().full_mask(); }

 private:
  const Gotas& g_;
  const Ops& ops_;
  std::map<Mask, Evaluation> cache_;
};

inline Accuracy ratio(Mask a, Mask lo, Mask up) {
  // An empty upper only comes from a broken operator set; sandwich reports it.
  if (a == 0 || up == 0) return Accuracy(1);
  return Accuracy(std::popcount(lo), std::popcount(up));
}

// Each check returns an empty string when the instance holds, otherwise a
// short description of what failed.
using Lookup = std::function<const Evaluation&(Mask)>;
using UnaryCheck = std::function<std::string(const Lookup&, Mask, Direction, Mask full)>;
using BinaryCheck = std::function<std::string(const Lookup&, Mask, Mask, Direction, Mask full)>;

struct Proposition {
  std::string id;
  std::string statement;
  UnaryCheck unary;
  BinaryCheck binary;
};

inline std::string fail_if(bool bad, const char* what) { return bad ? what : std::string(); }

inline std::vector<Proposition> propositions() {
  using F = Family;
  auto L = [](const Evaluation& e, Direction d, F j) { return e.lo[at(d)][at(j)]; };
  auto U = [](const Evaluation& e, Direction d, F j) { return e.up[at(d)][at(j)]; };
  auto B = [=](const Evaluation& e, Direction d, F j) { return U(e, d, j) & ~L(e, d, j); };

  // Monotone, meet and join laws for one approximation of one family.
  auto lattice_laws = [](auto pick) {
    return [pick](const Lookup& ev, Mask a, Mask b, Direction d, Mask) -> std::string {
      Mask fa = pick(ev(a), d), fb = pick(ev(b), d);
      if (sub(a, b) && !sub(fa, fb)) return "A ⊆ B but f(A) ⊄ f(B)";
      if (!sub(pick(ev(a & b), d), fa & fb)) return "f(A∩B) ⊄ f(A)∩f(B)";
      if (!sub(fa | fb, pick(ev(a | b), d))) return "f(A)∪f(B) ⊄ f(A∪B)";
      return {};
    };
  };
  auto negative_laws = [](F j) {
    return [j](const Lookup& ev, Mask a, Mask b, Direction d, Mask full) -> std::string {
      const auto o = at(opposite(d));
      auto neg = [&](Mask x) { return full & ~ev(x).up[o][at(j)]; };
      Mask na = neg(a), nb = neg(b), nu = neg(a | b), ni = neg(a & b);
      if (!sub(nu, na & nb)) return "Neg(A∪B) ⊄ Neg(A)∩Neg(B)";
      if (!sub(nu, na | nb)) return "Neg(A∪B) ⊄ Neg(A)∪Neg(B)";
      if (!sub(na | nb, ni)) return "Neg(A)∪Neg(B) ⊄ Neg(A∩B)";
      if (!sub(na & nb, ni)) return "Neg(A)∩Neg(B) ⊄ Neg(A∩B)";
      return {};
    };
  };
  auto unary = [](auto body) {
    return [body](const Lookup& ev, Mask a, Direction d, Mask full) -> std::string {
      return body(ev(a), a, d, full);
    };
  };

  std::vector<Proposition> out;
  out.push_back({"sandwich", "lower(A) ⊆ A ⊆ upper(A) for R, S, P, γ, β",
                 [=](const Lookup& ev, Mask a, Direction d, Mask) -> std::string {
                   const auto& e = ev(a);
                   for (F j : kFamilies) {
                     if (!sub(L(e, d, j), a)) return "lower(A) ⊄ A for " + std::string(to_string(j));
                     if (!sub(a, U(e, d, j))) return "A ⊄ upper(A) for " + std::string(to_string(j));
                   }
                   return {};
                 },
                 nullptr});
  out.push_back({"3.2", "γ upper is monotone; γ̄(A∩B) ⊆ γ̄(A)∩γ̄(B); γ̄(A∪B) ⊇ γ̄(A)∪γ̄(B)", nullptr,
                 lattice_laws([=](const Evaluation& e, Direction d) { return U(e, d, F::Gamma); })});
  out.push_back({"3.3", "γ lower is monotone; γ(A∩B) ⊆ γ(A)∩γ(B); γ(A∪B) ⊇ γ(A)∪γ(B)", nullptr,
                 lattice_laws([=](const Evaluation& e, Direction d) { return L(e, d, F::Gamma); })});
  out.push_back({"3.4", "R exact ⇒ γ exact",
                 unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(L(e, d, F::R) == U(e, d, F::R) &&
                                      L(e, d, F::Gamma) != U(e, d, F::Gamma),
                                  "R exact but γ rough");
                 }),
                 nullptr});
  out.push_back({"3.5", "R(A) ⊆ γ(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(L(e, d, F::R), L(e, d, F::Gamma)), "R(A) ⊄ γ(A)");
                 }),
                 nullptr});
  out.push_back({"3.6", "γ̄(A) ⊆ R̄(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(U(e, d, F::Gamma), U(e, d, F::R)), "γ̄(A) ⊄ R̄(A)");
                 }),
                 nullptr});
  out.push_back({"3.7", "P(A) ⊆ γ(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(L(e, d, F::P), L(e, d, F::Gamma)), "P(A) ⊄ γ(A)");
                 }),
                 nullptr});
  out.push_back({"3.8", "S(A) ⊆ γ(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(L(e, d, F::S), L(e, d, F::Gamma)), "S(A) ⊄ γ(A)");
                 }),
                 nullptr});
  out.push_back({"3.9", "P̄(A) ⊆ γ̄(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(U(e, d, F::P), U(e, d, F::Gamma)), "P̄(A) ⊄ γ̄(A)");
                 }),
                 nullptr});
  out.push_back({"3.10", "β̄(A) ⊆ P̄(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(U(e, d, F::Beta), U(e, d, F::P)), "β̄(A) ⊄ P̄(A)");
                 }),
                 nullptr});
  out.push_back({"3.12", "β upper is monotone; β̄(A∩B) ⊆ β̄(A)∩β̄(B); β̄(A∪B) ⊇ β̄(A)∪β̄(B)", nullptr,
                 lattice_laws([=](const Evaluation& e, Direction d) { return U(e, d, F::Beta); })});
  out.push_back({"3.13", "β lower is monotone; β(A∩B) ⊆ β(A)∩β(B); β(A∪B) ⊇ β(A)∪β(B)", nullptr,
                 lattice_laws([=](const Evaluation& e, Direction d) { return L(e, d, F::Beta); })});
  out.push_back({"3.14", "R exact ⇒ β exact",
                 unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(L(e, d, F::R) == U(e, d, F::R) &&
                                      L(e, d, F::Beta) != U(e, d, F::Beta),
                                  "R exact but β rough");
                 }),
                 nullptr});
  out.push_back({"3.15", "R(A) ⊆ β(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(L(e, d, F::R), L(e, d, F::Beta)), "R(A) ⊄ β(A)");
                 }),
                 nullptr});
  out.push_back({"3.16", "β̄(A) ⊆ R̄(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(U(e, d, F::Beta), U(e, d, F::R)), "β̄(A) ⊄ R̄(A)");
                 }),
                 nullptr});
  out.push_back({"3.18", "γ negative region is antitone over ∪ and ∩", nullptr,
                 negative_laws(F::Gamma)});
  out.push_back({"3.19", "β negative region is antitone over ∪ and ∩", nullptr,
                 negative_laws(F::Beta)});
  out.push_back({"3.20", "S(A) ⊆ γ(A) ⊆ β(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   if (!sub(L(e, d, F::S), L(e, d, F::Gamma))) return std::string("S(A) ⊄ γ(A)");
                   return fail_if(!sub(L(e, d, F::Gamma), L(e, d, F::Beta)), "γ(A) ⊄ β(A)");
                 }),
                 nullptr});
  out.push_back({"3.21", "β̄(A) ⊆ γ̄(A) ⊆ S̄(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   if (!sub(U(e, d, F::Beta), U(e, d, F::Gamma))) return std::string("β̄(A) ⊄ γ̄(A)");
                   return fail_if(!sub(U(e, d, F::Gamma), U(e, d, F::S)), "γ̄(A) ⊄ S̄(A)");
                 }),
                 nullptr});
  out.push_back({"3.23", "η_R(A) ≤ η_γ(A) and η_R(A) ≤ η_β(A) for non-empty A",
                 unary([=](const Evaluation& e, Mask a, Direction d, Mask) -> std::string {
                   if (a == 0) return {};
                   auto r = ratio(a, L(e, d, F::R), U(e, d, F::R));
                   if (r > ratio(a, L(e, d, F::Gamma), U(e, d, F::Gamma))) return "η_R > η_γ";
                   return fail_if(r > ratio(a, L(e, d, F::Beta), U(e, d, F::Beta)), "η_R > η_β");
                 }),
                 nullptr});
  out.push_back({"3.25", "B_β(A) ⊆ B_γ(A) ⊆ B_S(A)",
                 unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   if (!sub(B(e, d, F::Beta), B(e, d, F::Gamma))) return std::string("B_β ⊄ B_γ");
                   return fail_if(!sub(B(e, d, F::Gamma), B(e, d, F::S)), "B_γ ⊄ B_S");
                 }),
                 nullptr});
  out.push_back({"3.26", "B_γ(A) ⊆ B_R(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(B(e, d, F::Gamma), B(e, d, F::R)), "B_γ ⊄ B_R");
                 }),
                 nullptr});
  out.push_back({"3.27", "B_β(A) ⊆ B_R(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(B(e, d, F::Beta), B(e, d, F::R)), "B_β ⊄ B_R");
                 }),
                 nullptr});
  out.push_back({"3.28a", "η_R(A) ≤ η_γ(A) ≤ η_β(A) for non-empty A",
                 unary([=](const Evaluation& e, Mask a, Direction d, Mask) -> std::string {
                   if (a == 0) return {};
                   auto r = ratio(a, L(e, d, F::R), U(e, d, F::R));
                   auto g = ratio(a, L(e, d, F::Gamma), U(e, d, F::Gamma));
                   auto b = ratio(a, L(e, d, F::Beta), U(e, d, F::Beta));
                   if (r > g) return "η_R > η_γ";
                   return fail_if(g > b, "η_γ > η_β");
                 }),
                 nullptr});
  out.push_back({"3.28b", "γ(A) ⊆ β(A)", unary([=](const Evaluation& e, Mask, Direction d, Mask) {
                   return fail_if(!sub(L(e, d, F::Gamma), L(e, d, F::Beta)), "γ(A) ⊄ β(A)");
                 }),
                 nullptr});
  out.push_back({"duality", "R̄(A) = U − R(U − A) with the opposite direction",
                 [=](const Lookup& ev, Mask a, Direction d, Mask full) -> std::string {
                   Mask dual = full & ~L(ev(full & ~a), opposite(d), F::R);
                   return fail_if(U(ev(a), d, F::R) != dual, "R̄(A) ≠ U − R(U − A)");
                 },
                 nullptr});
  return out;
}

}  // namespace detail

// Evaluates every proposition over all subsets and subset pairs (exhaustive)
// or over `samples` random pairs (sampled), in both directions. Reports come
// back in a fixed order regardless of the data.
template <ApproximationOperators Ops = StandardOperators>
std::vector<PropositionReport> check_propositions(const Gotas& g, const CheckOptions& opts = {},
                                                  const Ops& ops = {}) {
  const Universe& u = g.universe();
  if (opts.mode == CheckMode::exhaustive && u.size() > opts.exhaustive_cap)
    throw cap_exceeded(u.size(), opts.exhaustive_cap, "exhaustive check");

  detail::Evaluator<Ops> eval(g, ops);
  detail::Lookup lookup = [&eval](Mask m) -> const detail::Evaluation& { return eval(m); };
  const Mask full = u.full_mask();

  auto props = detail::propositions();
  std::vector<PropositionReport> reports;
  for (const auto& p : props) reports.push_back({p.id, p.statement, 0, 0, {}});

  auto record = [&](PropositionReport& r, Direction d, std::string detail,
                    std::vector<Mask> witnesses) {
    ++r.violation_count;
    if (r.violations.size() >= opts.max_witnesses) return;
    Violation v{opts.space_label, d, {}, std::move(detail)};
    for (Mask w : witnesses) v.witnesses.push_back(u.from_mask(w));
    r.violations.push_back(std::move(v));
  };

  auto run_unary = [&](Mask a) {
    for (std::size_t k = 0; k < props.size(); ++k) {
      if (!props[k].unary) continue;
      for (Direction d : kDirections) {
        ++reports[k].instances;
        auto msg = props[k].unary(lookup, a, d, full);
        if (!msg.empty()) record(reports[k], d, std::move(msg), {a});
      }
    }
  };
  auto run_binary = [&](Mask a, Mask b) {
    for (std::size_t k = 0; k < props.size(); ++k) {
      if (!props[k].binary) continue;
      for (Direction d : kDirections) {
        ++reports[k].instances;
        auto msg = props[k].binary(lookup, a, b, d, full);
        if (!msg.empty()) record(reports[k], d, std::move(msg), {a, b});
      }
    }
  };

  if (opts.mode == CheckMode::exhaustive) {
    for (Mask a = 0;; ++a) {
      run_unary(a);
      for (Mask b = 0;; ++b) {
        run_binary(a, b);
        if (b == full) break;
      }
      if (a == full) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Mask> pick(0, full);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      Mask a = pick(rng), b = pick(rng);
      run_unary(a);
      run_binary(a, b);
    }
  }
  return reports;
}

inline bool all_passed(const std::vector<PropositionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropositionReport& r) { return r.passed(); });
}

}  // namespace gotas
