#pragma once

// Random test spaces: random bases, random partial orders, random partitions.

#include <random>
#include <string>
#include <vector>

#include "gotas/approximations.hpp"

namespace gotas {

// Labels a, b, c, ... (x26, x27, ... past the alphabet).
inline Universe letter_universe(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  return make_universe(std::move(labels));
}

// Reflexive-transitive closure of a random DAG whose edges only go from lower
// to higher index, so antisymmetry holds by construction.
inline PartialOrder random_partial_order(std::mt19937_64& rng, const Universe& u,
                                         double edge_probability = 0.5) {
  const std::size_t n = u.size();
  std::bernoulli_distribution edge(edge_probability);
  std::vector<Mask> above(n, 0);
  for (Index i = 0; i < n; ++i) {
    above[i] |= Mask{1} << i;
    for (Index j = i + 1; j < n; ++j) {
      if (edge(rng)) above[i] |= Mask{1} << j;
    }
  }
  // Edges point upward in index order, so one sweep from the top closes them.
  for (Index i = n; i-- > 0;) {
    for (Index j = i + 1; j < n; ++j) {
      if ((above[i] >> j) & 1U) above[i] |= above[j];
    }
  }
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if ((above[i] >> j) & 1U) pairs.emplace_back(i, j);
    }
  }
  return validate_order(u, std::move(pairs), OrderOptions{.auto_reflexive = false});
}

inline Subset random_subset(std::mt19937_64& rng, const Universe& u) {
  std::uniform_int_distribution<Mask> dist(0, u.full_mask());
  return u.from_mask(dist(rng));
}

struct RandomSpaceOptions {
  std::size_t max_base = 4;
  double edge_probability = 0.5;
  bool equality_order = false;
};

// Base of 0..max_base generators, each element included with probability 1/2.
inline Gotas random_space(std::mt19937_64& rng, std::size_t n, RandomSpaceOptions opts = {}) {
  Universe u = letter_universe(n);
  std::uniform_int_distribution<std::size_t> count(0, opts.max_base);
  std::vector<Subset> base;
  for (std::size_t k = count(rng); k > 0; --k) base.push_back(random_subset(rng, u));
  Topology t = generate_topology(u, base);
  PartialOrder order = opts.equality_order ? equality_order(u)
                                           : random_partial_order(rng, u, opts.edge_probability);
  return Gotas(std::move(t), std::move(order));
}

// Each element joins one of n buckets uniformly; empty buckets are dropped.
inline std::vector<Subset> random_partition(std::mt19937_64& rng, const Universe& u) {
  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
  std::vector<Mask> blocks(u.size(), 0);
  for (Index i = 0; i < u.size(); ++i) blocks[pick(rng)] |= Mask{1} << i;
  std::vector<Subset> out;
  for (Mask b : blocks) {
    if (b != 0) out.push_back(u.from_mask(b));
  }
  return out;
}

}  // namespace gotas
