#pragma once

// Labeled finite universe and the subset algebra every operator works on.
//
// A Universe is a cheap-to-copy handle onto immutable label storage. Subsets
// remember the storage they were created from; combining subsets of two
// different universes is an error even when the labels coincide.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gotas {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class universe_mismatch : public error {
 public:
  universe_mismatch() : error("subsets belong to different universes") {}
};

using Mask = std::uint64_t;
using Index = std::size_t;

inline constexpr std::size_t kMaxUniverseSize = 64;

namespace detail {

struct UniverseData {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> index;
};

}  // namespace detail

class Subset;

class Universe {
 public:
  static Universe make(std::vector<std::string> labels) {
    if (labels.empty()) throw error("universe must contain at least one element");
    if (labels.size() > kMaxUniverseSize)
      throw error("universe has " + std::to_string(labels.size()) +
                  " elements; at most " + std::to_string(kMaxUniverseSize) +
                  " are supported");
    auto data = std::make_shared<detail::UniverseData>();
    for (Index i = 0; i < labels.size(); ++i) {
      if (!data->index.emplace(labels[i], i).second)
        throw error("duplicate label '" + labels[i] + "'");
    }
    data->labels = std::move(labels);
    return Universe(std::move(data));
  }

  std::size_t size() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(Index i) const { return data_->labels.at(i); }

  Index index(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end())
      throw error("unknown label '" + std::string(label) + "'");
    return it->second;
  }

  bool contains(std::string_view label) const {
    return data_->index.count(std::string(label)) != 0;
  }

  Mask full_mask() const {
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  Subset empty() const;
  Subset full() const;
  Subset from_mask(Mask bits) const;
  Subset singleton(Index i) const;

  // Identity comparison: two handles are equal only if they share storage.
  friend bool operator==(const Universe& a, const Universe& b) {
    return a.data_ == b.data_;
  }

 private:
  explicit Universe(std::shared_ptr<const detail::UniverseData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::UniverseData> data_;
  friend class Subset;
};

inline Universe make_universe(std::vector<std::string> labels) {
  return Universe::make(std::move(labels));
}

class Subset {
 public:
  const Universe& universe() const { return universe_; }
  Mask bits() const { return bits_; }

  bool contains(Index i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t cardinality() const { return std::popcount(bits_); }

  // Member indices in universe order.
  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(cardinality());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (Index i : indices()) out.push_back(universe_.label(i));
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    a.require_same(b);
    return a.bits_ == b.bits_;
  }

  void require_same(const Subset& other) const {
    if (!(universe_ == other.universe_)) throw universe_mismatch();
  }

 private:
  Subset(Universe u, Mask bits) : universe_(std::move(u)), bits_(bits) {}

  Universe universe_;
  Mask bits_ = 0;
  friend class Universe;
};

inline Subset Universe::empty() const { return Subset(*this, 0); }
inline Subset Universe::full() const { return Subset(*this, full_mask()); }

inline Subset Universe::from_mask(Mask bits) const {
  if ((bits & ~full_mask()) != 0)
    throw error("mask references indices outside the universe");
  return Subset(*this, bits);
}

inline Subset Universe::singleton(Index i) const {
  if (i >= size()) throw error("index " + std::to_string(i) + " out of range");
  return Subset(*this, Mask{1} << i);
}

// Order and duplicates in `labels` are irrelevant.
inline Subset subset_of(const Universe& u, const std::vector<std::string>& labels) {
  Mask bits = 0;
  for (const auto& l : labels) bits |= Mask{1} << u.index(l);
  return u.from_mask(bits);
}

inline Subset set_union(const Subset& a, const Subset& b) {
  a.require_same(b);
  return a.universe().from_mask(a.bits() | b.bits());
}

inline Subset set_intersection(const Subset& a, const Subset& b) {
  a.require_same(b);
  return a.universe().from_mask(a.bits() & b.bits());
}

inline Subset set_difference(const Subset& a, const Subset& b) {
  a.require_same(b);
  return a.universe().from_mask(a.bits() & ~b.bits());
}

inline Subset complement(const Subset& a) {
  return a.universe().from_mask(~a.bits() & a.universe().full_mask());
}

inline bool is_subset(const Subset& a, const Subset& b) {
  a.require_same(b);
  return (a.bits() & ~b.bits()) == 0;
}

inline std::size_t cardinality(const Subset& a) { return a.cardinality(); }

inline Subset operator|(const Subset& a, const Subset& b) { return set_union(a, b); }
inline Subset operator&(const Subset& a, const Subset& b) { return set_intersection(a, b); }
inline Subset operator-(const Subset& a, const Subset& b) { return set_difference(a, b); }

// Rendering order: by cardinality, then lexicographically on member indices.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
  // Equal cardinality: the set whose lowest differing index is present first wins.
  Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  Mask low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

}  // namespace gotas
