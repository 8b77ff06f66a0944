#pragma once

#include <map>
#include <span>
#include <vector>

#include "mgl/ground.hpp"
#include "mgl/tropical.hpp"

namespace mgl {

/// Value-domain hooks: the distinguished zero and the involution.
template <class V>
struct PluckerTraits;

template <>
struct PluckerTraits<int> {  // signs {-1, 0, +1} and 0/1 indicators
  static int zero() { return 0; }
  static bool is_zero(int v) { return v == 0; }
  static int negate(int v) { return -v; }
};

template <>
struct PluckerTraits<TropicalValue> {  // the involution on T is trivial
  static TropicalValue zero() { return TropicalValue::infinity(); }
  static bool is_zero(const TropicalValue& v) { return v.is_infinite(); }
  static TropicalValue negate(const TropicalValue& v) { return v; }
};

template <>
struct PluckerTraits<SignedTropical> {
  static SignedTropical zero() { return {}; }
  static bool is_zero(const SignedTropical& v) { return v.is_zero(); }
  static SignedTropical negate(const SignedTropical& v) { return -v; }
};

/// A function on the d-subsets of a ground set, stored sparsely (only
/// non-zero entries).  Through the fixed order of the ground set it is also
/// the alternating function on d-tuples, see eval().
template <class V>
class PluckerMap {
 public:
  using Traits = PluckerTraits<V>;

  PluckerMap() = default;
  PluckerMap(GroundSet ground, int rank) : ground_(std::move(ground)), rank_(rank) {
    if (rank_ < 0 || static_cast<std::size_t>(rank_) > ground_.size()) {
      throw Error("rank " + std::to_string(rank_) + " out of range for ground set of size " +
                  std::to_string(ground_.size()));
    }
  }

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }

  /// Value on a sorted d-subset (zero when absent).
  V operator[](const Subset& basis) const {
    auto it = entries_.find(basis);
    return it == entries_.end() ? Traits::zero() : it->second;
  }

  void set(const Subset& basis, V value) {
    check_basis(basis);
    if (Traits::is_zero(value)) {
      entries_.erase(basis);
    } else {
      entries_[basis] = std::move(value);
    }
  }

  /// The alternating function: zero on tuples with a repeat, otherwise
  /// sign(sorting permutation) times the value on the sorted set.
  V eval(std::span<const Element> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(rank_)) {
      throw Error("tuple length does not match the rank");
    }
    std::vector<Element> sorted(tuple.begin(), tuple.end());
    int s = sort_with_sign(sorted);
    if (!ground_.contains(sorted)) throw Error("tuple element outside the ground set");
    if (s == 0) return Traits::zero();
    V v = (*this)[sorted];
    return s > 0 ? v : Traits::negate(v);
  }

  const std::map<Subset, V>& entries() const { return entries_; }
  std::vector<Subset> support() const {
    std::vector<Subset> out;
    out.reserve(entries_.size());
    for (const auto& [b, v] : entries_) out.push_back(b);
    return out;
  }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const PluckerMap& a, const PluckerMap& b) {
    return a.ground_ == b.ground_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  void check_basis(const Subset& basis) const {
    if (basis.size() != static_cast<std::size_t>(rank_)) {
      throw Error("basis " + format_subset(basis) + " does not have size " +
                  std::to_string(rank_));
    }
    for (std::size_t i = 1; i < basis.size(); ++i) {
      if (basis[i - 1] >= basis[i]) throw Error("basis " + format_subset(basis) + " is not sorted");
    }
    if (!ground_.contains(basis)) {
      throw Error("basis " + format_subset(basis) + " is not inside the ground set");
    }
  }

  GroundSet ground_;
  int rank_ = 0;
  std::map<Subset, V> entries_;
};

using SignMap = PluckerMap<int>;
using TropicalVector = PluckerMap<TropicalValue>;
using OrientedTropicalVector = PluckerMap<SignedTropical>;

/// alternating_eval for any value domain.
template <class V>
V alternating_eval(const PluckerMap<V>& g, std::span<const Element> tuple) {
  return g.eval(tuple);
}

}  // namespace mgl
