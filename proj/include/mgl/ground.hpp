#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mgl/rational.hpp"

namespace mgl {

using Element = std::int64_t;

/// A sorted list of distinct ground-set elements.  Bases, exchange-pair
/// components and initial-datum entries all use this representation.
using Subset = std::vector<Element>;

/// A finite, totally ordered ground set.  Elements are nonnegative integers
/// kept in ascending order (canonically 0..n-1).  Optional string labels are
/// carried only for I/O.
///
/// Countable ground sets are modelled by a finite active window: every basis
/// that is not contained in the window has the zero (respectively ∞) value.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t n);
  /// Throws unless the elements are nonnegative, distinct and ascending.
  static GroundSet from_elements(std::vector<Element> elements);
  GroundSet with_labels(std::vector<std::string> labels) const;

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(Element e) const;
  bool contains(std::span<const Element> subset) const;
  /// Index of an element in the order; throws if absent.
  std::size_t position(Element e) const;
  /// True iff the elements are exactly 0..n-1.
  bool is_canonical() const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::string> labels_;
};

struct ExchangePair {
  Subset X;  // |X| = d + 1
  Subset Y;  // |Y| = d - 1

  friend auto operator<=>(const ExchangePair&, const ExchangePair&) = default;
  friend bool operator==(const ExchangePair&, const ExchangePair&) = default;
};

/// Sign of the permutation sorting `sequence` ascending.
/// Throws Error("not a permutation input") on repeated entries.
int perm_sign(std::span<const Element> sequence);

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or 0 if the tuple has a repeated entry.
int sort_with_sign(std::vector<Element>& tuple);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All d-subsets of the ground set in lexicographic order.
std::vector<Subset> enumerate_subsets(const GroundSet& ground, int d);

/// All pairs (X, Y) with |X| = d + 1 and |Y| = d - 1, lexicographic in (X, Y).
/// X and Y may intersect.
std::vector<ExchangePair> exchange_pairs(const GroundSet& ground, int d);

/// The exchange pairs at which some term X - i, Y + i (i in X \ Y) has both
/// sets inside `support`.  Every other pair has an all-zero term list, so
/// predicates that are vacuous on such pairs may scan only these.  Sorted.
std::vector<ExchangePair> relevant_exchange_pairs(const std::vector<Subset>& support, int d);

Subset set_minus(const Subset& a, const Subset& b);
Subset with_element(const Subset& s, Element e);
Subset without_element(const Subset& s, Element e);
bool is_subset_of(const Subset& a, const Subset& b);

std::string format_subset(const Subset& s);

/// Lexicographic ranking of the d-subsets of a ground set.  Used by the dense
/// enumeration kernels and by the array-aligned JSON formats.
class BasisIndex {
 public:
  BasisIndex(GroundSet ground, int d);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  std::size_t size() const { return bases_.size(); }
  const Subset& basis(std::size_t index) const { return bases_[index]; }
  const std::vector<Subset>& bases() const { return bases_; }
  /// Lexicographic index of a sorted d-subset; throws if not a d-subset.
  std::size_t index_of(const Subset& basis) const;

 private:
  GroundSet ground_;
  int rank_;
  std::vector<Subset> bases_;
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[n][k]
};

}  // namespace mgl
