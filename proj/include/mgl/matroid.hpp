#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mgl/ground.hpp"

namespace mgl {

/// An arbitrary 0/1 function on d-subsets, stored as its support.  Not
/// necessarily a matroid; enumeration manipulates these directly.
struct MatroidCandidate {
  GroundSet ground;
  int rank = 0;
  std::set<Subset> support;
};

/// A failure of the basis-exchange condition: p(X - i) = p(Y + i) = 1 and no
/// other j in X \ Y has the same property.
struct ExchangeViolation {
  ExchangePair pair;
  Element i;
};

std::optional<ExchangeViolation> find_exchange_violation(const MatroidCandidate& candidate);

/// Throws Error("zero vector is not a matroid") on an empty support.
bool is_matroid(const MatroidCandidate& candidate);

/// A validated matroid (nonzero, satisfies basis exchange).
class Matroid {
 public:
  /// Throws Error when the candidate fails the axioms.
  explicit Matroid(MatroidCandidate candidate);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(const Subset& s) const;
  MatroidCandidate candidate() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.rank_ == b.rank_ && a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }
  /// Lexicographic on the sorted basis lists.
  friend bool operator<(const Matroid& a, const Matroid& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.bases_ < b.bases_;
  }

 private:
  struct Unchecked {};
  Matroid(Unchecked, GroundSet ground, int rank, std::vector<Subset> bases);
  friend std::vector<Matroid> enumerate_matroids(int, int, std::uint64_t);

  GroundSet ground_;
  int rank_;
  std::vector<Subset> bases_;  // sorted
};

/// q is a specialization of p: supp(q) ⊆ supp(p).  Throws on mismatched
/// ground set or rank.
bool specializes(const Matroid& p, const Matroid& q);

Matroid uniform(int d, const GroundSet& ground);

/// Default cap on C(n, d) for the 2^C(n,d) support scan.
inline constexpr std::uint64_t kMatroidEnumerationGuard = 20;

/// Every matroid of rank d on {0..n-1}, sorted lexicographically by support.
/// Throws when C(n, d) exceeds `max_bases` (lift with --guard-override).
std::vector<Matroid> enumerate_matroids(int d, int n,
                                        std::uint64_t max_bases = kMatroidEnumerationGuard);

}  // namespace mgl
