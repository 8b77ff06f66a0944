#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mgl/valuated.hpp"

namespace mgl {

/// The d+1 values (-1)^k χ(x_1..x̂_k..x_{d+1}) χ(x_k, y_1..y_{d-1}), k = 1..d+1,
/// for ordered tuples X and Y.
std::vector<int> three_term_values(const SignMap& chi, std::span<const Element> X,
                                   std::span<const Element> Y);

/// First sorted pair whose three-term list is nonzero but one-signed.
/// Throws on the zero map or on values outside {-1, 0, +1}.
std::optional<ExchangePair> find_chirotope_violation(const SignMap& chi);
bool is_chirotope(const SignMap& chi);

/// An oriented matroid [χ], stored as the representative whose first nonzero
/// sign (in lexicographic basis order) is +1.
class OrientedMatroidClass {
 public:
  /// Throws unless `chi` is a chirotope.
  explicit OrientedMatroidClass(const SignMap& chi);

  const SignMap& representative() const { return rep_; }
  const GroundSet& ground() const { return rep_.ground(); }
  int rank() const { return rep_.rank(); }

  friend bool operator==(const OrientedMatroidClass& a, const OrientedMatroidClass& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator<(const OrientedMatroidClass& a, const OrientedMatroidClass& b) {
    return a.rep_.entries() < b.rep_.entries();
  }

 private:
  struct Unchecked {};
  OrientedMatroidClass(Unchecked, SignMap rep) : rep_(std::move(rep)) {}
  friend class MacPBuilder;

  SignMap rep_;
};

OrientedMatroidClass om_class(const SignMap& chi);
SignMap negated(const SignMap& chi);

/// b is a specialization of a: for one choice of representatives each
/// nonzero coordinate of b equals that of a.
bool om_specializes(const OrientedMatroidClass& a, const OrientedMatroidClass& b);
bool chirotope_specializes(const SignMap& chi, const SignMap& tau);

Matroid underlying_matroid_of_chirotope(const SignMap& chi);

enum class Compatibility { Compatible, SignConditionFails, IncompatibleWithMatroid };

/// Full classification of I against χ: the Dressian LP for (|χ|, I) first,
/// then the two-signs condition inside I(X, Y) at every pair.
Compatibility classify_compatibility(const InitialDatum& I, const SignMap& chi);

/// Throws Error when I is not compatible with |χ|; otherwise the sign test.
bool initial_datum_compatible_with_chirotope(const InitialDatum& I, const SignMap& chi);

/// x ∈ I(X,Y) iff |χ|(X - x)·|χ|(Y + x) ≠ 0; all-zero pairs get X \ Y.
InitialDatum i_max(const SignMap& chi);

/// Signs aligned with the lexicographic basis order.
std::vector<int> aligned_signs(const SignMap& chi);
SignMap signs_from_aligned(const GroundSet& ground, int rank, const std::vector<int>& values);

struct MacPPoset {
  std::vector<OrientedMatroidClass> elements;
  /// leq[i][j]: elements[j] is a specialization of elements[i].
  std::vector<std::vector<bool>> leq;
};

inline constexpr std::uint64_t kOrientedEnumerationGuard = 9;

/// Every rank-d oriented matroid on {0..n-1} in base-3 counting order of the
/// aligned sign vector, with the specialization relation.
MacPPoset enumerate_oriented_matroids(int d, int n,
                                      std::uint64_t max_bases = kOrientedEnumerationGuard);

}  // namespace mgl
