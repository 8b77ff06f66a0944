#pragma once

#include <map>
#include <vector>

#include "mgl/plucker_map.hpp"

namespace mgl {

/// The rank-0 vector on the empty ground set with value +1 (valuation 0).
OrientedTropicalVector rank_zero_unit();

/// Φ1 ⊕ Φ2 on disjoint labels: on B = B1 ⊔ B2 with |B1| = d1 the value is
/// Φ1(B1)·Φ2(B2), read as the alternating function on the tuple (B1, B2).
/// Throws Error("label collision ...") when the ground sets meet.
OrientedTropicalVector direct_sum_disjoint(const OrientedTropicalVector& a,
                                           const OrientedTropicalVector& b);

/// Φ1 ⊕ Φ2 after relabeling E1 to 0..|E1|-1 and E2 to |E1|.. by position.
OrientedTropicalVector direct_sum(const OrientedTropicalVector& a, const OrientedTropicalVector& b);

/// Iterated direct sum with block a placed at labels a·W + z.  Every input
/// ground set must lie inside {0..W-1}.
OrientedTropicalVector direct_sum_blocks(const std::vector<OrientedTropicalVector>& inputs,
                                         std::size_t window);

using Injection = std::map<Element, Element>;

/// Throws unless `alpha` is injective and defined on every element of `domain`.
void check_injection(const Injection& alpha, const GroundSet& domain);

/// α_*Φ on `codomain` (which must contain α(E)), zero off α(E).
OrientedTropicalVector pushforward(const OrientedTropicalVector& Phi, const Injection& alpha,
                                   const GroundSet& codomain);
/// As above on the codomain α(E).
OrientedTropicalVector pushforward(const OrientedTropicalVector& Phi, const Injection& alpha);

/// Nonnegative rationals summing to 1.
void check_simplex_point(const std::vector<Rational>& t);

/// Images pairwise disjoint.
bool is_disjoint_family(const std::vector<Injection>& family);
/// Every element of the union of images has a single preimage across the
/// family (images may overlap where the maps agree on preimages).
bool is_consistent_family(const std::vector<Injection>& family);

/// Φ_t^A(x) = Φ(x̄)·Π_k t_k^{b_k} on tuples inside ⋃ α_k(E), zero elsewhere.
/// The family must have pairwise disjoint images.  The output ground set is
/// ⋃ α_k(E).
OrientedTropicalVector slide(const OrientedTropicalVector& Phi, const std::vector<Injection>& family,
                             const std::vector<Rational>& t);

/// The same formula for consistent families, with the monomial replaced by
/// Π_i w(x_i), w(x) = Σ_{k : x ∈ α_k(E)} t_k.  Agrees with slide() on
/// disjoint families.
OrientedTropicalVector slide_consistent(const OrientedTropicalVector& Phi,
                                        const std::vector<Injection>& family,
                                        const std::vector<Rational>& t);

/// Ψ = λ·Φ for a single nonzero real λ (equal supports, one sign ratio, one
/// valuation offset).  Ground sets are not compared.
bool equal_up_to_scale(const OrientedTropicalVector& a, const OrientedTropicalVector& b);

}  // namespace mgl
