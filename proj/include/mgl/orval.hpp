#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgl/oriented.hpp"

namespace mgl {

struct SplitVector {
  TropicalVector phi;
  SignMap chi;
};

/// Componentwise (valuation, sign).  Throws on the zero vector.
SplitVector split(const OrientedTropicalVector& Phi);

/// Imports signed rationals: sign(r) and -log2|r|, kept exact.
OrientedTropicalVector from_signed_rationals(const GroundSet& ground, int rank,
                                             const std::map<Subset, Rational>& values);

/// (1) φ(B) = ∞ iff χ(B) = 0, and (2) at every pair with a finite term the
/// argmin contains two indices whose three-term values have opposite signs.
/// Does not re-check that φ and χ are individually valid.
bool is_compatible(const TropicalVector& phi, const SignMap& chi);

/// First pair whose nonzero signed products attain their maximum modulus
/// with one sign only.  Throws on the zero vector.
std::optional<ExchangePair> find_oriented_violation(const OrientedTropicalVector& Phi);
bool is_oriented_tropical_plucker(const OrientedTropicalVector& Phi);

struct OrientedCellId {
  OrientedMatroidClass om;
  InitialDatum datum;

  friend bool operator==(const OrientedCellId& a, const OrientedCellId& b) {
    return a.om == b.om && a.datum == b.datum;
  }
  friend bool operator<(const OrientedCellId& a, const OrientedCellId& b) {
    if (a.om < b.om) return true;
    if (b.om < a.om) return false;
    return a.datum < b.datum;
  }
};

/// (om_class(sign Φ), initial_datum(val Φ)).  Throws on invalid Φ.
OrientedCellId cell_of_oriented(const OrientedTropicalVector& Phi);

struct OrientedCellPoset {
  std::vector<OrientedCellId> cells;
  /// Index into the MacPhersonian the poset was built from.
  std::vector<std::size_t> class_index;
  /// leq[i][j]: [χ_i] ⪯ [χ_j] and I_i ⊆ I_j pointwise.
  std::vector<std::vector<bool>> leq;
};

/// Cells ([χ], I) for every class of `macp`: the Dressian cells of |χ| whose
/// witness is compatible with χ.
OrientedCellPoset oriented_cell_poset(const MacPPoset& macp);
OrientedCellPoset oriented_cell_poset(int d, int n,
                                      std::uint64_t max_bases = kOrientedEnumerationGuard);

/// ([χ], I) -> [χ] as indices into `macp`; throws if the map is not order
/// preserving or misses a class.
std::vector<std::size_t> project_to_macp(const OrientedCellPoset& poset, const MacPPoset& macp);

struct FiberReport {
  std::size_t fibers_checked = 0;
  std::size_t objects_checked = 0;
  /// Fibers without the maximum ([χ], i_max(χ)), and fibre categories with
  /// no final object at all.
  std::vector<std::string> violations;
  /// Fibre categories whose final object is not I itself.  Their final
  /// object is I ∩ i_max(χ): indices whose terms are ∞ for |χ| drop out.
  std::vector<std::string> final_object_not_I;
  /// Fibre categories whose final object differs from I ∩ i_max(χ).
  std::vector<std::string> final_object_not_restriction;
};

/// (a) each fiber over [χ] has the maximum ([χ], i_max(χ)); (b) for [τ] ⪰ [χ]
/// and each cell ([τ], I), the poset {J : ([χ], J) a cell, J ⊆ I} has a
/// maximum, compared against I and against I ∩ i_max(χ).
FiberReport check_fiber_finality(const OrientedCellPoset& poset, const MacPPoset& macp);

}  // namespace mgl
