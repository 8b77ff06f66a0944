#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgl/matroid.hpp"
#include "mgl/plucker_map.hpp"

namespace mgl {

/// An assignment (X, Y) -> I(X, Y) ⊆ X \ Y over every exchange pair of a
/// ground set and rank.  Entries are aligned with exchange_pairs(ground, d).
class InitialDatum {
 public:
  InitialDatum() = default;
  /// Every entry starts as the full set X \ Y.
  InitialDatum(const GroundSet& ground, int rank);

  int rank() const { return rank_; }
  const std::vector<ExchangePair>& pairs() const { return *pairs_; }
  std::size_t size() const { return sets_.size(); }
  const Subset& at(std::size_t pair_index) const { return sets_.at(pair_index); }
  const Subset& operator[](const ExchangePair& pair) const;
  /// Throws Error unless `set` ⊆ X \ Y.
  void set(std::size_t pair_index, Subset set);

  /// Pointwise I(X,Y) ⊆ other(X,Y).
  bool is_contained_in(const InitialDatum& other) const;

  friend bool operator==(const InitialDatum& a, const InitialDatum& b) {
    return a.rank_ == b.rank_ && a.sets_ == b.sets_;
  }
  friend bool operator<(const InitialDatum& a, const InitialDatum& b) { return a.sets_ < b.sets_; }

 private:
  int rank_ = 0;
  std::shared_ptr<const std::vector<ExchangePair>> pairs_ =
      std::make_shared<const std::vector<ExchangePair>>();
  std::vector<Subset> sets_;
};

/// The exchange pairs of a ground set and rank, or none when d < 1 or
/// d + 1 > |E| (the Plücker conditions are then vacuous).
std::vector<ExchangePair> all_exchange_pairs(const GroundSet& ground, int d);

/// The cone C(p, I): tropical Plücker vectors with underlying matroid p and
/// initial datum I.
struct DressianCellId {
  Matroid matroid;
  InitialDatum datum;

  friend bool operator==(const DressianCellId& a, const DressianCellId& b) = default;
};

/// A cell together with a point of its relative interior.
struct CertifiedCell {
  DressianCellId id;
  TropicalVector witness;
};

/// An integer linear form over the variables of a LinearSystem.
using LinearForm = std::map<std::size_t, long>;

/// Equalities (form = 0) and strict inequalities (form > 0) over coordinates
/// indexed by bases.  Forms are deduplicated and sorted.
struct LinearSystem {
  std::vector<Subset> variables;
  std::vector<LinearForm> equalities;
  std::vector<LinearForm> strict;
  /// The all-ones direction lies in the lineality space.
  bool all_ones_lineality = false;
};

std::string format_form(const LinearSystem& system, const LinearForm& form);

/// argmin over i in X \ Y of φ(X - i) + φ(Y ∪ i), exactly.  Pairs whose terms
/// are all ∞ get the full set X \ Y.
InitialDatum initial_datum(const TropicalVector& phi);

/// First exchange pair at which some term is finite but the argmin is a
/// singleton.
std::optional<ExchangePair> find_tropical_violation(const TropicalVector& phi);
bool is_tropical_plucker(const TropicalVector& phi);

Matroid underlying_matroid(const TropicalVector& phi);

/// The representative of the additive orbit whose minimum finite value is 0.
TropicalVector normalize(const TropicalVector& phi);

/// Adds λ to every finite coordinate.
TropicalVector translate(const TropicalVector& phi, const LogRational& lambda);

/// Linear description of C(p, I) inside R^supp(p): chain equalities among the
/// tied terms of every pair and strict inequalities against the untied
/// finite terms.  A datum that cannot be an argmin (a singleton, an ∞ term
/// in I, or a non-full set where every term is ∞) contributes the
/// contradiction 0 > 0.
LinearSystem cell_system(const DressianCellId& cell);

/// Whether φ (restricted to the variables) satisfies every form exactly.
bool satisfies(const LinearSystem& system, const TropicalVector& phi);

/// A rational point satisfying all equalities and strict inequalities, or
/// nullopt.  Maximizes a slack s <= 1 with every strict form >= s; feasible
/// iff the optimum is positive.  When the lineality flag is set the first
/// variable is pinned to 0.
std::optional<std::vector<Rational>> lp_feasible_interior(const LinearSystem& system);

/// The tropical vector with the given finite values on the variables and ∞
/// elsewhere.
TropicalVector point_to_vector(const GroundSet& ground, int rank,
                               const std::vector<Subset>& variables,
                               const std::vector<Rational>& point);

/// (underlying_matroid(φ), initial_datum(φ)); throws on non-Plücker input.
DressianCellId cell_of(const TropicalVector& phi);

/// Cells c' ≠ c of the universe with p ⪯ p' and I ⊆ I' pointwise.
std::vector<DressianCellId> closure_candidates(const DressianCellId& cell,
                                               const std::vector<DressianCellId>& universe);

/// Nonempty cells of a single matroid, each with an LP-certified witness.
std::vector<CertifiedCell> dressian_cells_of(const Matroid& matroid);

/// Default cap on C(n, d) for the cell enumeration.
inline constexpr std::uint64_t kDressianEnumerationGuard = 10;

/// Every nonempty cell C(p, I) of rank d on {0..n-1}, grouped by matroid in
/// enumeration order.
std::vector<CertifiedCell> enumerate_dressian_cells(int d, int n,
                                                    std::uint64_t max_bases = kDressianEnumerationGuard);

/// Whether the relative interior point `inner.witness` of C(p', I') lies in
/// the closure of C(p, I) = `outer`.  Solves for z in the closed cone of
/// `outer` agreeing with the witness on supp(p') and a recession direction r
/// of that cone vanishing on supp(p') and positive on supp(p) \ supp(p'):
/// z + λ r converges to the witness as λ -> ∞.
bool closure_perturbation_feasible(const DressianCellId& outer, const CertifiedCell& inner);

struct ClosureReport {
  std::size_t pairs_checked = 0;
  std::size_t containments = 0;
  std::vector<std::string> violations;
};

/// Compares closure_candidates with the perturbation LP on every ordered pair.
ClosureReport check_closure_relation(const std::vector<CertifiedCell>& cells);

}  // namespace mgl
