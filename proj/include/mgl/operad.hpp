#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgl/sums_sliding.hpp"

namespace mgl {

/// ℕ = P_0 ∪ P_1 ∪ ...: P_i (i ≥ 1) holds the powers p^k, k ≥ 1, of the i-th
/// prime and P_0 everything else.
namespace partition {

/// The i-th prime, 1-based.
Element nth_prime(std::size_t i);
std::size_t piece_of(Element x);
/// The first m elements of P_i in increasing order.  Throws on int64 overflow.
std::vector<Element> first_elements(std::size_t piece, std::size_t m);
std::vector<Element> elements_below(std::size_t piece, Element bound);

}  // namespace partition

/// Window of the unit of 𝓔({a}); it is defined on all of {a} × ℕ.
inline constexpr std::size_t kUnboundedWindow = std::numeric_limits<std::size_t>::max();

/// An injection A × {0..W-1} → ℕ with A = {0..arity-1}, stored as
/// images[a·W + m].  The unit vertex (a, m) ↦ m has no stored images.
struct InjectionVertex {
  bool unit = false;
  std::size_t arity = 0;
  std::size_t window = 0;
  std::vector<Element> images;

  static InjectionVertex make_unit();
  static InjectionVertex make(std::size_t arity, std::size_t window, std::vector<Element> images);

  Element image(std::size_t a, std::size_t m) const;
  /// Pieces met by the image.  Empty for the unit.
  std::vector<std::size_t> pieces() const;
  /// Injectivity and, when asked and arity ≥ 2, a single piece.
  void validate(bool single_piece) const;
  /// The map restricted to the ground labels a·W + m of the block direct sum.
  Injection as_injection() const;

  friend auto operator<=>(const InjectionVertex&, const InjectionVertex&) = default;
  friend bool operator==(const InjectionVertex&, const InjectionVertex&) = default;
};

/// True iff the images are pairwise disjoint.  Throws when the vertices do
/// not share one domain.
bool is_simplex(const std::vector<InjectionVertex>& vertices);
/// True iff every element of ℕ hit by the vertices has a single preimage
/// (a, m) across all of them.
bool is_consistent_family(const std::vector<InjectionVertex>& vertices);

/// A vertex on the given domain into P_M, M one more than the largest piece
/// used in K (P_1 for empty K), enumerating P_M in order.
InjectionVertex cone_vertex(const std::vector<InjectionVertex>& K, std::size_t arity,
                            std::size_t window);

using WeightedVertex = std::pair<Rational, InjectionVertex>;

/// A formal convex combination of vertices on a common domain.  Terms are
/// sorted by vertex with equal vertices merged.
class OperadPoint {
 public:
  enum class Check {
    Simplex,     // every vertex single-piece (arity ≥ 2) and images disjoint
    Consistent,  // injective vertices forming a consistent family
  };
  // Composites are only guaranteed to be consistent: two vertex tuples that
  // share the choice on one fibre share that fibre's images.

  OperadPoint() = default;
  static OperadPoint unit();
  /// The single point of 𝓔(∅).
  static OperadPoint empty();
  static OperadPoint vertex(InjectionVertex v, Check check = Check::Simplex);
  static OperadPoint combination(std::vector<WeightedVertex> terms, Check check = Check::Simplex);

  std::size_t arity() const { return arity_; }
  std::size_t window() const { return window_; }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].second.unit; }
  const std::vector<WeightedVertex>& terms() const { return terms_; }
  std::vector<InjectionVertex> vertices() const;

  std::string str() const;

  friend bool operator==(const OperadPoint&, const OperadPoint&) = default;

 private:
  std::size_t arity_ = 0;
  std::size_t window_ = 0;
  std::vector<WeightedVertex> terms_;
};

/// The same point on the smaller window {0..W-1}; terms that become equal
/// are merged.  The unit becomes the identity vertex on the window.
OperadPoint restrict_window(const OperadPoint& p, std::size_t window);

/// γ*: 𝓔(A) × Π_a 𝓔(γ⁻¹(a)) → 𝓔(B).  gamma[b] ∈ A = {0..pA.arity()-1} and
/// fibres[a] is a point over γ⁻¹(a), indexed by position in ascending order.
/// On vertices (b, m) ↦ α(γ(b), β_{γ(b)}(pos(b), m)); a unit fibre reads
/// (b, m) ↦ α(γ(b), m).  Extended over the product of the simplices with
/// product weights.  The result window is the least window over the
/// non-empty fibres, with a unit fibre counting as the window of α.
/// Throws Error("window exhausted ...") when some β value falls outside
/// the window of α.
OperadPoint operad_compose(const std::vector<std::size_t>& gamma, const OperadPoint& pA,
                           const std::vector<OperadPoint>& fibres);

/// (σ·α)(i, m) = α(σ⁻¹(i), m), σ a permutation of {0..arity-1}.
InjectionVertex permute(const InjectionVertex& v, const std::vector<std::size_t>& sigma);
OperadPoint permute(const OperadPoint& p, const std::vector<std::size_t>& sigma);

/// μ_A: the block direct sum of the inputs on labels a·W + z, slid along the
/// vertices of p with their weights.  The unit acts as the identity.
/// Input a must live on {0..W-1}.
OrientedTropicalVector operad_act(const OperadPoint& p,
                                  const std::vector<OrientedTropicalVector>& inputs);

/// Small deterministic list of points of the given arity and window whose
/// images lie below `value_bound`: vertices cut in order from the pieces,
/// two- and three-term combinations of them, and the unit for arity 1.
std::vector<OperadPoint> catalogue_points(std::size_t arity, std::size_t window,
                                          Element value_bound);

struct LawPlan {
  std::size_t max_set_size = 3;
  std::size_t max_window = 20;
  /// Extra draws of (maps, points) on top of the exhaustive sweep.
  std::size_t random_trials = 0;
  std::uint64_t seed = 0;
};

struct LawReport {
  std::size_t unit_checks = 0;
  std::size_t associativity_checks = 0;
  std::size_t equivariance_checks = 0;
  /// Map configurations visited by the associativity and equivariance sweeps.
  std::size_t configurations = 0;
  /// Those among them with no window ≤ max_window holding the inputs.
  std::size_t window_skipped = 0;
  std::vector<std::string> failures;
};

/// Unit laws, associativity γ*∘(Π δ_a*) = (δγ)*∘γ* and the equivariance
/// square over every pair of maps C → B → A with sets of size ≤ max_set_size
/// and every fibre-preserving pair of permutations.
LawReport check_operad_laws(const LawPlan& plan);

struct ActionPlan {
  std::size_t trials = 60;
  std::uint64_t seed = 0;
  std::size_t max_window = 30;
  /// Outputs with at most this many coordinates are also checked to be
  /// oriented tropical Plucker vectors (the scan is quadratic in the support).
  std::size_t validate_up_to = 400;
};

struct ActionReport {
  std::size_t trials = 0;
  std::size_t coordinates_compared = 0;
  std::size_t outputs_validated = 0;
  std::vector<std::string> failures;
};

/// μ_B(γ*(pA, pB), x) against μ_A(pA, (μ(pB_a, x_a))_a) up to one global
/// scale, for seeded |A| ≤ 2, |B| ≤ 3, input ranks 1 and 2 with total ≤ 3.
ActionReport check_action_compatibility(const ActionPlan& plan);

}  // namespace mgl
