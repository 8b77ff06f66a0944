#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mgl/orval.hpp"

namespace mgl {

/// A finite poset on {0..n-1} given by its full relation matrix.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Throws unless `leq` is reflexive, antisymmetric and transitive.
  explicit FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {});

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  const std::vector<std::vector<bool>>& relation() const { return leq_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The induced order on the listed elements, renumbered in list order.
  FinitePoset subposet(const std::vector<std::size_t>& elements) const;
  /// Index of the maximum element, or size() when there is none.
  std::size_t maximum() const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> labels_;
};

FinitePoset poset_of(const MacPPoset& macp);

/// All faces of a finite simplicial complex, each a sorted vertex list,
/// ordered by dimension and then lexicographically.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closes the facets downward.
  static SimplicialComplex from_facets(std::size_t num_vertices,
                                       const std::vector<std::vector<std::size_t>>& facets);
  /// Takes all faces; throws unless the list is closed under taking faces.
  static SimplicialComplex from_faces(std::size_t num_vertices,
                                      std::vector<std::vector<std::size_t>> faces);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
  /// -1 for the empty complex.
  int dimension() const;
  std::vector<std::vector<std::size_t>> facets() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::vector<std::size_t>> faces_;
};

/// Simplices are the nonempty chains of P with at most max_dim + 1 elements.
SimplicialComplex order_complex(const FinitePoset& P,
                                std::size_t max_dim = std::numeric_limits<std::size_t>::max());

/// Number of faces in each dimension 0..dim.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& K);
std::int64_t euler_characteristic(const SimplicialComplex& K);
std::int64_t euler_characteristic(const std::vector<std::uint64_t>& f);

/// The poset of cells ([χ], I) ordered by closure; the open stars of the
/// cells cover the space and their nerve is the order complex of this poset.
FinitePoset good_cover_nerve_data(const OrientedCellPoset& cells);

}  // namespace mgl
