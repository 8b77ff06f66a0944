#include "mgl/complexes.hpp"

#include <algorithm>
#include <set>

namespace mgl {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels)
    : leq_(std::move(leq)), labels_(std::move(labels)) {
  const std::size_t n = leq_.size();
  if (!labels_.empty() && labels_.size() != n) throw Error("poset labels do not match its size");
  for (const auto& row : leq_) {
    if (row.size() != n) throw Error("poset relation is not a square matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw Error("poset relation is not reflexive at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw Error("poset relation is not antisymmetric at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[j][k] && !leq_[i][k]) {
          throw Error("poset relation is not transitive at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

FinitePoset FinitePoset::subposet(const std::vector<std::size_t>& elements) const {
  std::vector<std::vector<bool>> sub(elements.size(), std::vector<bool>(elements.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) sub[i][j] = leq_.at(elements[i]).at(elements[j]);
    if (!labels_.empty()) labels.push_back(labels_[elements[i]]);
  }
  return FinitePoset(std::move(sub), std::move(labels));
}

std::size_t FinitePoset::maximum() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < size() && top; ++j) top = leq_[j][i];
    if (top) return i;
  }
  return size();
}

FinitePoset poset_of(const MacPPoset& macp) {
  std::vector<std::string> labels;
  for (const auto& om : macp.elements) {
    std::string s;
    for (const auto& [b, v] : om.representative().entries()) {
      s += format_subset(b) + (v > 0 ? "+" : "-") + " ";
    }
    if (!s.empty()) s.pop_back();
    labels.push_back(s);
  }
  return FinitePoset(macp.leq, std::move(labels));
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices,
                                                 const std::vector<std::vector<std::size_t>>& facets) {
  std::set<std::vector<std::size_t>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error("facet repeats a vertex");
    if (f.empty()) continue;
    if (f.back() >= num_vertices) throw Error("facet vertex out of range");
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) face.push_back(f[i]);
      }
      faces.insert(std::move(face));
    }
  }
  return from_faces(num_vertices, {faces.begin(), faces.end()});
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t num_vertices,
                                                std::vector<std::vector<std::size_t>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw Error("faces must be nonempty");
    if (f.back() >= num_vertices) throw Error("face vertex out of range");
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::set<std::vector<std::size_t>> index(faces.begin(), faces.end());
  for (const auto& f : faces) {
    if (f.size() < 2) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<std::size_t> g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      if (!index.count(g)) throw Error("face list is not closed under taking faces");
    }
  }
  SimplicialComplex K;
  K.num_vertices_ = num_vertices;
  K.faces_ = std::move(faces);
  return K;
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : static_cast<int>(faces_.back().size()) - 1;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::facets() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : faces_) {
    bool maximal = std::none_of(faces_.begin(), faces_.end(), [&](const auto& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

SimplicialComplex order_complex(const FinitePoset& P, std::size_t max_dim) {
  const std::size_t n = P.size();
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> chain;
  // Chains are grown upward from their least element.
  auto grow = [&](auto&& self, std::size_t top) -> void {
    std::vector<std::size_t> sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    faces.push_back(std::move(sorted));
    if (chain.size() > max_dim) return;
    for (std::size_t next = 0; next < n; ++next) {
      if (!P.less(top, next)) continue;
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    chain = {v};
    grow(grow, v);
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& K) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(K.dimension() + 1), 0);
  for (const auto& face : K.faces()) ++f[face.size() - 1];
  return f;
}

std::int64_t euler_characteristic(const std::vector<std::uint64_t>& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
  }
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& K) {
  return euler_characteristic(f_vector(K));
}

FinitePoset good_cover_nerve_data(const OrientedCellPoset& cells) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cells.cells.size(); ++i) {
    labels.push_back("cell " + std::to_string(i) + " over class " +
                     std::to_string(cells.class_index[i]));
  }
  return FinitePoset(cells.leq, std::move(labels));
}

}  // namespace mgl
