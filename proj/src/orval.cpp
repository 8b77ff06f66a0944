#include "mgl/orval.hpp"

#include <algorithm>
#include <set>

namespace mgl {

namespace {

std::string format_pair(const ExchangePair& pair) {
  return "(X,Y)=(" + format_subset(pair.X) + "," + format_subset(pair.Y) + ")";
}

}  // namespace

SplitVector split(const OrientedTropicalVector& Phi) {
  if (Phi.is_zero()) throw Error("oriented tropical vector is identically zero");
  SplitVector out{TropicalVector(Phi.ground(), Phi.rank()), SignMap(Phi.ground(), Phi.rank())};
  for (const auto& [b, v] : Phi.entries()) {
    out.phi.set(b, v.val());
    out.chi.set(b, v.sign());
  }
  return out;
}

OrientedTropicalVector from_signed_rationals(const GroundSet& ground, int rank,
                                             const std::map<Subset, Rational>& values) {
  OrientedTropicalVector out(ground, rank);
  for (const auto& [b, r] : values) out.set(b, SignedTropical::from_rational(r));
  return out;
}

bool is_compatible(const TropicalVector& phi, const SignMap& chi) {
  if (phi.rank() != chi.rank() || !(phi.ground() == chi.ground())) {
    throw Error("compatibility compares vectors of different rank or ground set");
  }
  auto support = phi.support();
  if (support != chi.support()) return false;
  for (const auto& pair : relevant_exchange_pairs(support, phi.rank())) {
    auto values = three_term_values(chi, pair.X, pair.Y);
    std::optional<TropicalValue> best;
    bool plus = false;
    bool minus = false;
    for (std::size_t k = 0; k < pair.X.size(); ++k) {
      Element x = pair.X[k];
      if (std::binary_search(pair.Y.begin(), pair.Y.end(), x)) continue;
      TropicalValue t = phi[without_element(pair.X, x)] + phi[with_element(pair.Y, x)];
      if (t.is_infinite()) continue;
      if (!best || t < *best) {
        best = t;
        plus = minus = false;
      }
      if (t == *best) {
        plus = plus || values[k] > 0;
        minus = minus || values[k] < 0;
      }
    }
    if (best && !(plus && minus)) return false;
  }
  return true;
}

std::optional<ExchangePair> find_oriented_violation(const OrientedTropicalVector& Phi) {
  if (Phi.is_zero()) throw Error("oriented tropical vector is identically zero");
  const std::size_t d = static_cast<std::size_t>(Phi.rank());
  for (const auto& pair : relevant_exchange_pairs(Phi.support(), Phi.rank())) {
    std::vector<SignedTropical> products;
    for (std::size_t k = 0; k <= d; ++k) {
      std::vector<Element> left;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j != k) left.push_back(pair.X[j]);
      }
      std::vector<Element> right{pair.X[k]};
      right.insert(right.end(), pair.Y.begin(), pair.Y.end());
      SignedTropical p = Phi.eval(left) * Phi.eval(right);
      products.push_back((k + 1) % 2 == 0 ? p : -p);
    }
    const SignedTropical* top = nullptr;
    for (const auto& p : products) {
      if (!p.is_zero() && (!top || compare_modulus(p, *top) > 0)) top = &p;
    }
    if (!top) continue;
    bool plus = false;
    bool minus = false;
    for (const auto& p : products) {
      if (p.is_zero() || compare_modulus(p, *top) != 0) continue;
      plus = plus || p.sign() > 0;
      minus = minus || p.sign() < 0;
    }
    if (!(plus && minus)) return pair;
  }
  return std::nullopt;
}

bool is_oriented_tropical_plucker(const OrientedTropicalVector& Phi) {
  return !find_oriented_violation(Phi);
}

OrientedCellId cell_of_oriented(const OrientedTropicalVector& Phi) {
  if (auto bad = find_oriented_violation(Phi)) {
    throw Error("not an oriented tropical Plucker vector: the maximum modulus occurs with one sign at " +
                format_pair(*bad));
  }
  SplitVector s = split(Phi);
  return {om_class(s.chi), initial_datum(s.phi)};
}

OrientedCellPoset oriented_cell_poset(const MacPPoset& macp) {
  OrientedCellPoset poset;
  std::map<Matroid, std::vector<CertifiedCell>> dressian;
  for (std::size_t c = 0; c < macp.elements.size(); ++c) {
    const SignMap& chi = macp.elements[c].representative();
    Matroid m = underlying_matroid_of_chirotope(chi);
    auto it = dressian.find(m);
    if (it == dressian.end()) it = dressian.emplace(m, dressian_cells_of(m)).first;
    for (const auto& cell : it->second) {
      if (is_compatible(cell.witness, chi)) {
        poset.cells.push_back({macp.elements[c], cell.id.datum});
        poset.class_index.push_back(c);
      }
    }
  }
  const std::size_t n = poset.cells.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      poset.leq[i][j] = macp.leq[poset.class_index[i]][poset.class_index[j]] &&
                        poset.cells[i].datum.is_contained_in(poset.cells[j].datum);
    }
  }
  return poset;
}

OrientedCellPoset oriented_cell_poset(int d, int n, std::uint64_t max_bases) {
  return oriented_cell_poset(enumerate_oriented_matroids(d, n, max_bases));
}

std::vector<std::size_t> project_to_macp(const OrientedCellPoset& poset, const MacPPoset& macp) {
  std::vector<std::size_t> image(poset.cells.size());
  std::vector<bool> hit(macp.elements.size(), false);
  for (std::size_t i = 0; i < poset.cells.size(); ++i) {
    auto it = std::find(macp.elements.begin(), macp.elements.end(), poset.cells[i].om);
    if (it == macp.elements.end()) throw Error("cell class is missing from the MacPhersonian");
    image[i] = static_cast<std::size_t>(it - macp.elements.begin());
    hit[image[i]] = true;
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (poset.leq[i][j] && !macp.leq[image[i]][image[j]]) {
        throw Error("projection to the MacPhersonian is not order preserving");
      }
    }
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw Error("projection to the MacPhersonian is not surjective");
  }
  return image;
}

namespace {

InitialDatum restrict_to(const InitialDatum& I, const InitialDatum& bound) {
  InitialDatum out = I;
  for (std::size_t k = 0; k < I.size(); ++k) {
    Subset s;
    std::set_intersection(I.at(k).begin(), I.at(k).end(), bound.at(k).begin(), bound.at(k).end(),
                          std::back_inserter(s));
    out.set(k, std::move(s));
  }
  return out;
}

}  // namespace

FiberReport check_fiber_finality(const OrientedCellPoset& poset, const MacPPoset& macp) {
  FiberReport report;
  std::vector<std::vector<std::size_t>> fiber(macp.elements.size());
  for (std::size_t i = 0; i < poset.cells.size(); ++i) fiber.at(poset.class_index[i]).push_back(i);

  for (std::size_t c = 0; c < macp.elements.size(); ++c) {
    ++report.fibers_checked;
    const std::string name = "class " + std::to_string(c);
    InitialDatum top = i_max(macp.elements[c].representative());
    bool found = false;
    for (std::size_t i : fiber[c]) {
      found = found || poset.cells[i].datum == top;
      if (!poset.cells[i].datum.is_contained_in(top)) {
        report.violations.push_back(name + ": fiber cell " + std::to_string(i) +
                                    " is not below ([chi], I_max)");
      }
    }
    if (!found) report.violations.push_back(name + ": ([chi], I_max) is not a cell");

    for (std::size_t i = 0; i < poset.cells.size(); ++i) {
      const std::size_t t = poset.class_index[i];
      if (!macp.leq[c][t]) continue;
      ++report.objects_checked;
      const InitialDatum& I = poset.cells[i].datum;
      const std::string where = name + " below cell " + std::to_string(i) + " (class " +
                                std::to_string(t) + ")";
      std::vector<const InitialDatum*> below;
      for (std::size_t j : fiber[c]) {
        if (poset.cells[j].datum.is_contained_in(I)) below.push_back(&poset.cells[j].datum);
      }
      const InitialDatum* final_object = nullptr;
      for (const auto* a : below) {
        bool is_max = std::all_of(below.begin(), below.end(),
                                  [&](const InitialDatum* b) { return b->is_contained_in(*a); });
        if (is_max) final_object = a;
      }
      if (!final_object) {
        report.violations.push_back(where + ": fibre category has no final object");
        continue;
      }
      if (!(*final_object == I)) {
        report.final_object_not_I.push_back(where + ": I is not compatible with chi");
      }
      if (!(*final_object == restrict_to(I, top))) {
        report.final_object_not_restriction.push_back(where + ": final object is not I restricted to I_max");
      }
    }
  }
  return report;
}

}  // namespace mgl
