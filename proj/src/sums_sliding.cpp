#include "mgl/sums_sliding.hpp"

#include <algorithm>
#include <set>

namespace mgl {

namespace {

GroundSet union_ground(const GroundSet& a, const GroundSet& b) {
  std::vector<Element> all;
  std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                 b.elements().end(), std::back_inserter(all));
  return GroundSet::from_elements(std::move(all));
}

OrientedTropicalVector relabel_by_position(const OrientedTropicalVector& Phi, Element offset) {
  const auto& el = Phi.ground().elements();
  std::vector<Element> labels(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) labels[i] = offset + static_cast<Element>(i);
  OrientedTropicalVector out(GroundSet::from_elements(labels), Phi.rank());
  for (const auto& [b, v] : Phi.entries()) {
    Subset nb;
    for (Element e : b) nb.push_back(offset + static_cast<Element>(Phi.ground().position(e)));
    out.set(nb, v);
  }
  return out;
}

// Preimage and summed weight of every element of the union of images.
struct Fibre {
  Element preimage;
  Rational weight;
};

std::map<Element, Fibre> fibres(const std::vector<Injection>& family, const std::vector<Rational>& t) {
  std::map<Element, Fibre> out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (const auto& [x, y] : family[k]) {
      auto [it, fresh] = out.try_emplace(y, Fibre{x, t[k]});
      if (!fresh) {
        if (it->second.preimage != x) {
          throw Error("injection family is inconsistent: " + std::to_string(y) +
                      " has two preimages");
        }
        it->second.weight += t[k];
      }
    }
  }
  return out;
}

OrientedTropicalVector slide_impl(const OrientedTropicalVector& Phi, const std::vector<Injection>& family,
                                  const std::vector<Rational>& t) {
  if (family.empty()) throw Error("sliding needs at least one injection");
  if (family.size() != t.size()) throw Error("one weight per injection is required");
  check_simplex_point(t);
  std::vector<Injection> restricted;
  for (const auto& alpha : family) {
    check_injection(alpha, Phi.ground());
    Injection r;
    for (Element e : Phi.ground().elements()) r[e] = alpha.at(e);
    restricted.push_back(std::move(r));
  }
  auto fib = fibres(restricted, t);
  std::vector<Element> images;
  for (const auto& [y, f] : fib) images.push_back(y);
  GroundSet F = GroundSet::from_elements(images);
  OrientedTropicalVector out(F, Phi.rank());
  if (Phi.rank() > static_cast<int>(images.size())) return out;
  for (const auto& x : enumerate_subsets(F, Phi.rank())) {
    std::vector<Element> bar;
    Rational monomial = 1;
    for (Element e : x) {
      const Fibre& f = fib.at(e);
      bar.push_back(f.preimage);
      monomial *= f.weight;
    }
    if (monomial == 0) continue;
    SignedTropical v = Phi.eval(bar);
    if (!v.is_zero()) out.set(x, v.scaled(monomial));
  }
  return out;
}

}  // namespace

OrientedTropicalVector rank_zero_unit() {
  OrientedTropicalVector out(GroundSet(0), 0);
  out.set({}, SignedTropical(1, TropicalValue(0L)));
  return out;
}

OrientedTropicalVector direct_sum_disjoint(const OrientedTropicalVector& a,
                                           const OrientedTropicalVector& b) {
  for (Element e : a.ground().elements()) {
    if (b.ground().contains(e)) {
      throw Error("label collision in direct sum: element " + std::to_string(e) +
                  " belongs to both ground sets");
    }
  }
  OrientedTropicalVector out(union_ground(a.ground(), b.ground()), a.rank() + b.rank());
  for (const auto& [b1, v1] : a.entries()) {
    for (const auto& [b2, v2] : b.entries()) {
      std::vector<Element> tuple = b1;
      tuple.insert(tuple.end(), b2.begin(), b2.end());
      int s = sort_with_sign(tuple);
      SignedTropical v = v1 * v2;
      out.set(tuple, s > 0 ? v : -v);
    }
  }
  return out;
}

OrientedTropicalVector direct_sum(const OrientedTropicalVector& a, const OrientedTropicalVector& b) {
  return direct_sum_disjoint(relabel_by_position(a, 0),
                             relabel_by_position(b, static_cast<Element>(a.ground().size())));
}

OrientedTropicalVector direct_sum_blocks(const std::vector<OrientedTropicalVector>& inputs,
                                         std::size_t window) {
  OrientedTropicalVector out = rank_zero_unit();
  for (std::size_t a = 0; a < inputs.size(); ++a) {
    const auto& in = inputs[a];
    for (Element e : in.ground().elements()) {
      if (e >= static_cast<Element>(window)) {
        throw Error("window exhausted: input " + std::to_string(a) + " uses element " +
                    std::to_string(e) + ", needs window size >= " + std::to_string(e + 1));
      }
    }
    Injection shift;
    const Element base = static_cast<Element>(a * window);
    for (Element e : in.ground().elements()) shift[e] = base + e;
    out = direct_sum_disjoint(out, pushforward(in, shift));
  }
  return out;
}

void check_injection(const Injection& alpha, const GroundSet& domain) {
  std::set<Element> seen;
  for (Element e : domain.elements()) {
    auto it = alpha.find(e);
    if (it == alpha.end()) throw Error("injection is undefined on element " + std::to_string(e));
    if (it->second < 0) throw Error("injection values must be nonnegative");
    if (!seen.insert(it->second).second) {
      throw Error("map is not injective: value " + std::to_string(it->second) + " is hit twice");
    }
  }
}

OrientedTropicalVector pushforward(const OrientedTropicalVector& Phi, const Injection& alpha,
                                   const GroundSet& codomain) {
  check_injection(alpha, Phi.ground());
  OrientedTropicalVector out(codomain, Phi.rank());
  for (const auto& [b, v] : Phi.entries()) {
    std::vector<Element> tuple;
    for (Element e : b) tuple.push_back(alpha.at(e));
    int s = sort_with_sign(tuple);
    out.set(tuple, s > 0 ? v : -v);
  }
  return out;
}

OrientedTropicalVector pushforward(const OrientedTropicalVector& Phi, const Injection& alpha) {
  check_injection(alpha, Phi.ground());
  std::vector<Element> image;
  for (Element e : Phi.ground().elements()) image.push_back(alpha.at(e));
  std::sort(image.begin(), image.end());
  return pushforward(Phi, alpha, GroundSet::from_elements(std::move(image)));
}

void check_simplex_point(const std::vector<Rational>& t) {
  Rational total = 0;
  for (const auto& w : t) {
    if (w < 0) throw Error("simplex weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw Error("simplex weights must sum to 1 (got " + total.get_str() + ")");
}

bool is_disjoint_family(const std::vector<Injection>& family) {
  std::set<Element> seen;
  for (const auto& alpha : family) {
    for (const auto& [x, y] : alpha) {
      if (!seen.insert(y).second) return false;
    }
  }
  return true;
}

bool is_consistent_family(const std::vector<Injection>& family) {
  std::map<Element, Element> pre;
  for (const auto& alpha : family) {
    for (const auto& [x, y] : alpha) {
      auto [it, fresh] = pre.try_emplace(y, x);
      if (!fresh && it->second != x) return false;
    }
  }
  return true;
}

OrientedTropicalVector slide(const OrientedTropicalVector& Phi, const std::vector<Injection>& family,
                             const std::vector<Rational>& t) {
  if (!is_disjoint_family(family)) throw Error("injection family images are not pairwise disjoint");
  return slide_impl(Phi, family, t);
}

OrientedTropicalVector slide_consistent(const OrientedTropicalVector& Phi,
                                        const std::vector<Injection>& family,
                                        const std::vector<Rational>& t) {
  return slide_impl(Phi, family, t);
}

bool equal_up_to_scale(const OrientedTropicalVector& a, const OrientedTropicalVector& b) {
  if (a.rank() != b.rank() || a.entries().size() != b.entries().size()) return false;
  if (a.is_zero()) return true;
  std::optional<int> ratio;
  std::optional<LogRational> offset;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  for (; ia != a.entries().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    int r = ia->second.sign() * ib->second.sign();
    LogRational o = ia->second.val().finite() - ib->second.val().finite();
    if (!ratio) {
      ratio = r;
      offset = o;
    } else if (r != *ratio || !(o == *offset)) {
      return false;
    }
  }
  return true;
}

}  // namespace mgl
