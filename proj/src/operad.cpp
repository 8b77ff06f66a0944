#include "mgl/operad.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mgl/orval.hpp"

namespace mgl {

namespace partition {

Element nth_prime(std::size_t i) {
  if (i == 0) throw Error("prime index is 1-based");
  static std::vector<Element> primes{2};
  for (Element c = primes.back() + 1; primes.size() < i; ++c) {
    bool prime = true;
    for (Element p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes[i - 1];
}

std::size_t piece_of(Element x) {
  if (x < 0) throw Error("partition pieces cover the nonnegative integers only");
  if (x < 2) return 0;
  Element p = x;
  for (Element f = 2; f * f <= x; ++f) {
    if (x % f == 0) {
      p = f;
      break;
    }
  }
  Element y = x;
  while (y % p == 0) y /= p;
  if (y != 1) return 0;
  std::size_t i = 1;
  while (nth_prime(i) != p) ++i;
  return i;
}

std::vector<Element> first_elements(std::size_t piece, std::size_t m) {
  std::vector<Element> out;
  if (piece == 0) {
    for (Element x = 0; out.size() < m; ++x) {
      if (piece_of(x) == 0) out.push_back(x);
    }
    return out;
  }
  const Element p = nth_prime(piece);
  Element v = p;
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back(v);
    if (k + 1 < m) {
      if (v > std::numeric_limits<Element>::max() / p) {
        throw Error("window exhausted: piece P_" + std::to_string(piece) + " has fewer than " +
                    std::to_string(m) + " elements below 2^63");
      }
      v *= p;
    }
  }
  return out;
}

std::vector<Element> elements_below(std::size_t piece, Element bound) {
  std::vector<Element> out;
  if (piece == 0) {
    for (Element x = 0; x < bound; ++x) {
      if (piece_of(x) == 0) out.push_back(x);
    }
    return out;
  }
  const Element p = nth_prime(piece);
  for (Element v = p; v < bound; v *= p) {
    out.push_back(v);
    if (v > bound / p) break;
  }
  return out;
}

}  // namespace partition

InjectionVertex InjectionVertex::make_unit() {
  InjectionVertex v;
  v.unit = true;
  v.arity = 1;
  v.window = kUnboundedWindow;
  return v;
}

InjectionVertex InjectionVertex::make(std::size_t arity, std::size_t window,
                                      std::vector<Element> images) {
  if (window == kUnboundedWindow) throw Error("an explicit vertex needs a finite window");
  if (images.size() != arity * window) {
    throw Error("vertex needs " + std::to_string(arity * window) + " images (arity " +
                std::to_string(arity) + ", window " + std::to_string(window) + "), got " +
                std::to_string(images.size()));
  }
  InjectionVertex v;
  v.arity = arity;
  v.window = window;
  v.images = std::move(images);
  return v;
}

Element InjectionVertex::image(std::size_t a, std::size_t m) const {
  if (a >= arity) throw Error("vertex evaluated outside its domain");
  if (unit) return static_cast<Element>(m);
  if (m >= window) {
    throw Error("window exhausted: vertex evaluated at m = " + std::to_string(m) +
                ", needs window size >= " + std::to_string(m + 1));
  }
  return images[a * window + m];
}

std::vector<std::size_t> InjectionVertex::pieces() const {
  std::set<std::size_t> out;
  for (Element x : images) out.insert(partition::piece_of(x));
  return {out.begin(), out.end()};
}

void InjectionVertex::validate(bool single_piece) const {
  if (unit) return;
  std::vector<Element> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) throw Error("vertex images must be nonnegative");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("vertex is not injective");
  }
  if (single_piece && arity >= 2 && pieces().size() > 1) {
    throw Error("vertex images must lie in a single piece of the partition when |A| >= 2");
  }
}

Injection InjectionVertex::as_injection() const {
  if (unit) throw Error("the unit vertex has no finite window");
  Injection out;
  for (std::size_t i = 0; i < images.size(); ++i) out[static_cast<Element>(i)] = images[i];
  return out;
}

namespace {

void check_same_domain(const std::vector<InjectionVertex>& vertices) {
  for (const auto& v : vertices) {
    if (v.arity != vertices.front().arity || v.window != vertices.front().window) {
      throw Error("vertices do not share a domain");
    }
  }
}

}  // namespace

bool is_simplex(const std::vector<InjectionVertex>& vertices) {
  if (vertices.empty()) return true;
  check_same_domain(vertices);
  if (vertices.front().unit) return vertices.size() == 1;
  std::set<Element> seen;
  for (const auto& v : vertices) {
    for (Element x : v.images) {
      if (!seen.insert(x).second) return false;
    }
  }
  return true;
}

bool is_consistent_family(const std::vector<InjectionVertex>& vertices) {
  if (vertices.empty()) return true;
  check_same_domain(vertices);
  if (vertices.front().unit) return vertices.size() == 1;
  std::map<Element, std::size_t> preimage;
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < v.images.size(); ++i) {
      auto [it, fresh] = preimage.try_emplace(v.images[i], i);
      if (!fresh && it->second != i) return false;
    }
  }
  return true;
}

InjectionVertex cone_vertex(const std::vector<InjectionVertex>& K, std::size_t arity,
                            std::size_t window) {
  std::size_t top = 0;
  for (const auto& v : K) {
    if (v.unit) throw Error("cone vertex needs explicit vertices (the unit meets every piece)");
    for (std::size_t p : v.pieces()) top = std::max(top, p);
  }
  return InjectionVertex::make(arity, window, partition::first_elements(top + 1, arity * window));
}

OperadPoint OperadPoint::unit() { return vertex(InjectionVertex::make_unit()); }

OperadPoint OperadPoint::empty() { return vertex(InjectionVertex::make(0, 0, {})); }

OperadPoint OperadPoint::vertex(InjectionVertex v, Check check) {
  return combination({{Rational(1), std::move(v)}}, check);
}

OperadPoint OperadPoint::combination(std::vector<WeightedVertex> terms, Check check) {
  if (terms.empty()) throw Error("a convex combination needs at least one vertex");
  Rational total = 0;
  for (const auto& [w, v] : terms) {
    if (w <= 0) throw Error("convex combination weights must be positive");
    total += w;
  }
  if (total != 1) throw Error("convex combination weights must sum to 1 (got " + total.get_str() + ")");
  std::sort(terms.begin(), terms.end(),
            [](const WeightedVertex& a, const WeightedVertex& b) { return a.second < b.second; });
  OperadPoint p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().second == t.second) {
      p.terms_.back().first += t.first;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  auto verts = p.vertices();
  check_same_domain(verts);
  for (const auto& v : verts) v.validate(check == Check::Simplex);
  if (check == Check::Simplex && !is_simplex(verts)) {
    throw Error("vertices do not span a simplex: their images are not pairwise disjoint");
  }
  if (check == Check::Consistent && !is_consistent_family(verts)) {
    throw Error("vertices are not a consistent family: some value has two preimages");
  }
  p.arity_ = verts.front().arity;
  p.window_ = verts.front().window;
  return p;
}

std::vector<InjectionVertex> OperadPoint::vertices() const {
  std::vector<InjectionVertex> out;
  for (const auto& [w, v] : terms_) out.push_back(v);
  return out;
}

std::string OperadPoint::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const auto& [w, v] = terms_[i];
    os << w.get_str() << "*";
    if (v.unit) {
      os << "unit";
      continue;
    }
    os << "[";
    for (std::size_t a = 0; a < v.arity; ++a) {
      if (a) os << "|";
      for (std::size_t m = 0; m < v.window; ++m) os << (m ? "," : "") << v.image(a, m);
    }
    os << "]";
  }
  return os.str();
}

OperadPoint restrict_window(const OperadPoint& p, std::size_t window) {
  if (window >= p.window()) return p;
  std::vector<WeightedVertex> terms;
  for (const auto& [w, v] : p.terms()) {
    std::vector<Element> images;
    for (std::size_t a = 0; a < v.arity; ++a) {
      for (std::size_t m = 0; m < window; ++m) images.push_back(v.image(a, m));
    }
    terms.emplace_back(w, InjectionVertex::make(v.arity, window, std::move(images)));
  }
  return OperadPoint::combination(std::move(terms), OperadPoint::Check::Consistent);
}

OperadPoint operad_compose(const std::vector<std::size_t>& gamma, const OperadPoint& pA,
                           const std::vector<OperadPoint>& fibres) {
  const std::size_t nA = pA.arity();
  if (fibres.size() != nA) throw Error("composition needs one fibre point per element of A");
  std::vector<std::vector<std::size_t>> fibre_of(nA);
  std::vector<std::size_t> pos(gamma.size());
  for (std::size_t b = 0; b < gamma.size(); ++b) {
    if (gamma[b] >= nA) throw Error("map value " + std::to_string(gamma[b]) + " is outside A");
    pos[b] = fibre_of[gamma[b]].size();
    fibre_of[gamma[b]].push_back(b);
  }
  std::size_t window = kUnboundedWindow;
  for (std::size_t a = 0; a < nA; ++a) {
    if (fibres[a].arity() != fibre_of[a].size()) {
      throw Error("fibre point over " + std::to_string(a) + " has arity " +
                  std::to_string(fibres[a].arity()) + ", the fibre has " +
                  std::to_string(fibre_of[a].size()) + " elements");
    }
    if (fibre_of[a].empty()) continue;
    window = std::min(window, fibres[a].is_unit() ? pA.window() : fibres[a].window());
  }
  if (gamma.empty()) window = 0;
  if (window == kUnboundedWindow) return OperadPoint::unit();

  // Odometer over (term of pA, term of each fibre).
  std::vector<std::size_t> index(nA + 1, 0);
  std::vector<WeightedVertex> out;
  while (true) {
    const auto& [wA, alpha] = pA.terms()[index[0]];
    Rational weight = wA;
    for (std::size_t a = 0; a < nA; ++a) weight *= fibres[a].terms()[index[a + 1]].first;
    std::vector<Element> images(gamma.size() * window);
    for (std::size_t b = 0; b < gamma.size(); ++b) {
      const std::size_t a = gamma[b];
      const InjectionVertex& beta = fibres[a].terms()[index[a + 1]].second;
      for (std::size_t m = 0; m < window; ++m) {
        Element x = beta.image(pos[b], m);
        if (!alpha.unit && static_cast<std::size_t>(x) >= alpha.window) {
          throw Error("window exhausted: fibre value " + std::to_string(x) +
                      " lies outside the outer window, needs window size >= " +
                      std::to_string(x + 1));
        }
        images[b * window + m] = alpha.image(a, static_cast<std::size_t>(x));
      }
    }
    out.emplace_back(weight, InjectionVertex::make(gamma.size(), window, std::move(images)));

    std::size_t k = 0;
    for (; k <= nA; ++k) {
      const std::size_t size = k == 0 ? pA.terms().size() : fibres[k - 1].terms().size();
      if (++index[k] < size) break;
      index[k] = 0;
    }
    if (k > nA) break;
  }
  return OperadPoint::combination(std::move(out), OperadPoint::Check::Consistent);
}

namespace {

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> inv(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sigma.size() || inv[sigma[i]] != sigma.size()) {
      throw Error("not a permutation of {0.." + std::to_string(sigma.size()) + "-1}");
    }
    inv[sigma[i]] = i;
  }
  return inv;
}

}  // namespace

InjectionVertex permute(const InjectionVertex& v, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != v.arity) throw Error("permutation size does not match the arity");
  auto inv = inverse_permutation(sigma);
  if (v.unit) return v;
  std::vector<Element> images(v.images.size());
  for (std::size_t i = 0; i < v.arity; ++i) {
    for (std::size_t m = 0; m < v.window; ++m) images[i * v.window + m] = v.image(inv[i], m);
  }
  return InjectionVertex::make(v.arity, v.window, std::move(images));
}

OperadPoint permute(const OperadPoint& p, const std::vector<std::size_t>& sigma) {
  std::vector<WeightedVertex> terms;
  for (const auto& [w, v] : p.terms()) terms.emplace_back(w, permute(v, sigma));
  return OperadPoint::combination(std::move(terms), OperadPoint::Check::Consistent);
}

OrientedTropicalVector operad_act(const OperadPoint& p,
                                  const std::vector<OrientedTropicalVector>& inputs) {
  if (inputs.size() != p.arity()) {
    throw Error("the action needs " + std::to_string(p.arity()) + " inputs, got " +
                std::to_string(inputs.size()));
  }
  if (p.is_unit()) return inputs[0];
  OrientedTropicalVector sum = direct_sum_blocks(inputs, p.window());
  std::vector<Injection> family;
  std::vector<Rational> t;
  for (const auto& [w, v] : p.terms()) {
    family.push_back(v.as_injection());
    t.push_back(w);
  }
  return slide_consistent(sum, family, t);
}

namespace {

std::vector<InjectionVertex> catalogue_vertices(std::size_t arity, std::size_t window,
                                                Element bound, std::size_t limit) {
  std::vector<InjectionVertex> out;
  const std::size_t chunk = arity * window;
  if (chunk == 0) return out;
  for (std::size_t piece = 0; out.size() < limit; ++piece) {
    if (piece >= 1 && partition::nth_prime(piece) >= bound) break;
    auto pool = partition::elements_below(piece, bound);
    for (std::size_t start = 0; start + chunk <= pool.size() && out.size() < limit; start += chunk) {
      out.push_back(InjectionVertex::make(
          arity, window, std::vector<Element>(pool.begin() + start, pool.begin() + start + chunk)));
    }
  }
  return out;
}

}  // namespace

std::vector<OperadPoint> catalogue_points(std::size_t arity, std::size_t window,
                                          Element value_bound) {
  if (arity == 0) return {OperadPoint::empty()};
  std::vector<OperadPoint> out;
  if (arity == 1) out.push_back(OperadPoint::unit());
  auto v = catalogue_vertices(arity, window, value_bound, 3);
  const Rational half(1, 2), third(1, 3), two_thirds(2, 3);
  for (std::size_t i = 0; i < v.size() && i < 2; ++i) out.push_back(OperadPoint::vertex(v[i]));
  if (v.size() >= 2) {
    out.push_back(OperadPoint::combination({{half, v[0]}, {half, v[1]}}));
    out.push_back(OperadPoint::combination({{third, v[0]}, {two_thirds, v[1]}}));
  }
  if (v.size() >= 3) {
    out.push_back(OperadPoint::combination({{third, v[0]}, {third, v[1]}, {third, v[2]}}));
  }
  return out;
}

namespace {

// Every map {0..n-1} → {0..k-1}.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++f[i] < k) break;
      f[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::size_t> fibre_sizes(const std::vector<std::size_t>& f, std::size_t k) {
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t x : f) ++sizes[x];
  return sizes;
}

std::size_t vertex_count(std::size_t arity, std::size_t window, Element bound) {
  return catalogue_vertices(arity, window, bound, 2).size();
}

// Least w ≤ max_window such that `want` vertices of each arity with the
// given window fit below w.
std::optional<std::size_t> least_bound(const std::vector<std::size_t>& arities, std::size_t window,
                                       std::size_t max_window, std::size_t want) {
  for (std::size_t w = 1; w <= max_window; ++w) {
    bool ok = std::all_of(arities.begin(), arities.end(), [&](std::size_t k) {
      return k == 0 || vertex_count(k, window, static_cast<Element>(w)) >= want;
    });
    if (ok) return w;
  }
  return std::nullopt;
}

// Two vertices per arity where possible, otherwise one.
std::optional<std::size_t> fitting_bound(const std::vector<std::size_t>& arities, std::size_t window,
                                         std::size_t max_window) {
  if (auto w = least_bound(arities, window, max_window, 2)) return w;
  return least_bound(arities, window, max_window, 1);
}

std::string format_map(const std::vector<std::size_t>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

// Fibres of f as ascending lists and the position of each element in its fibre.
struct Fibres {
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> pos;
};

Fibres fibres_of(const std::vector<std::size_t>& f, std::size_t k) {
  Fibres out{std::vector<std::vector<std::size_t>>(k), std::vector<std::size_t>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x) {
    out.pos[x] = out.members[f[x]].size();
    out.members[f[x]].push_back(x);
  }
  return out;
}

// (δγ)* after the fibrewise composites, the right-hand side of associativity.
OperadPoint compose_inner_first(const std::vector<std::size_t>& gamma,
                                const std::vector<std::size_t>& delta, const OperadPoint& pA,
                                const std::vector<OperadPoint>& pB,
                                const std::vector<OperadPoint>& pC) {
  const std::size_t nA = pA.arity();
  Fibres B = fibres_of(delta, nA);
  std::vector<std::size_t> dg(gamma.size());
  for (std::size_t c = 0; c < gamma.size(); ++c) dg[c] = delta[gamma[c]];
  Fibres C = fibres_of(dg, nA);
  std::vector<OperadPoint> inner;
  for (std::size_t a = 0; a < nA; ++a) {
    std::vector<std::size_t> local;
    for (std::size_t c : C.members[a]) local.push_back(B.pos[gamma[c]]);
    std::vector<OperadPoint> local_fibres;
    for (std::size_t b : B.members[a]) local_fibres.push_back(pC[b]);
    inner.push_back(operad_compose(local, pB[a], local_fibres));
  }
  return operad_compose(dg, pA, inner);
}

bool same_on_common_window(const OperadPoint& x, const OperadPoint& y) {
  const std::size_t w = std::min(x.window(), y.window());
  return restrict_window(x, w) == restrict_window(y, w);
}

constexpr Element kTopValueBound = 512;

struct LawContext {
  const LawPlan& plan;
  LawReport& report;

  void fail(const std::string& what) {
    if (report.failures.size() < 50) report.failures.push_back(what);
  }

  void unit_laws() {
    for (std::size_t n = 0; n <= plan.max_set_size; ++n) {
      std::vector<std::size_t> id(n);
      std::iota(id.begin(), id.end(), 0);
      std::vector<std::size_t> to_point(n, 0);
      for (std::size_t w = 1; w <= plan.max_window; ++w) {
        for (const auto& p : catalogue_points(n, w, kTopValueBound)) {
          ++report.unit_checks;
          if (!(operad_compose(id, p, std::vector<OperadPoint>(n, OperadPoint::unit())) == p)) {
            fail("right unit law fails for " + p.str());
          }
          ++report.unit_checks;
          if (!(operad_compose(to_point, OperadPoint::unit(), {p}) == p)) {
            fail("left unit law fails for " + p.str());
          }
        }
      }
    }
  }

  void associativity(const std::vector<std::size_t>& gamma, const std::vector<std::size_t>& delta,
                     std::size_t nA, std::size_t nB, std::mt19937_64* rng) {
    if (!rng) ++report.configurations;
    auto kC = fibre_sizes(gamma, nB);
    auto kB = fibre_sizes(delta, nA);
    const std::size_t wC = 1;
    std::optional<std::size_t> wB, wA;
    for (std::size_t want_C : {2, 1}) {
      for (std::size_t want_B : {2, 1}) {
        if (wA) break;
        wB = least_bound(kC, wC, plan.max_window, want_C);
        if (wB) wA = least_bound(kB, *wB, plan.max_window, want_B);
      }
    }
    if (!wA) {
      if (!rng) ++report.window_skipped;
      return;
    }
    auto LA = catalogue_points(nA, *wA, kTopValueBound);
    if (LA.empty()) {
      if (!rng) ++report.window_skipped;
      return;
    }
    std::vector<std::vector<OperadPoint>> LB, LC;
    for (std::size_t a = 0; a < nA; ++a) LB.push_back(catalogue_points(kB[a], *wB, static_cast<Element>(*wA)));
    for (std::size_t b = 0; b < nB; ++b) LC.push_back(catalogue_points(kC[b], wC, static_cast<Element>(*wB)));

    std::size_t rounds = LA.size();
    for (const auto& l : LB) rounds = std::max(rounds, l.size());
    for (const auto& l : LC) rounds = std::max(rounds, l.size());
    if (rng) rounds = 1;
    for (std::size_t i = 0; i < rounds; ++i) {
      auto pick = [&](const std::vector<OperadPoint>& l, std::size_t shift) -> const OperadPoint& {
        return l[rng ? (*rng)() % l.size() : (i + shift) % l.size()];
      };
      const OperadPoint& pA = pick(LA, 0);
      std::vector<OperadPoint> pB, pC;
      for (std::size_t a = 0; a < nA; ++a) pB.push_back(pick(LB[a], a + 1));
      for (std::size_t b = 0; b < nB; ++b) pC.push_back(pick(LC[b], b + 2));
      ++report.associativity_checks;
      try {
        OperadPoint lhs = operad_compose(gamma, operad_compose(delta, pA, pB), pC);
        OperadPoint rhs = compose_inner_first(gamma, delta, pA, pB, pC);
        if (!same_on_common_window(lhs, rhs)) {
          fail("associativity fails for gamma=" + format_map(gamma) + " delta=" + format_map(delta) +
               ": " + lhs.str() + " vs " + rhs.str());
        }
      } catch (const Error& e) {
        fail("associativity raised for gamma=" + format_map(gamma) + " delta=" + format_map(delta) +
             ": " + e.what());
      }
    }
  }

  void equivariance(const std::vector<std::size_t>& gamma, std::size_t nA) {
    ++report.configurations;
    const std::size_t nB = gamma.size();
    auto kB = fibre_sizes(gamma, nA);
    const std::size_t wB = 1;
    auto wA = fitting_bound(kB, wB, plan.max_window);
    if (!wA) {
      ++report.window_skipped;
      return;
    }
    auto LA = catalogue_points(nA, *wA, kTopValueBound);
    if (LA.empty()) {
      ++report.window_skipped;
      return;
    }
    std::vector<std::vector<OperadPoint>> LB;
    for (std::size_t a = 0; a < nA; ++a) LB.push_back(catalogue_points(kB[a], wB, static_cast<Element>(*wA)));
    Fibres F = fibres_of(gamma, nA);

    for (const auto& sbar : all_permutations(nA)) {
      for (const auto& sigma : all_permutations(nB)) {
        bool square = true;
        for (std::size_t b = 0; b < nB; ++b) square = square && gamma[sigma[b]] == sbar[gamma[b]];
        if (!square) continue;
        auto sbar_inv = inverse_permutation(sbar);
        std::size_t rounds = LA.size();
        for (const auto& l : LB) rounds = std::max(rounds, l.size());
        for (std::size_t i = 0; i < rounds; ++i) {
          const OperadPoint& pA = LA[i % LA.size()];
          std::vector<OperadPoint> pB;
          for (std::size_t a = 0; a < nA; ++a) pB.push_back(LB[a][(i + a + 1) % LB[a].size()]);
          std::vector<OperadPoint> moved(nA);
          for (std::size_t a2 = 0; a2 < nA; ++a2) {
            const std::size_t a = sbar_inv[a2];
            std::vector<std::size_t> local(F.members[a].size());
            for (std::size_t b : F.members[a]) local[F.pos[b]] = F.pos[sigma[b]];
            moved[a2] = permute(pB[a], local);
          }
          ++report.equivariance_checks;
          try {
            OperadPoint lhs = permute(operad_compose(gamma, pA, pB), sigma);
            OperadPoint rhs = operad_compose(gamma, permute(pA, sbar), moved);
            if (!(lhs == rhs)) {
              fail("equivariance fails for gamma=" + format_map(gamma) + " sigma=" +
                   format_map(sigma) + " sigma_bar=" + format_map(sbar));
            }
          } catch (const Error& e) {
            fail("equivariance raised for gamma=" + format_map(gamma) + ": " + e.what());
          }
        }
      }
    }
  }
};

}  // namespace

LawReport check_operad_laws(const LawPlan& plan) {
  LawReport report;
  LawContext ctx{plan, report};
  ctx.unit_laws();
  const std::size_t N = plan.max_set_size;
  for (std::size_t nA = 0; nA <= N; ++nA) {
    for (std::size_t nB = 0; nB <= N; ++nB) {
      for (const auto& delta : all_maps(nB, nA)) {
        ctx.equivariance(delta, nA);
        for (std::size_t nC = 0; nC <= N; ++nC) {
          for (const auto& gamma : all_maps(nC, nB)) ctx.associativity(gamma, delta, nA, nB, nullptr);
        }
      }
    }
  }
  std::mt19937_64 rng(plan.seed);
  for (std::size_t t = 0; t < plan.random_trials; ++t) {
    const std::size_t nA = 1 + rng() % N;
    const std::size_t nB = rng() % (N + 1);
    const std::size_t nC = rng() % (N + 1);
    std::vector<std::size_t> delta(nB), gamma(nC);
    for (auto& x : delta) x = rng() % nA;
    for (auto& x : gamma) x = nB ? rng() % nB : 0;
    if (nB == 0 && nC > 0) gamma.clear();
    ctx.associativity(gamma, delta, nA, nB, &rng);
  }
  return report;
}

namespace {

SignedTropical random_coordinate(std::mt19937_64& rng) {
  const int sign = rng() % 2 ? 1 : -1;
  const long num = static_cast<long>(rng() % 7) - 3;
  const long den = 1 + static_cast<long>(rng() % 2);
  return SignedTropical(sign, TropicalValue(Rational(num, den)));
}

OrientedTropicalVector random_input(std::mt19937_64& rng, int rank, std::size_t window) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = static_cast<std::size_t>(rank) + rng() % (window - rank + 1);
    OrientedTropicalVector phi(GroundSet(n), rank);
    for (const auto& b : enumerate_subsets(phi.ground(), rank)) {
      if (rng() % 4 != 0) phi.set(b, random_coordinate(rng));
    }
    if (!phi.is_zero() && is_oriented_tropical_plucker(phi)) return phi;
  }
  throw Error("could not draw a valid input");
}

}  // namespace

ActionReport check_action_compatibility(const ActionPlan& plan) {
  ActionReport report;
  std::mt19937_64 rng(plan.seed);
  const std::size_t wB = 3;
  for (std::size_t trial = 0; trial < plan.trials; ++trial) {
    ++report.trials;
    const std::size_t nA = 1 + rng() % 2;
    const std::size_t nB = rng() % 4;
    std::vector<std::size_t> gamma(nB);
    for (auto& x : gamma) x = rng() % nA;
    std::vector<int> ranks(nB, 1);
    int total = static_cast<int>(nB);
    for (auto& d : ranks) {
      if (total < 3 && rng() % 2) {
        d = 2;
        ++total;
      }
    }
    std::vector<OrientedTropicalVector> inputs;
    for (int d : ranks) inputs.push_back(random_input(rng, d, wB));

    auto kB = fibre_sizes(gamma, nA);
    auto wA = fitting_bound(kB, wB, plan.max_window);
    const std::string where = "trial " + std::to_string(trial) + " gamma=" + format_map(gamma);
    if (!wA) {
      report.failures.push_back(where + ": no window fits");
      continue;
    }
    auto LA = catalogue_points(nA, *wA, kTopValueBound);
    if (LA.empty()) {
      report.failures.push_back(where + ": no outer point fits");
      continue;
    }
    const OperadPoint pA = LA[rng() % LA.size()];
    std::vector<OperadPoint> pB;
    for (std::size_t a = 0; a < nA; ++a) {
      auto L = catalogue_points(kB[a], wB, static_cast<Element>(*wA));
      pB.push_back(L[rng() % L.size()]);
    }
    try {
      OrientedTropicalVector lhs = operad_act(operad_compose(gamma, pA, pB), inputs);
      Fibres F = fibres_of(gamma, nA);
      std::vector<OrientedTropicalVector> inner;
      for (std::size_t a = 0; a < nA; ++a) {
        std::vector<OrientedTropicalVector> xs;
        for (std::size_t b : F.members[a]) xs.push_back(inputs[b]);
        inner.push_back(operad_act(pB[a], xs));
      }
      OrientedTropicalVector rhs = operad_act(pA, inner);
      report.coordinates_compared += lhs.entries().size();
      if (!equal_up_to_scale(lhs, rhs)) {
        report.failures.push_back(where + ": composite action differs from iterated action");
      } else if (lhs.rank() > 0 && lhs.entries().size() <= plan.validate_up_to) {
        ++report.outputs_validated;
        if (!is_oriented_tropical_plucker(lhs)) {
          report.failures.push_back(where + ": action output is not oriented tropical Plucker");
        }
      }
    } catch (const Error& e) {
      report.failures.push_back(where + ": " + e.what());
    }
  }
  return report;
}

}  // namespace mgl
