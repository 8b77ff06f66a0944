#include "mgl/oriented.hpp"

#include <algorithm>
#include <set>

namespace mgl {

namespace {

void check_signs(const SignMap& chi) {
  if (chi.is_zero()) throw Error("zero sign vector is not a chirotope");
  for (const auto& [b, s] : chi.entries()) {
    if (s != 1 && s != -1) {
      throw Error("sign at " + format_subset(b) + " is not in {-1, 0, +1}");
    }
  }
}

bool mixed_or_zero(const std::vector<int>& values) {
  bool plus = false;
  bool minus = false;
  bool nonzero = false;
  for (int v : values) {
    nonzero = nonzero || v != 0;
    plus = plus || v > 0;
    minus = minus || v < 0;
  }
  return !nonzero || (plus && minus);
}

// Sign coefficient and basis indices of the k-th term at a sorted pair:
// value = coef * s[a] * s[b].  coef is 0 when x_k ∈ Y.
struct DenseTerm {
  int coef;
  std::size_t a;
  std::size_t b;
};

std::vector<std::vector<DenseTerm>> dense_terms(const BasisIndex& index) {
  std::vector<std::vector<DenseTerm>> out;
  const int d = index.rank();
  if (d < 1 || static_cast<std::size_t>(d) + 1 > index.ground().size()) return out;
  for (const auto& pair : exchange_pairs(index.ground(), d)) {
    std::vector<DenseTerm> terms;
    for (std::size_t k = 0; k < pair.X.size(); ++k) {
      std::vector<Element> tuple{pair.X[k]};
      tuple.insert(tuple.end(), pair.Y.begin(), pair.Y.end());
      int s = sort_with_sign(tuple);
      if (s == 0) continue;
      int coef = ((k + 1) % 2 == 0 ? 1 : -1) * s;
      terms.push_back({coef, index.index_of(without_element(pair.X, pair.X[k])), index.index_of(tuple)});
    }
    out.push_back(std::move(terms));
  }
  return out;
}

}  // namespace

std::vector<int> three_term_values(const SignMap& chi, std::span<const Element> X,
                                   std::span<const Element> Y) {
  const std::size_t d = static_cast<std::size_t>(chi.rank());
  if (X.size() != d + 1 || Y.size() + 1 != d) {
    throw Error("three-term values need |X| = d + 1 and |Y| = d - 1");
  }
  std::vector<int> out;
  out.reserve(d + 1);
  for (std::size_t k = 0; k < X.size(); ++k) {
    std::vector<Element> left;
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (j != k) left.push_back(X[j]);
    }
    std::vector<Element> right{X[k]};
    right.insert(right.end(), Y.begin(), Y.end());
    int sign = (k + 1) % 2 == 0 ? 1 : -1;  // (-1)^k with k counted from 1
    out.push_back(sign * chi.eval(left) * chi.eval(right));
  }
  return out;
}

std::optional<ExchangePair> find_chirotope_violation(const SignMap& chi) {
  check_signs(chi);
  // A pair with no nonzero term passes; only the relevant pairs matter.
  auto support = chi.support();
  for (const auto& pair : relevant_exchange_pairs(support, chi.rank())) {
    if (!mixed_or_zero(three_term_values(chi, pair.X, pair.Y))) return pair;
  }
  return std::nullopt;
}

bool is_chirotope(const SignMap& chi) { return !find_chirotope_violation(chi); }

SignMap negated(const SignMap& chi) {
  SignMap out(chi.ground(), chi.rank());
  for (const auto& [b, s] : chi.entries()) out.set(b, -s);
  return out;
}

OrientedMatroidClass::OrientedMatroidClass(const SignMap& chi) {
  if (auto bad = find_chirotope_violation(chi)) {
    throw Error("not a chirotope: the three-term list at (X,Y)=(" + format_subset(bad->X) + "," +
                format_subset(bad->Y) + ") is nonzero without both signs");
  }
  rep_ = chi.entries().begin()->second > 0 ? chi : negated(chi);
}

OrientedMatroidClass om_class(const SignMap& chi) { return OrientedMatroidClass(chi); }

bool chirotope_specializes(const SignMap& chi, const SignMap& tau) {
  if (chi.rank() != tau.rank() || !(chi.ground() == tau.ground())) {
    throw Error("specialization compares chirotopes of different rank or ground set");
  }
  for (const auto& [b, s] : tau.entries()) {
    if (chi[b] != s) return false;
  }
  return true;
}

bool om_specializes(const OrientedMatroidClass& a, const OrientedMatroidClass& b) {
  const SignMap& chi = a.representative();
  const SignMap& tau = b.representative();
  return chirotope_specializes(chi, tau) || chirotope_specializes(chi, negated(tau));
}

Matroid underlying_matroid_of_chirotope(const SignMap& chi) {
  check_signs(chi);
  auto support = chi.support();
  MatroidCandidate cand{chi.ground(), chi.rank(), {support.begin(), support.end()}};
  if (!is_matroid(cand)) throw Error("|chi| is not a matroid, so chi is not a chirotope");
  return Matroid(std::move(cand));
}

Compatibility classify_compatibility(const InitialDatum& I, const SignMap& chi) {
  Matroid m = underlying_matroid_of_chirotope(chi);
  if (I.rank() != chi.rank() || I.pairs() != all_exchange_pairs(chi.ground(), chi.rank())) {
    throw Error("initial datum and chirotope have different shapes");
  }
  if (!lp_feasible_interior(cell_system({m, I}))) return Compatibility::IncompatibleWithMatroid;
  for (std::size_t k = 0; k < I.size(); ++k) {
    const auto& pair = I.pairs()[k];
    auto values = three_term_values(chi, pair.X, pair.Y);
    bool plus = false;
    bool minus = false;
    bool nonzero = false;
    for (std::size_t j = 0; j < pair.X.size(); ++j) {
      nonzero = nonzero || values[j] != 0;
      if (!std::binary_search(I.at(k).begin(), I.at(k).end(), pair.X[j])) continue;
      plus = plus || values[j] > 0;
      minus = minus || values[j] < 0;
    }
    if (nonzero && !(plus && minus)) return Compatibility::SignConditionFails;
  }
  return Compatibility::Compatible;
}

bool initial_datum_compatible_with_chirotope(const InitialDatum& I, const SignMap& chi) {
  Compatibility c = classify_compatibility(I, chi);
  if (c == Compatibility::IncompatibleWithMatroid) {
    throw Error("initial datum is not compatible with the underlying matroid |chi|");
  }
  return c == Compatibility::Compatible;
}

InitialDatum i_max(const SignMap& chi) {
  check_signs(chi);
  InitialDatum out(chi.ground(), chi.rank());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& pair = out.pairs()[k];
    Subset chosen;
    for (Element x : out.at(k)) {
      if (chi[without_element(pair.X, x)] != 0 && chi[with_element(pair.Y, x)] != 0) {
        chosen.push_back(x);
      }
    }
    if (!chosen.empty()) out.set(k, std::move(chosen));
  }
  return out;
}

std::vector<int> aligned_signs(const SignMap& chi) {
  BasisIndex index(chi.ground(), chi.rank());
  std::vector<int> out(index.size(), 0);
  for (const auto& [b, s] : chi.entries()) out[index.index_of(b)] = s;
  return out;
}

SignMap signs_from_aligned(const GroundSet& ground, int rank, const std::vector<int>& values) {
  BasisIndex index(ground, rank);
  if (values.size() != index.size()) {
    throw Error("expected " + std::to_string(index.size()) + " signs, got " +
                std::to_string(values.size()));
  }
  SignMap out(ground, rank);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < -1 || values[k] > 1) throw Error("sign values must be -1, 0 or 1");
    out.set(index.basis(k), values[k]);
  }
  return out;
}

class MacPBuilder {
 public:
  static OrientedMatroidClass make(SignMap rep) {
    return OrientedMatroidClass(OrientedMatroidClass::Unchecked{}, std::move(rep));
  }
};

MacPPoset enumerate_oriented_matroids(int d, int n, std::uint64_t max_bases) {
  if (n < 0 || d < 0 || d > n) throw Error("rank out of range");
  GroundSet ground(static_cast<std::size_t>(n));
  const std::uint64_t k = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
  if (k > max_bases) {
    throw GuardError("enumeration guard exceeded: C(" + std::to_string(n) + "," + std::to_string(d) +
                ") = " + std::to_string(k) + " > " + std::to_string(max_bases) +
                " for the 3^k sign scan (raise the cap with --guard-override)");
  }
  if (k > 39) throw Error("sign scan over more than 39 bases is not supported");
  BasisIndex index(ground, d);
  auto table = dense_terms(index);

  MacPPoset poset;
  std::vector<int> s(k, 0);
  // Base-3 counter over digits {0, +1, -1}; keep vectors whose first nonzero is +1.
  while (true) {
    std::size_t pos = k;
    while (pos > 0) {
      int& digit = s[pos - 1];
      digit = digit == 0 ? 1 : (digit == 1 ? -1 : 0);
      if (digit != 0) break;
      --pos;
    }
    if (pos == 0) break;
    auto first = std::find_if(s.begin(), s.end(), [](int v) { return v != 0; });
    if (*first != 1) continue;
    bool ok = true;
    for (const auto& terms : table) {
      bool plus = false;
      bool minus = false;
      for (const auto& t : terms) {
        int v = t.coef * s[t.a] * s[t.b];
        plus = plus || v > 0;
        minus = minus || v < 0;
      }
      if (plus != minus) {
        ok = false;
        break;
      }
    }
    if (ok) poset.elements.push_back(MacPBuilder::make(signs_from_aligned(ground, d, s)));
  }
  const std::size_t m = poset.elements.size();
  poset.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      poset.leq[i][j] = om_specializes(poset.elements[i], poset.elements[j]);
    }
  }
  return poset;
}

}  // namespace mgl
