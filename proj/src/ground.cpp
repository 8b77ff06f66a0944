#include "mgl/ground.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mgl {

GroundSet::GroundSet(std::size_t n) : elements_(n) {
  std::iota(elements_.begin(), elements_.end(), Element{0});
}

GroundSet GroundSet::from_elements(std::vector<Element> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0) throw Error("ground-set elements must be nonnegative");
    if (i > 0 && elements[i - 1] >= elements[i]) {
      throw Error("ground-set elements must be distinct and ascending");
    }
  }
  GroundSet out;
  out.elements_ = std::move(elements);
  return out;
}

GroundSet GroundSet::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != elements_.size()) {
    throw Error("label count does not match ground-set size");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error("duplicate ground-set label");
  GroundSet out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool GroundSet::contains(Element e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool GroundSet::contains(std::span<const Element> subset) const {
  return std::all_of(subset.begin(), subset.end(), [&](Element e) { return contains(e); });
}

std::size_t GroundSet::position(Element e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) {
    throw Error("element " + std::to_string(e) + " is outside the ground set");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool GroundSet::is_canonical() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

int sort_with_sign(std::vector<Element>& tuple) {
  int sign = 1;
  // insertion sort; tuples are short
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] == tuple[i]) return 0;
  }
  return sign;
}

int perm_sign(std::span<const Element> sequence) {
  std::vector<Element> copy(sequence.begin(), sequence.end());
  int s = sort_with_sign(copy);
  if (s == 0) throw Error("not a permutation input");
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

std::vector<Subset> enumerate_subsets(const GroundSet& ground, int d) {
  const auto& el = ground.elements();
  if (d < 0 || static_cast<std::size_t>(d) > el.size()) {
    throw Error("rank " + std::to_string(d) + " out of range for ground set of size " +
                std::to_string(el.size()));
  }
  std::vector<Subset> out;
  out.reserve(binomial(el.size(), static_cast<std::uint64_t>(d)));
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t n = el.size();
  const std::size_t k = idx.size();
  while (true) {
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = el[idx[i]];
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ExchangePair> exchange_pairs(const GroundSet& ground, int d) {
  if (d < 1 || static_cast<std::size_t>(d) + 1 > ground.size()) {
    throw Error("exchange pairs need 1 <= d and d + 1 <= |E| (d = " + std::to_string(d) +
                ", |E| = " + std::to_string(ground.size()) + ")");
  }
  auto xs = enumerate_subsets(ground, d + 1);
  auto ys = enumerate_subsets(ground, d - 1);
  std::vector<ExchangePair> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) out.push_back({x, y});
  }
  return out;
}

std::vector<ExchangePair> relevant_exchange_pairs(const std::vector<Subset>& support, int d) {
  if (d < 1) return {};
  // (X, Y) = (b1 + i, b2 - i) with i in b2 and not in b1, grouped by i.
  std::map<Element, std::vector<const Subset*>> containing;
  for (const auto& b : support) {
    for (Element i : b) containing[i].push_back(&b);
  }
  std::vector<ExchangePair> pairs;
  for (const auto& [i, with_i] : containing) {
    std::vector<Subset> ys;
    ys.reserve(with_i.size());
    for (const Subset* b2 : with_i) ys.push_back(without_element(*b2, i));
    for (const auto& b1 : support) {
      if (std::binary_search(b1.begin(), b1.end(), i)) continue;
      Subset X = with_element(b1, i);
      for (const auto& Y : ys) pairs.push_back({X, Y});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset with_element(const Subset& s, Element e) {
  Subset out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), e), e);
  return out;
}

Subset without_element(const Subset& s, Element e) {
  Subset out = s;
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it != out.end() && *it == e) out.erase(it);
  return out;
}

bool is_subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string format_subset(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

BasisIndex::BasisIndex(GroundSet ground, int d)
    : ground_(std::move(ground)), rank_(d), bases_(enumerate_subsets(ground_, d)) {
  const std::size_t n = ground_.size();
  binom_.assign(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k <= n + 1; ++k) binom_[i][k] = binomial(i, k);
  }
}

std::size_t BasisIndex::index_of(const Subset& basis) const {
  if (basis.size() != static_cast<std::size_t>(rank_)) {
    throw Error("subset " + format_subset(basis) + " has the wrong size");
  }
  // rank of a combination in lexicographic order
  const std::size_t n = ground_.size();
  const std::size_t k = basis.size();
  std::uint64_t idx = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pos = ground_.position(basis[i]);
    if (i > 0 && pos <= prev) throw Error("subset " + format_subset(basis) + " is not sorted");
    for (std::size_t p = (i == 0 ? 0 : prev + 1); p < pos; ++p) {
      idx += binom_[n - p - 1][k - i - 1];
    }
    prev = pos;
  }
  return static_cast<std::size_t>(idx);
}

}  // namespace mgl
