#include "mgl/matroid.hpp"

#include <algorithm>

namespace mgl {

std::optional<ExchangeViolation> find_exchange_violation(const MatroidCandidate& candidate) {
  if (candidate.support.empty()) throw Error("zero vector is not a matroid");
  std::vector<Subset> support(candidate.support.begin(), candidate.support.end());
  for (const auto& b : support) {
    if (b.size() != static_cast<std::size_t>(candidate.rank) || !candidate.ground.contains(b)) {
      throw Error("basis " + format_subset(b) + " is not a rank-" +
                  std::to_string(candidate.rank) + " subset of the ground set");
    }
  }
  // A violating pair always has a nonzero term, so the relevant pairs suffice.
  for (const auto& pair : relevant_exchange_pairs(support, candidate.rank)) {
    std::optional<Element> only;
    int count = 0;
    for (Element i : set_minus(pair.X, pair.Y)) {
      if (candidate.support.count(without_element(pair.X, i)) &&
          candidate.support.count(with_element(pair.Y, i))) {
        ++count;
        only = i;
      }
    }
    if (count == 1) return ExchangeViolation{pair, *only};
  }
  return std::nullopt;
}

bool is_matroid(const MatroidCandidate& candidate) {
  return !find_exchange_violation(candidate).has_value();
}

Matroid::Matroid(MatroidCandidate candidate)
    : ground_(std::move(candidate.ground)), rank_(candidate.rank) {
  MatroidCandidate view{ground_, rank_, candidate.support};
  if (auto v = find_exchange_violation(view)) {
    throw Error("not a matroid: basis exchange fails at (X,Y)=(" + format_subset(v->pair.X) +
                "," + format_subset(v->pair.Y) + ") for i=" + std::to_string(v->i));
  }
  bases_.assign(candidate.support.begin(), candidate.support.end());
}

Matroid::Matroid(Unchecked, GroundSet ground, int rank, std::vector<Subset> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {}

bool Matroid::is_basis(const Subset& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

MatroidCandidate Matroid::candidate() const {
  return {ground_, rank_, std::set<Subset>(bases_.begin(), bases_.end())};
}

bool specializes(const Matroid& p, const Matroid& q) {
  if (p.rank() != q.rank() || !(p.ground() == q.ground())) {
    throw Error("specialization compares matroids of different rank or ground set");
  }
  return std::includes(p.bases().begin(), p.bases().end(), q.bases().begin(), q.bases().end());
}

Matroid uniform(int d, const GroundSet& ground) {
  auto all = enumerate_subsets(ground, d);
  return Matroid(MatroidCandidate{ground, d, std::set<Subset>(all.begin(), all.end())});
}

std::vector<Matroid> enumerate_matroids(int d, int n, std::uint64_t max_bases) {
  if (n < 0 || d < 0 || d > n) throw Error("rank out of range");
  GroundSet ground(static_cast<std::size_t>(n));
  const std::uint64_t k = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
  if (k > max_bases) {
    throw GuardError("enumeration guard exceeded: C(" + std::to_string(n) + "," + std::to_string(d) +
                ") = " + std::to_string(k) + " > " + std::to_string(max_bases) +
                " (raise the cap with --guard-override)");
  }
  if (k > 62) throw Error("enumeration over more than 62 bases is not supported");
  BasisIndex index(ground, d);

  // For every exchange pair, the index pairs (X - i, Y + i) over i in X \ Y.
  std::vector<std::vector<std::pair<unsigned, unsigned>>> table;
  if (d >= 1 && d + 1 <= n) {
    for (const auto& pair : exchange_pairs(ground, d)) {
      std::vector<std::pair<unsigned, unsigned>> terms;
      for (Element i : set_minus(pair.X, pair.Y)) {
        terms.emplace_back(static_cast<unsigned>(index.index_of(without_element(pair.X, i))),
                           static_cast<unsigned>(index.index_of(with_element(pair.Y, i))));
      }
      table.push_back(std::move(terms));
    }
  }

  std::vector<Matroid> out;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool ok = true;
    for (const auto& terms : table) {
      int count = 0;
      for (auto [a, b] : terms) {
        if (((mask >> a) & 1U) && ((mask >> b) & 1U)) ++count;
      }
      if (count == 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Subset> bases;
    for (std::uint64_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) bases.push_back(index.basis(i));
    }
    out.push_back(Matroid(Matroid::Unchecked{}, ground, d, std::move(bases)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mgl
