// Acceptance run: one PASS/FAIL line per criterion.  With --expect-fail N
// (repeatable) the exit status is 0 exactly when the failing set equals the
// listed set; the FAIL lines are printed either way.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "convert.hpp"
#include "mgl/complexes.hpp"
#include "mgl/operad.hpp"
#include "oracles.hpp"

using namespace mgl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome c1_rank_one_classes() {
  auto macp = enumerate_oriented_matroids(1, 3);
  std::size_t vectors = 0, agree = 0;
  for (int code = 0; code < 27; ++code) {
    std::vector<int> s{code % 3 - 1, code / 3 % 3 - 1, code / 9 - 1};
    if (s == std::vector<int>{0, 0, 0}) continue;
    ++vectors;
    auto chi = signs_from_aligned(GroundSet(3), 1, s);
    // Every pair X = {a, b}: the two three-term values are χ(b)χ(a) and -χ(a)χ(b).
    bool negatives = true;
    for (const auto& X : enumerate_subsets(GroundSet(3), 2)) {
      auto v = three_term_values(chi, X, {});
      negatives = negatives && v.size() == 2 && v[0] == -v[1];
    }
    agree += negatives && is_chirotope(chi) && oracle::chirotope(convert::to_alternating(chi));
  }
  std::ostringstream os;
  os << macp.elements.size() << " classes, " << agree << "/" << vectors << " sign vectors pass";
  return {macp.elements.size() == 13 && vectors == 26 && agree == 26, os.str()};
}

std::vector<std::uint64_t> chain_counts(const std::vector<std::vector<bool>>& leq) {
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t last, std::size_t len) {
    if (out.size() < len) out.resize(len, 0);
    ++out[len - 1];
    for (std::size_t j = 0; j < leq.size(); ++j) {
      if (j != last && leq[last][j]) extend(j, len + 1);
    }
  };
  for (std::size_t i = 0; i < leq.size(); ++i) extend(i, 1);
  return out;
}

// Faces of the octahedron modulo the antipodal map: sign vectors up to ±,
// ordered by conformal restriction.
std::vector<std::vector<bool>> octahedron_quotient() {
  std::vector<std::vector<int>> classes;
  for (int code = 0; code < 27; ++code) {
    std::vector<int> v{code % 3 - 1, code / 3 % 3 - 1, code / 9 - 1};
    std::vector<int> neg{-v[0], -v[1], -v[2]};
    if (v == std::vector<int>{0, 0, 0}) continue;
    if (std::find(classes.begin(), classes.end(), neg) == classes.end()) classes.push_back(v);
  }
  auto conforms = [](const std::vector<int>& s, const std::vector<int>& t) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] != 0 && t[k] != s[k]) return false;
    }
    return true;
  };
  std::vector<std::vector<bool>> leq(classes.size(), std::vector<bool>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<int> neg{-classes[i][0], -classes[i][1], -classes[i][2]};
    for (std::size_t j = 0; j < classes.size(); ++j) {
      leq[i][j] = conforms(classes[i], classes[j]) || conforms(neg, classes[j]);
    }
  }
  return leq;
}

Outcome c2_macp_nerve() {
  auto K = order_complex(poset_of(enumerate_oriented_matroids(1, 3)));
  auto f = f_vector(K);
  auto want = chain_counts(octahedron_quotient());
  auto chi = euler_characteristic(K);
  std::ostringstream os;
  os << "f = (";
  for (std::size_t k = 0; k < f.size(); ++k) os << (k ? ", " : "") << f[k];
  os << "), chi = " << chi;
  bool ok = f == want && f == std::vector<std::uint64_t>{13, 36, 24} && chi == 1;
  return {ok, os.str()};
}

Outcome c3_uniform_cells() {
  auto cells = enumerate_dressian_cells(2, 4);
  Matroid u = uniform(2, GroundSet(4));
  int two = 0, three = 0, round_trips = 0, total = 0;
  for (const auto& c : cells) {
    if (!(c.id.matroid == u)) continue;
    ++total;
    auto v = [&](Subset b) { return c.witness[b].finite(); };
    std::vector<LogRational> s{v({0, 1}) + v({2, 3}), v({0, 2}) + v({1, 3}), v({0, 3}) + v({1, 2})};
    auto m = *std::min_element(s.begin(), s.end());
    int ties = static_cast<int>(std::count(s.begin(), s.end(), m));
    two += ties == 2;
    three += ties == 3;
    round_trips += cell_of(c.witness) == c.id && satisfies(cell_system(c.id), c.witness);
  }
  std::ostringstream os;
  os << total << " uniform cells: " << two << " maximal, " << three << " with the 3-way tie, "
     << round_trips << " round trips";
  return {total == 4 && two == 3 && three == 1 && round_trips == 4, os.str()};
}

Outcome c4_closure() {
  auto report = check_closure_relation(enumerate_dressian_cells(2, 4));
  std::ostringstream os;
  os << report.pairs_checked << " pairs, " << report.violations.size() << " violations";
  return {report.violations.empty() && report.pairs_checked == 39u * 38u, os.str()};
}

OrientedTropicalVector random_oriented(std::mt19937_64& rng, long n, long d) {
  static const std::vector<oracle::Q> pool{0, 1, -1, 2, -2, oracle::Q(1, 2), oracle::Q(-3, 2), 4};
  for (;;) {
    std::map<oracle::Tuple, oracle::Q> v;
    for (const auto& b : oracle::subsets(n, d)) v[b] = pool[static_cast<std::size_t>(oracle::draw(rng, 0, 7))];
    auto Phi = convert::from_rationals(n, d, v);
    if (!Phi.is_zero() && oracle::oriented_plucker(convert::to_alternating(Phi))) return Phi;
  }
}

Outcome c5_sliding(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int trials = 240;
  int failures = 0, vertex_trials = 0;
  for (int trial = 0; trial < trials; ++trial) {
    long d = oracle::draw(rng, 1, 2);
    auto Phi = random_oriented(rng, oracle::draw(rng, d, 4), d);
    std::size_t count = static_cast<std::size_t>(oracle::draw(rng, 1, 3));
    std::vector<Element> pool(12);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Injection> family(count);
    std::size_t next = 0;
    for (auto& alpha : family) {
      for (Element e : Phi.ground().elements()) alpha[e] = pool[next++];
    }
    std::vector<Rational> t(count, 0);
    bool vertex = trial % 4 == 0;
    if (vertex) {
      t[static_cast<std::size_t>(oracle::draw(rng, 0, static_cast<long>(count) - 1))] = 1;
    } else {
      Rational total = 0;
      for (auto& w : t) total += (w = oracle::draw(rng, 0, 5));
      if (total == 0) t[0] = total = 1;
      for (auto& w : t) w /= total;
    }
    auto out = slide(Phi, family, t);
    bool ok = is_oriented_tropical_plucker(out) && oracle::oriented_plucker(convert::to_alternating(out));
    if (vertex) {
      ++vertex_trials;
      std::size_t k = static_cast<std::size_t>(std::find(t.begin(), t.end(), Rational(1)) - t.begin());
      ok = ok && out.entries() == pushforward(Phi, family[k], out.ground()).entries();
    }
    failures += !ok;
  }
  std::ostringstream os;
  os << trials << " trials (" << vertex_trials << " at vertices), " << failures << " failures, seed " << seed;
  return {failures == 0, os.str()};
}

Outcome c6_split_coherence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const std::vector<oracle::Q> pool{0, 0, 1, -1, 2, -2, oracle::Q(1, 2), oracle::Q(-1, 2), 4, -3};
  int checked = 0, mismatches = 0, positives = 0;
  while (checked < 600) {
    long d = oracle::draw(rng, 1, 2);
    long n = oracle::draw(rng, d + 1, 4);
    std::map<oracle::Tuple, oracle::Q> v;
    for (const auto& b : oracle::subsets(n, d)) v[b] = pool[static_cast<std::size_t>(oracle::draw(rng, 0, 9))];
    auto Phi = convert::from_rationals(n, d, v);
    if (Phi.is_zero()) continue;
    ++checked;
    bool lhs = is_oriented_tropical_plucker(Phi);
    auto s = split(Phi);
    bool rhs = is_tropical_plucker(s.phi) && is_chirotope(s.chi) && is_compatible(s.phi, s.chi);
    bool independent = oracle::oriented_plucker(convert::to_alternating(Phi));
    positives += lhs;
    mismatches += lhs != rhs || lhs != independent;
  }
  std::ostringstream os;
  os << checked << " vectors (" << positives << " oriented), " << mismatches << " mismatches, seed " << seed;
  return {mismatches == 0, os.str()};
}

Outcome c7_fiber_finality() {
  std::ostringstream os;
  bool ok = true;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) {
    auto macp = enumerate_oriented_matroids(d, n);
    auto r = check_fiber_finality(oriented_cell_poset(macp), macp);
    ok = ok && r.violations.empty() && r.final_object_not_I.empty();
    os << "(" << d << "," << n << "): " << r.fibers_checked << " fibers, " << r.violations.size()
       << " maximum violations, " << r.final_object_not_I.size() << "/" << r.objects_checked
       << " fiber categories whose final object is not I, " << r.final_object_not_restriction.size()
       << " not I ∩ i_max; ";
  }
  std::string s = os.str();
  return {ok, s.substr(0, s.size() - 2)};
}

Outcome c8_operad_laws(std::uint64_t seed) {
  LawPlan plan;
  plan.seed = seed;
  auto r = check_operad_laws(plan);
  std::ostringstream os;
  os << r.unit_checks << " unit, " << r.associativity_checks << " associativity, " << r.equivariance_checks
     << " equivariance checks over " << r.configurations << " configurations (" << r.window_skipped
     << " with no inputs inside window 20), " << r.failures.size() << " failures";
  return {r.failures.empty() && r.associativity_checks > 0, os.str()};
}

Outcome c9_action(std::uint64_t seed) {
  ActionPlan plan;
  plan.seed = seed;
  auto r = check_action_compatibility(plan);
  std::ostringstream os;
  os << r.trials << " trials, " << r.coordinates_compared << " coordinates, " << r.outputs_validated
     << " outputs validated, " << r.failures.size() << " failures, seed " << seed;
  return {r.failures.empty() && r.trials > 0, os.str()};
}

Outcome c10_unit(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int samples = 0, failures = 0;
  for (; samples < 80; ++samples) {
    long d = oracle::draw(rng, 0, 3);
    long n = oracle::draw(rng, std::max(d, 1L), 4);
    OrientedTropicalVector Phi = d == 0 ? rank_zero_unit() : random_oriented(rng, n, d);
    if (d == 0 && samples % 2) Phi = direct_sum(rank_zero_unit(), rank_zero_unit());
    auto u = rank_zero_unit();
    failures += !(direct_sum(u, Phi) == Phi && direct_sum(Phi, u) == Phi);
  }
  std::ostringstream os;
  os << samples << " samples, " << failures << " failures, seed " << seed;
  return {failures == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> expected_fail;
  std::uint64_t seed = 7;
  app.add_option("--expect-fail", expected_fail, "criterion expected to fail");
  app.add_option("--seed", seed, "seed for the randomized criteria");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::function<Outcome()>> criteria{
      c1_rank_one_classes,
      c2_macp_nerve,
      c3_uniform_cells,
      c4_closure,
      [&] { return c5_sliding(seed); },
      [&] { return c6_split_coherence(seed); },
      c7_fiber_finality,
      [&] { return c8_operad_laws(seed); },
      [&] { return c9_action(seed); },
      [&] { return c10_unit(seed); },
  };
  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    int id = static_cast<int>(k + 1);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::printf("criterion %d: %s (%.2f s) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::set<int> want(expected_fail.begin(), expected_fail.end());
  if (failed != want) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
