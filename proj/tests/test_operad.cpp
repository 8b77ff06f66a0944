#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "mgl/operad.hpp"
#include "oracles.hpp"

using namespace mgl;

namespace {

// Sieve-based piece of x: the index of p among primes when x is a power p^k.
std::size_t sieve_piece(long x, const std::vector<long>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    long v = primes[i];
    while (v < x) v *= primes[i];
    if (v == x) return i + 1;
  }
  return 0;
}

std::vector<long> sieve(long n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

InjectionVertex vtx(std::size_t arity, std::size_t window, std::vector<Element> images) {
  return InjectionVertex::make(arity, window, std::move(images));
}

OrientedTropicalVector rank_one(std::vector<Rational> values) {
  std::map<Subset, Rational> m;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) m[{static_cast<Element>(i)}] = values[i];
  }
  return from_signed_rationals(GroundSet(values.size()), 1, m);
}

}  // namespace

TEST(Partition, PrimesAndPieces) {
  EXPECT_EQ(partition::nth_prime(1), 2);
  EXPECT_EQ(partition::nth_prime(5), 11);
  EXPECT_THROW(partition::nth_prime(0), Error);
  auto primes = sieve(1000);
  for (long x = 0; x < 1000; ++x) EXPECT_EQ(partition::piece_of(x), sieve_piece(x, primes)) << x;
  EXPECT_EQ(partition::first_elements(2, 3), (std::vector<Element>{3, 9, 27}));
  EXPECT_EQ(partition::first_elements(0, 5), (std::vector<Element>{0, 1, 6, 10, 12}));
  EXPECT_EQ(partition::elements_below(1, 20), (std::vector<Element>{2, 4, 8, 16}));
  EXPECT_THROW(partition::first_elements(1, 70), Error);
}

TEST(InjectionVertexTest, ValidationAndImages) {
  auto v = vtx(2, 2, {2, 4, 8, 16});
  EXPECT_EQ(v.image(1, 0), 8);
  EXPECT_EQ(v.pieces(), (std::vector<std::size_t>{1}));
  EXPECT_NO_THROW(v.validate(true));
  EXPECT_THROW(vtx(2, 2, {2, 3, 8, 16}).validate(true), Error);
  EXPECT_NO_THROW(vtx(1, 2, {2, 3}).validate(true));
  EXPECT_THROW(vtx(2, 1, {4, 4}).validate(false), Error);
  EXPECT_THROW(v.image(0, 2), Error);
  EXPECT_THROW(vtx(2, 2, {2, 4}), Error);
  EXPECT_EQ(InjectionVertex::make_unit().image(0, 123), 123);
  EXPECT_EQ(v.as_injection(), (Injection{{0, 2}, {1, 4}, {2, 8}, {3, 16}}));
}

TEST(IsSimplex, Examples) {
  auto a = vtx(1, 2, {2, 4});
  auto b = vtx(1, 2, {3, 9});
  auto c = vtx(1, 2, {4, 8});
  EXPECT_TRUE(is_simplex({a, b}));
  EXPECT_FALSE(is_simplex({a, c}));
  EXPECT_FALSE(is_consistent_family({a, c}));  // 4 has preimages 1 and 0
  EXPECT_TRUE(is_consistent_family({a, vtx(1, 2, {2, 8})}));
  EXPECT_THROW(is_simplex({a, vtx(2, 1, {2, 4})}), Error);
}

TEST(ConeVertex, UsesTheNextPiece) {
  auto K = std::vector<InjectionVertex>{vtx(2, 1, {2, 4}), vtx(2, 1, {3, 9})};
  auto c = cone_vertex(K, 2, 2);
  EXPECT_EQ(c.pieces(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(c.images, (std::vector<Element>{5, 25, 125, 625}));
  EXPECT_EQ(cone_vertex({}, 1, 3).images, (std::vector<Element>{2, 4, 8}));
  // The cone point extends the simplex.
  K.push_back(cone_vertex(K, 2, 1));
  EXPECT_TRUE(is_simplex(K));
  EXPECT_THROW(cone_vertex({InjectionVertex::make_unit()}, 1, 1), Error);
}

TEST(OperadPointTest, CombinationChecks) {
  auto a = vtx(1, 2, {2, 4});
  auto b = vtx(1, 2, {3, 9});
  auto p = OperadPoint::combination({{Rational(1, 3), b}, {Rational(2, 3), a}});
  EXPECT_EQ(p.terms().front().second, a);  // sorted by vertex
  EXPECT_EQ(OperadPoint::combination({{Rational(1, 2), a}, {Rational(1, 2), a}}), OperadPoint::vertex(a));
  EXPECT_THROW(OperadPoint::combination({{Rational(1, 2), a}}), Error);
  EXPECT_THROW(OperadPoint::combination({{Rational(1), a}, {Rational(0), b}}), Error);
  EXPECT_THROW(OperadPoint::combination({{Rational(1, 2), a}, {Rational(1, 2), vtx(1, 2, {4, 8})}}), Error);
  EXPECT_THROW(OperadPoint::vertex(vtx(2, 1, {2, 3})), Error);
  EXPECT_NO_THROW(OperadPoint::vertex(vtx(2, 1, {2, 3}), OperadPoint::Check::Consistent));
  EXPECT_TRUE(OperadPoint::unit().is_unit());
  EXPECT_EQ(OperadPoint::empty().arity(), 0u);
}

TEST(OperadCompose, IdentityWithUnitFibres) {
  auto pA = OperadPoint::combination({{Rational(1, 4), vtx(2, 2, {2, 4, 8, 16})},
                                      {Rational(3, 4), vtx(2, 2, {3, 9, 27, 81})}});
  EXPECT_EQ(operad_compose({0, 1}, pA, {OperadPoint::unit(), OperadPoint::unit()}), pA);
}

TEST(OperadCompose, UnitOnTheOutsideReturnsTheFibre) {
  auto fibre = OperadPoint::vertex(vtx(3, 2, {2, 4, 8, 16, 32, 64}));
  EXPECT_EQ(operad_compose({0, 0, 0}, OperadPoint::unit(), {fibre}), fibre);
}

TEST(OperadCompose, WeightsMultiply) {
  auto pA = OperadPoint::combination({{Rational(1, 2), vtx(1, 8, {2, 4, 8, 16, 32, 64, 128, 256})},
                                      {Rational(1, 2), vtx(1, 8, {3, 9, 27, 81, 243, 729, 2187, 6561})}});
  auto fibre = OperadPoint::combination({{Rational(1, 3), vtx(2, 1, {0, 1})},
                                         {Rational(2, 3), vtx(2, 1, {2, 4})}});
  auto c = operad_compose({0, 0}, pA, {fibre});
  ASSERT_EQ(c.terms().size(), 4u);
  EXPECT_EQ(c.window(), 1u);
  // Oracle: (b, 0) ↦ α(β(b, 0)) with weight w_α w_β.
  std::map<std::vector<Element>, Rational> want;
  for (const auto& [wa, alpha] : pA.terms()) {
    for (const auto& [wb, beta] : fibre.terms()) {
      want[{alpha.images[static_cast<std::size_t>(beta.images[0])],
            alpha.images[static_cast<std::size_t>(beta.images[1])]}] = wa * wb;
    }
  }
  for (const auto& [w, v] : c.terms()) EXPECT_EQ(want.at(v.images), w);
}

TEST(OperadCompose, CompositesAreConsistentFamilies) {
  auto pA = OperadPoint::combination({{Rational(1, 2), vtx(2, 4, {2, 4, 8, 16, 32, 64, 128, 256})},
                                      {Rational(1, 2), vtx(2, 4, {3, 9, 27, 81, 243, 729, 2187, 6561})}});
  auto f0 = OperadPoint::combination({{Rational(1, 2), vtx(1, 1, {0})}, {Rational(1, 2), vtx(1, 1, {1})}});
  auto f1 = OperadPoint::vertex(vtx(1, 1, {2}));
  auto c = operad_compose({0, 1}, pA, {f0, f1});
  EXPECT_TRUE(is_consistent_family(c.vertices()));
  // Terms sharing the outer vertex share the image of the second fibre.
  EXPECT_FALSE(is_simplex(c.vertices()));
}

TEST(OperadCompose, Errors) {
  auto pA = OperadPoint::vertex(vtx(2, 1, {2, 4}));
  EXPECT_THROW(operad_compose({0, 1}, pA, {OperadPoint::unit()}), Error);
  EXPECT_THROW(operad_compose({0, 2}, pA, {OperadPoint::unit(), OperadPoint::unit()}), Error);
  EXPECT_THROW(operad_compose({0, 0}, pA, {OperadPoint::unit(), OperadPoint::unit()}), Error);
  try {
    operad_compose({0, 1}, pA, {OperadPoint::vertex(vtx(1, 1, {5})), OperadPoint::unit()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("window exhausted"), std::string::npos);
  }
}

TEST(Permute, ActsFreelyOnVertices) {
  auto v = vtx(3, 1, {2, 4, 8});
  std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::set<InjectionVertex> seen;
  for (const auto& s : perms) {
    auto w = permute(v, s);
    // (σ·α)(σ(i), m) = α(i, m).
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(w.image(s[i], 0), v.image(i, 0));
    seen.insert(w);
    for (const auto& r : perms) {
      std::vector<std::size_t> rs(3);
      for (std::size_t i = 0; i < 3; ++i) rs[i] = r[s[i]];
      EXPECT_EQ(permute(w, r), permute(v, rs));
    }
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_THROW(permute(v, {0, 0, 1}), Error);
}

TEST(RestrictWindow, DropsTheTail) {
  auto p = OperadPoint::vertex(vtx(1, 3, {2, 4, 8}));
  EXPECT_EQ(restrict_window(p, 2), OperadPoint::vertex(vtx(1, 2, {2, 4})));
  EXPECT_EQ(restrict_window(p, 5), p);
}

TEST(OperadLaws, SmallSweepHasNoFailures) {
  LawPlan plan;
  plan.max_set_size = 2;
  plan.max_window = 12;
  plan.random_trials = 10;
  plan.seed = 3;
  auto report = check_operad_laws(plan);
  EXPECT_GT(report.unit_checks, 0u);
  EXPECT_GT(report.associativity_checks, 0u);
  EXPECT_GT(report.equivariance_checks, 0u);
  EXPECT_TRUE(report.failures.empty()) << report.failures.front();
}

TEST(OperadAct, UnitIsIdentity) {
  auto x = rank_one({1, -2, 0});
  EXPECT_EQ(operad_act(OperadPoint::unit(), {x}), x);
  EXPECT_THROW(operad_act(OperadPoint::unit(), {x, x}), Error);
}

TEST(OperadAct, VertexIsPushforwardOfTheBlockSum) {
  auto v = vtx(2, 3, {2, 4, 8, 16, 32, 64});
  auto x = rank_one({1, -2, 0});
  auto y = rank_one({3, 0, Rational(1, 2)});
  auto got = operad_act(OperadPoint::vertex(v), {x, y});
  // Oracle: (a, m) ↦ images[3a + m] applied to the product on tuples.
  std::map<Subset, Rational> want;
  for (Element i = 0; i < 3; ++i) {
    for (Element j = 0; j < 3; ++j) {
      Rational q = *x[{i}].to_rational() * *y[{j}].to_rational();
      if (q == 0) continue;
      oracle::Tuple t{v.images[static_cast<std::size_t>(i)], v.images[static_cast<std::size_t>(3 + j)]};
      auto s = oracle::sorted(t);
      want[Subset(s.begin(), s.end())] = oracle::inversion_sign(t) * q;
    }
  }
  std::map<Subset, Rational> have;
  for (const auto& [b, c] : got.entries()) have[b] = *c.to_rational();
  EXPECT_EQ(have, want);
  EXPECT_EQ(got.rank(), 2);
}

TEST(OperadAct, RanksAddAndOutputsAreValid) {
  auto p = OperadPoint::combination({{Rational(1, 2), vtx(2, 2, {2, 4, 8, 16})},
                                     {Rational(1, 2), vtx(2, 2, {3, 9, 27, 81})}});
  auto x = rank_one({1, -1});
  auto y = from_signed_rationals(GroundSet(2), 2, {{{0, 1}, 1}});
  auto out = operad_act(p, {x, y});
  EXPECT_EQ(out.rank(), 3);
  EXPECT_TRUE(is_oriented_tropical_plucker(out));
  EXPECT_TRUE(oracle::oriented_plucker(convert::to_alternating(out)));
}

TEST(ActionCompatibility, SmallRunHasNoFailures) {
  ActionPlan plan;
  plan.trials = 8;
  plan.seed = 5;
  auto report = check_action_compatibility(plan);
  EXPECT_EQ(report.trials, 8u);
  EXPECT_GT(report.coordinates_compared, 0u);
  EXPECT_TRUE(report.failures.empty()) << report.failures.front();
}

TEST(CataloguePoints, AreValidPoints) {
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    auto pts = catalogue_points(arity, 2, 200);
    EXPECT_FALSE(pts.empty());
    for (const auto& p : pts) {
      EXPECT_EQ(p.arity(), arity);
      for (const auto& v : p.vertices()) {
        if (v.unit) continue;
        for (Element x : v.images) EXPECT_LT(x, 200);
      }
    }
  }
}
