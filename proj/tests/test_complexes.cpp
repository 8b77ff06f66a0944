#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <numeric>
#include <random>

#include "mgl/complexes.hpp"
#include "oracles.hpp"

using namespace mgl;

namespace {

using Rel = std::vector<std::vector<bool>>;

// Chains by length, counted by extending each chain with a strictly larger element.
std::vector<std::uint64_t> chain_counts(const Rel& leq) {
  const std::size_t n = leq.size();
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t last, std::size_t len) {
    if (out.size() < len) out.resize(len, 0);
    ++out[len - 1];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != last && leq[last][j]) extend(j, len + 1);
    }
  };
  for (std::size_t i = 0; i < n; ++i) extend(i, 1);
  return out;
}

Rel random_poset(std::mt19937_64& rng, std::size_t n) {
  Rel leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) leq[i][j] = oracle::draw(rng, 0, 3) == 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  // Shuffle labels so the order is not the index order.
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  Rel out(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[p[i]][p[j]] = leq[i][j];
  }
  return out;
}

// Rank-1 oriented matroids on 3 elements: nonzero sign vectors modulo ±,
// with σ ≤ τ when τ agrees with σ (or -σ) wherever τ is nonzero.
Rel octahedron_face_order() {
  std::vector<std::array<int, 3>> classes;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        std::array<int, 3> v{a, b, c};
        if (v == std::array<int, 3>{0, 0, 0}) continue;
        std::array<int, 3> neg{-a, -b, -c};
        if (std::find(classes.begin(), classes.end(), neg) == classes.end()) classes.push_back(v);
      }
    }
  }
  auto conforms = [](const std::array<int, 3>& s, const std::array<int, 3>& t) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] != 0 && t[k] != s[k]) return false;
    }
    return true;
  };
  Rel leq(classes.size(), std::vector<bool>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      std::array<int, 3> neg{-classes[i][0], -classes[i][1], -classes[i][2]};
      leq[i][j] = conforms(classes[i], classes[j]) || conforms(neg, classes[j]);
    }
  }
  return leq;
}

}  // namespace

TEST(FinitePosetTest, AxiomsAreChecked) {
  EXPECT_THROW(FinitePoset(Rel{{false}}), Error);
  EXPECT_THROW(FinitePoset({{true, true}, {true, true}}), Error);
  EXPECT_THROW(FinitePoset({{true, true, false}, {false, true, true}, {false, false, true}}), Error);
  EXPECT_THROW(FinitePoset({{true, false}}), Error);
  EXPECT_THROW(FinitePoset(Rel{{true}}, {"a", "b"}), Error);
  FinitePoset chain({{true, true}, {false, true}});
  EXPECT_EQ(chain.maximum(), 1u);
  EXPECT_EQ(FinitePoset({{true, false}, {false, true}}).maximum(), 2u);
  EXPECT_EQ(chain.subposet({1}).size(), 1u);
}

TEST(OrderComplex, SmallExamples) {
  auto two_chain = order_complex(FinitePoset({{true, true}, {false, true}}));
  EXPECT_EQ(f_vector(two_chain), (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(euler_characteristic(two_chain), 1);

  auto antichain = order_complex(FinitePoset({{true, false, false}, {false, true, false}, {false, false, true}}));
  EXPECT_EQ(f_vector(antichain), (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(euler_characteristic(antichain), 3);

  auto point = order_complex(FinitePoset(Rel{{true}}));
  EXPECT_EQ(euler_characteristic(point), 1);
  EXPECT_EQ(point.dimension(), 0);

  auto empty = order_complex(FinitePoset());
  EXPECT_EQ(empty.dimension(), -1);
  EXPECT_EQ(euler_characteristic(empty), 0);
}

TEST(OrderComplex, BoundaryOfATriangleIsAHexagon) {
  // Vertices 0..2, edges 3 = {0,1}, 4 = {1,2}, 5 = {0,2}.
  Rel leq(6, std::vector<bool>(6, false));
  for (std::size_t i = 0; i < 6; ++i) leq[i][i] = true;
  leq[0][3] = leq[1][3] = leq[1][4] = leq[2][4] = leq[0][5] = leq[2][5] = true;
  auto K = order_complex(FinitePoset(leq));
  EXPECT_EQ(f_vector(K), (std::vector<std::uint64_t>{6, 6}));
  EXPECT_EQ(euler_characteristic(K), 0);
  EXPECT_EQ(K.facets().size(), 6u);
}

TEST(OrderComplex, MatchesBruteForceChainCounts) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto leq = random_poset(rng, static_cast<std::size_t>(oracle::draw(rng, 1, 15)));
    auto K = order_complex(FinitePoset(leq));
    auto want = chain_counts(leq);
    EXPECT_EQ(f_vector(K), want);
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < want.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(want[k]);
    EXPECT_EQ(euler_characteristic(K), chi);
  }
}

TEST(OrderComplex, TruncatedByDimension) {
  Rel leq(4, std::vector<bool>(4, false));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) leq[i][j] = true;
  }
  EXPECT_EQ(f_vector(order_complex(FinitePoset(leq), 1)), (std::vector<std::uint64_t>{4, 6}));
}

TEST(OrderComplex, RankOneMacPhersonianIsTheOctahedronSubdivision) {
  auto macp = enumerate_oriented_matroids(1, 3);
  auto K = order_complex(poset_of(macp));
  auto want = chain_counts(octahedron_face_order());
  EXPECT_EQ(want, (std::vector<std::uint64_t>{13, 36, 24}));
  EXPECT_EQ(f_vector(K), want);
  EXPECT_EQ(euler_characteristic(K), 1);
}

TEST(OrderComplex, PosetsWithAMaximumAreCones) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto leq = random_poset(rng, static_cast<std::size_t>(oracle::draw(rng, 1, 10)));
    std::size_t n = leq.size();
    for (auto& row : leq) row.push_back(true);
    leq.emplace_back(n + 1, false);
    leq[n][n] = true;
    EXPECT_EQ(euler_characteristic(order_complex(FinitePoset(leq))), 1);
  }
}

TEST(SimplicialComplexTest, FacetsAndFaces) {
  auto K = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
  EXPECT_EQ(f_vector(K), (std::vector<std::uint64_t>{4, 4, 1}));
  EXPECT_EQ(K.facets(), (std::vector<std::vector<std::size_t>>{{2, 3}, {0, 1, 2}}));
  EXPECT_EQ(euler_characteristic(K), 1);
  EXPECT_THROW(SimplicialComplex::from_faces(3, {{0, 1}}), Error);
  EXPECT_THROW(SimplicialComplex::from_facets(2, {{0, 2}}), Error);
  EXPECT_EQ(SimplicialComplex::from_faces(2, {{0, 1}, {1}, {0}}).faces(),
            SimplicialComplex::from_facets(2, {{0, 1}}).faces());
}

TEST(GoodCoverNerve, RankOneCells) {
  auto cells = oriented_cell_poset(enumerate_oriented_matroids(1, 3));
  auto P = good_cover_nerve_data(cells);
  EXPECT_EQ(P.size(), 13u);
  EXPECT_EQ(euler_characteristic(order_complex(P)), 1);
  EXPECT_EQ(good_cover_nerve_data(OrientedCellPoset{}).size(), 0u);
}
