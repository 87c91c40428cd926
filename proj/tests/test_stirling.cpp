#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "qstirl/qanalog.hpp"
#include "qstirl/rgword.hpp"
#include "qstirl/stirling.hpp"

using namespace qstirl;

// Frozen values, each produced by the brute-force oracle before the
// library routes existed.
TEST(Stirling, FrozenValues) {
  EXPECT_EQ(oracle::stirling(3, 2), (oracle::Poly{2, 1}));
  EXPECT_EQ(oracle::stirling(4, 2), (oracle::Poly{3, 3, 1}));
  EXPECT_EQ(oracle::stirling(5, 2), (oracle::Poly{4, 6, 4, 1}));
  EXPECT_EQ(oracle::stirling(4, 3), (oracle::Poly{3, 2, 1}));

  EXPECT_EQ(stirling_rec(3, 2), (QPoly{2, 1}));
  EXPECT_EQ(stirling_rec(4, 2), (QPoly{3, 3, 1}));
  EXPECT_EQ(stirling_rec(5, 2), (QPoly{4, 6, 4, 1}));
  EXPECT_EQ(stirling_rec(4, 3), (QPoly{3, 2, 1}));
}

TEST(Stirling, Boundaries) {
  EXPECT_EQ(stirling_rec(0, 0), QPoly{1});
  EXPECT_TRUE(stirling_rec(4, 0).is_zero());
  EXPECT_TRUE(stirling_rec(0, 3).is_zero());
  EXPECT_TRUE(stirling_rec(2, 3).is_zero());
  EXPECT_TRUE(stirling_rec(-1, 0).is_zero());
  EXPECT_TRUE(stirling_rec(3, -2).is_zero());
  for (long n = 0; n <= 9; ++n) EXPECT_EQ(stirling_rec(n, n), QPoly{1});
  EXPECT_EQ(stirling_enum(0, 0), QPoly{1});
  EXPECT_TRUE(stirling_enum(2, 3).is_zero());
  EXPECT_EQ(stirling_h(4, 2), (QPoly{3, 3, 1}));
  EXPECT_EQ(stirling_h(3, 3), QPoly{1});
  EXPECT_EQ(stirling_h(3, 2), (QPoly{2, 1}));
}

TEST(Stirling, RoutesAgreeWithOracle) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto expected = oracle::stirling(n, k);
      EXPECT_EQ(oracle::from(stirling_rec(n, k)), expected) << n << "," << k;
      EXPECT_EQ(oracle::from(stirling_enum(n, k)), expected) << n << "," << k;
      EXPECT_EQ(oracle::from(stirling_h(n, k)), expected) << n << "," << k;
    }
  }
}

TEST(Stirling, ClassicalAndIntegerSpecializations) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling_rec(n, k).eval(1), oracle::classical_stirling(n, k));
      EXPECT_EQ(stirling_rec(n, k).eval(2), oracle::stirling_at(n, k, 2));
      EXPECT_EQ(stirling_rec(n, k).eval(-3), oracle::stirling_at(n, k, -3));
    }
  }
}

// The top coefficient comes from the lexicographically largest word 12...kk...k.
TEST(Stirling, TopTermIsLargestWord) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<Letter> letters;
      for (int i = 1; i <= k; ++i) letters.push_back(i);
      while (static_cast<int>(letters.size()) < n) letters.push_back(k);
      QPoly top = wt(RGWord(Word(letters)));
      QPoly s = stirling_enum(n, k);
      EXPECT_EQ(s.degree(), top.degree());
      EXPECT_EQ(s.coeff(static_cast<std::size_t>(s.degree())), 1);
    }
  }
}

TEST(Stirling, CompleteHomogeneous) {
  std::vector<QPoly> ab{QPoly{1}, QPoly{1, 1}};
  EXPECT_EQ(h_complete(0, ab), QPoly{1});
  EXPECT_EQ(h_complete(0, std::span<const QPoly>{}), QPoly{1});
  EXPECT_TRUE(h_complete(2, std::span<const QPoly>{}).is_zero());
  EXPECT_EQ(h_complete(1, ab), (QPoly{2, 1}));
  EXPECT_EQ(h_complete(2, ab), (QPoly{3, 3, 1}));
  std::vector<QPoly> nums{QPoly{2}, QPoly{3}, QPoly{5}};
  // h_2(2,3,5) = 4+9+25+6+10+15
  EXPECT_EQ(h_complete(2, nums), QPoly{69});
}

TEST(Stirling, Hankel) {
  EXPECT_EQ(hankel_det(1, 1), (QPoly{1, 1}));
  EXPECT_EQ(hankel_det(0, 3), QPoly{1});
  EXPECT_EQ(hankel_det(1, 0), QPoly{1});
  auto m = hankel_matrix(1, 1);
  EXPECT_EQ(m, (std::vector<std::vector<QPoly>>{{QPoly{1}, QPoly{1}}, {QPoly{1}, QPoly{2, 1}}}));
  for (long n = 0; n <= 4; ++n)
    for (long s = 0; s <= 3; ++s) EXPECT_EQ(hankel_det(n, s), hankel_rhs(n, s)) << n << "," << s;
  EXPECT_EQ(hankel_rhs(2, 1), (QPoly{1, 1}) * (QPoly{1, 1, 1}).pow(2));
}

TEST(Stirling, CofactorDeterminant) {
  std::vector<std::vector<QPoly>> m{{QPoly{2}, QPoly{1}}, {QPoly{0, 1}, QPoly{3}}};
  EXPECT_EQ(cofactor_determinant(m), (QPoly{6, -1}));
  EXPECT_EQ(cofactor_determinant({}), QPoly{1});
}

TEST(Stirling, ThreadConfinedCacheGivesSameValues) {
  std::vector<QPoly> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = stirling_rec(14, 6 + t % 2); });
  for (auto& th : pool) th.join();
  EXPECT_EQ(results[0], stirling_rec(14, 6));
  EXPECT_EQ(results[1], stirling_rec(14, 7));
  EXPECT_EQ(results[0], results[2]);
}
