#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "qstirl/qanalog.hpp"
#include "qstirl/poset.hpp"

using namespace qstirl;

namespace {
Word W(const char* s) { return Word::parse(s); }
RGWord R(const char* s) { return RGWord::parse(s); }

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST(Poset, RepairStep) {
  EXPECT_EQ(repair_step(W("13")), W("12"));
  EXPECT_EQ(repair_step(W("21")), W("11"));
  EXPECT_EQ(repair_step(W("1213")), W("1213"));
  EXPECT_EQ(repair_step(W("33")), W("13"));
}

TEST(Poset, Phi) {
  EXPECT_EQ(phi(W("33")), R("12"));
  EXPECT_EQ(phi(W("21")), R("11"));
  EXPECT_EQ(phi(W("1213")), R("1213"));
  EXPECT_EQ(phi(Word{}), RGWord());
}

TEST(Poset, Omega) {
  EXPECT_EQ(omega(R("121"), 3), W("331"));
  EXPECT_EQ(omega(R("1111"), 5), W("5111"));
  EXPECT_EQ(omega(RGWord(), 2), Word{});
  EXPECT_THROW(omega(R("123"), 2), std::invalid_argument);
  EXPECT_THROW(omega(R("1"), 0), std::invalid_argument);
}

TEST(Poset, Fiber) {
  EXPECT_EQ(sorted(fiber(R("11"), 2)), (std::vector<Word>{W("11"), W("21")}));
  EXPECT_EQ(sorted(fiber(R("12"), 2)), (std::vector<Word>{W("12"), W("22")}));
  // all u_i empty: j_i ranges over [i, 3]
  auto top = fiber(R("123"), 3);
  EXPECT_EQ(top.size(), 6u);
  for (const auto& w : top)
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_GE(w.at(i), static_cast<Letter>(i));
}

TEST(Poset, Decompose) {
  auto two = decompose(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].bottom, R("11"));
  EXPECT_EQ(two[0].top, W("21"));
  EXPECT_EQ(two[1].bottom, R("12"));
  EXPECT_EQ(two[1].top, W("22"));
  auto one = decompose(1, 5);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].top, W("5"));
  EXPECT_EQ(one[0].chain_profile, (std::vector<int>{5}));
  auto small = decompose(2, 1);
  ASSERT_EQ(small.size(), 1u);
  EXPECT_EQ(small[0].bottom, R("11"));
  EXPECT_EQ(small[0].top, W("11"));
}

TEST(Poset, DecompositionPartitionsTheCube) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Letter m = 1; m <= 4; ++m) {
      auto intervals = decompose(n, m);
      // k ascending, then lexicographic
      for (std::size_t i = 1; i < intervals.size(); ++i) {
        const auto& a = intervals[i - 1].bottom;
        const auto& b = intervals[i].bottom;
        EXPECT_TRUE(a.max_entry() < b.max_entry() || (a.max_entry() == b.max_entry() && a < b));
      }
      for (const auto& w : all_words(n, m)) {
        int hits = 0;
        for (const auto& iv : intervals) hits += iv.contains(w) ? 1 : 0;
        EXPECT_EQ(hits, 1) << to_string(w);
      }
    }
  }
}

TEST(Poset, FiberFormulaMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Letter m = 1; m <= 4; ++m) {
      std::map<RGWord, std::vector<Word>> brute;
      for (const auto& w : all_words(n, m)) brute[phi(w)].push_back(w);
      for (const auto& iv : decompose(n, m)) {
        EXPECT_EQ(sorted(fiber(iv.bottom, m)), sorted(brute[iv.bottom]));
      }
    }
  }
}

TEST(Poset, IntervalCardinality) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Letter m = 1; m <= 5; ++m) {
      for (const auto& iv : decompose(n, m)) {
        std::size_t expected = 1;
        for (int i = 0; i < iv.bottom.max_entry(); ++i) expected *= static_cast<std::size_t>(m - i);
        EXPECT_EQ(iv.cardinality(), expected);
        EXPECT_EQ(fiber(iv.bottom, m).size(), expected);
      }
    }
  }
}

TEST(Poset, ClosureOperator) {
  auto r = closure_check(W("11"), W("21"));
  EXPECT_TRUE(r.decreasing && r.idempotent && r.monotone);
  EXPECT_TRUE(closure_check(W("13"), W("13")).all());
  EXPECT_THROW(closure_check(W("1"), W("11")), std::invalid_argument);
  for (auto [n, m] : {std::pair<std::size_t, Letter>{3, 3}, {2, 4}}) {
    auto all = all_words(n, m);
    for (const auto& v : all)
      for (const auto& w : all) EXPECT_TRUE(closure_check(v, w).all()) << to_string(v) << " " << to_string(w);
  }
}

TEST(Poset, FiberRankGeneratingFunction) {
  EXPECT_EQ(fiber_ls_sum(R("11"), 2), (QPoly{1, 1}));
  EXPECT_EQ(fiber_ls_sum(R("1"), 3), (QPoly{1, 1, 1}));
  EXPECT_EQ(fiber_ls_sum(RGWord(), 4), QPoly{1});
  for (std::size_t n = 1; n <= 5; ++n)
    for (Letter m = 1; m <= 5; ++m)
      for (const auto& iv : decompose(n, m)) {
        const int k = iv.bottom.max_entry();
        QPoly expected = wt(iv.bottom).shifted(static_cast<std::size_t>(k * (k - 1) / 2)) * q_falling(m, k);
        EXPECT_EQ(fiber_ls_sum(iv.bottom, m), expected);
        EXPECT_EQ(fiber_ls_closed_form(iv.bottom, m), expected);
      }
}
