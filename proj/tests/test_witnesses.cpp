#include <gtest/gtest.h>

#include <set>

#include "qstirl/rgword.hpp"
#include "qstirl/witnesses.hpp"

using namespace qstirl;

namespace {
RGWord R(const char* s) { return RGWord::parse(s); }
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST(Mercier, Examples) {
  auto a = mercier_split(R("1121"));
  EXPECT_EQ(a.one_positions, (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(a.reduced, R("1"));
  EXPECT_EQ(wt(R("1121")), wt(a.reduced));
  auto b = mercier_split(R("12"));
  EXPECT_EQ(b.one_positions, (std::vector<std::size_t>{1}));
  EXPECT_EQ(b.reduced, R("1"));
  auto c = mercier_split(R("1111"));
  EXPECT_EQ(c.reduced, RGWord());
  EXPECT_THROW(mercier_split(RGWord()), std::invalid_argument);
  std::vector<std::size_t> bad{2, 3};
  EXPECT_THROW(mercier_merge(bad, R("1")), std::invalid_argument);
}

TEST(Mercier, ExhaustiveRoundTripAndWeights) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      std::set<std::pair<std::vector<std::size_t>, RGWord>> images;
      for_each_rg(n, k, [&](const RGWord& w) {
        EXPECT_TRUE(mercier_certificate(w).ok()) << to_string(w);
        auto s = mercier_split(w);
        EXPECT_EQ(s.reduced.max_entry(), k - 1);
        images.emplace(s.one_positions, s.reduced);
      });
      EXPECT_EQ(images.size(), enumerate_rg(n, k).size());
    }
  }
}

TEST(Dml1, Examples) {
  auto a = dml1_factor(R("1122"));
  EXPECT_EQ(a.prefix, R("11"));
  EXPECT_EQ(a.tail, W("2"));
  auto b = dml1_factor(R("12"));
  EXPECT_EQ(b.prefix, R("1"));
  EXPECT_EQ(b.tail, Word{});
  auto c = dml1_factor(R("1213"));
  EXPECT_EQ(c.prefix, R("121"));
  EXPECT_EQ(c.tail, Word{});
  EXPECT_EQ(dml1_merge(R("11"), W("2")), R("1122"));
}

TEST(Dml1, Exhaustive) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (int k = 1; k <= static_cast<int>(n); ++k)
      for_each_rg(n, k, [&](const RGWord& w) {
        auto f = dml1_factor(w);
        EXPECT_EQ(dml1_merge(f.prefix, f.tail), w);
        EXPECT_EQ(wt(w), wt(f.prefix) * ls(f.tail));
        EXPECT_TRUE(dml1_certificate(w).ok());
      });
}

TEST(Dml2, Examples) {
  auto a = dml2_factorizations(R("112"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].x, W("1"));
  EXPECT_EQ(a[0].y, W("1"));
  EXPECT_EQ(a[0].z, W("2"));
  EXPECT_TRUE(dml2_factorizations(RGWord::staircase(4)).empty());
  EXPECT_EQ(dml2_factorizations(R("1212")).size(), 2u);
}

TEST(Dml2, FactorizationCountIsNMinusK) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (int k = 0; k <= static_cast<int>(n); ++k)
      for_each_rg(n, k, [&](const RGWord& w) {
        EXPECT_EQ(dml2_factorizations(w).size(), n - static_cast<std::size_t>(k));
        EXPECT_TRUE(dml2_certificate(w).ok()) << to_string(w);
      });
}

TEST(Conv1, Examples) {
  auto a = conv1_decompose(R("1212"), 2);
  EXPECT_EQ(a.head, R("12"));
  EXPECT_TRUE(a.tail.high_positions.empty());
  EXPECT_EQ(a.tail.high_shifted, RGWord());
  EXPECT_EQ(a.tail.low_letters, W("12"));
  auto b = conv1_decompose(R("1233"), 2);
  EXPECT_EQ(b.head, R("12"));
  EXPECT_EQ(b.tail.high_shifted, R("11"));
  EXPECT_EQ(b.tail.high_positions, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(b.tail.low_letters.empty());
  auto c = conv1_decompose(R("121"), 3);
  EXPECT_EQ(c.head, R("121"));
  EXPECT_EQ(c.tail.length, 0u);
  EXPECT_EQ(conv1_compose(b), R("1233"));
  EXPECT_THROW(conv1_decompose(R("12"), 3), std::invalid_argument);
}

TEST(Conv1, Exhaustive) {
  for (std::size_t total = 0; total <= 7; ++total)
    for (int k = 0; k <= static_cast<int>(total); ++k)
      for_each_rg(total, k, [&](const RGWord& w) {
        for (std::size_t n = 0; n <= total; ++n) {
          auto d = conv1_decompose(w, n);
          EXPECT_EQ(conv1_compose(d), w);
          const int i = d.head.max_entry();
          EXPECT_EQ(d.tail.high_shifted.max_entry(), k - i);
          QPoly rhs = (wt(d.head) * wt(d.tail.high_shifted) * ls(d.tail.low_letters))
                          .shifted(static_cast<std::size_t>(d.shift_exponent()));
          EXPECT_EQ(wt(w), rhs);
          EXPECT_TRUE(conv1_certificate(w, n).ok());
        }
      });
}

TEST(Conv2, Examples) {
  auto a = conv2_decompose(R("123"), 1, 1);
  EXPECT_EQ(a.head, R("1"));
  EXPECT_EQ(a.tail.high_shifted, R("1"));
  EXPECT_TRUE(a.tail.low_letters.empty());
  auto b = conv2_decompose(R("12"), 1, 0);
  EXPECT_EQ(b.head, R("1"));
  EXPECT_EQ(b.tail.length, 0u);
  auto c = conv2_decompose(R("1213"), 1, 1);
  EXPECT_EQ(c.head, R("1"));
  EXPECT_EQ(c.tail.high_shifted, R("1"));
  EXPECT_EQ(c.tail.low_letters, W("1"));
  EXPECT_EQ(conv2_compose(c), R("1213"));
  EXPECT_THROW(conv2_decompose(R("1213"), 1, 0), std::invalid_argument);
}

TEST(Conv2, Exhaustive) {
  for (std::size_t len = 1; len <= 7; ++len)
    for (int top = 1; top <= static_cast<int>(len); ++top)
      for_each_rg(len, top, [&](const RGWord& w) {
        for (int k = 0; k + 1 <= top; ++k) {
          const int r = top - k - 1;
          auto d = conv2_decompose(w, k, r);
          EXPECT_EQ(conv2_compose(d), w);
          EXPECT_EQ(d.head.max_entry(), k);
          EXPECT_EQ(d.tail.high_shifted.max_entry(), r);
          EXPECT_TRUE(conv2_certificate(w, k, r).ok()) << to_string(w) << " k=" << k;
        }
      });
}
