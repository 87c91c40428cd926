#include <gtest/gtest.h>

#include "qstirl/identities.hpp"
#include "qstirl/marked.hpp"
#include "qstirl/qanalog.hpp"
#include "qstirl/stirling.hpp"

using namespace qstirl;

namespace {
RGWord R(const char* s) { return RGWord::parse(s); }
}  // namespace

TEST(Prelim, Examples) {
  MarkedPair fixed{R("111"), {}};
  EXPECT_FALSE(prelim_involution(fixed).has_value());
  EXPECT_TRUE(prelim_fixed_characterization(fixed));

  MarkedPair p{R("121"), {3}};
  ASSERT_TRUE(is_valid(p));
  auto image = prelim_involution(p);
  ASSERT_TRUE(image.has_value());
  EXPECT_EQ(image->u, R("122"));
  EXPECT_TRUE(image->marked.empty());
  EXPECT_EQ(prelim_involution(*image), p);
  EXPECT_EQ(signed_weight(*image), -signed_weight(p));

  EXPECT_THROW(prelim_involution(MarkedPair{RGWord(), {}}), std::invalid_argument);
  EXPECT_FALSE(is_valid(MarkedPair{R("121"), {2}}));
}

TEST(Prelim, ExhaustiveInvolution) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      QPoly fixed_sum;
      for (const auto& p : enumerate_marked_pairs(n, k)) {
        ASSERT_TRUE(is_valid(p));
        auto image = prelim_involution(p);
        EXPECT_EQ(image.has_value(), !prelim_fixed_characterization(p));
        if (image) {
          EXPECT_TRUE(is_valid(*image));
          EXPECT_EQ(image->u.max_entry(), k);
          EXPECT_EQ(prelim_involution(*image), p);
          EXPECT_EQ(signed_weight(*image), -signed_weight(p));
          EXPECT_EQ((image->marked.size() + p.marked.size()) % 2, 1u);
        } else {
          fixed_sum += signed_weight(p);
        }
      }
      if (k >= 1) {
        EXPECT_EQ(fixed_sum, std::get<QPoly>(check_carlitz_prelim(static_cast<long>(n), k).rhs)) << n << "," << k;
      }
    }
  }
}

TEST(Prelim, SweepTotals) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      auto s = prelim_sweep(n, k);
      EXPECT_TRUE(s.ok());
      EXPECT_EQ(s.total_weight, (QPoly{1, -1}.pow(n - static_cast<std::size_t>(k)) * stirling_rec(static_cast<long>(n), k)));
      EXPECT_EQ(s.total_weight, s.fixed_weight);
    }
  }
}

TEST(Carlitz2, FixedExample) {
  MarkedTriple t{{0, 1, 1}, {3}};
  ASSERT_TRUE(is_valid(t, 1));
  EXPECT_EQ(support_word(t), R("11"));
  EXPECT_EQ(nlrm_positions(t), (std::vector<std::size_t>{3}));
  EXPECT_TRUE(carlitz2_fixed_characterization(t));
  EXPECT_FALSE(carlitz2_involutions(t).has_value());
  EXPECT_EQ(signed_weight(t), (QPoly{0, 1}));
}

TEST(Carlitz2, SumAtTwoOne) {
  QPoly total;
  for (const auto& t : enumerate_marked_triples(2, 1)) total += signed_weight(t);
  EXPECT_EQ(total, (QPoly{1, 1}));
  EXPECT_EQ(total, (QPoly{2} + QPoly{-1, 1} * stirling_rec(2, 1)));
}

TEST(Carlitz2, ExhaustiveStages) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      QPoly total, fixed;
      for (const auto& t : enumerate_marked_triples(n, k)) {
        ASSERT_TRUE(is_valid(t, k));
        total += signed_weight(t);
        if (auto s1 = carlitz2_stage1(t)) {
          EXPECT_EQ(carlitz2_stage1(*s1), t);
          EXPECT_EQ(signed_weight(*s1), -signed_weight(t));
          EXPECT_TRUE(is_valid(*s1, k));
        }
        auto img = carlitz2_involutions(t);
        EXPECT_EQ(img.has_value(), !carlitz2_fixed_characterization(t));
        if (img) {
          EXPECT_TRUE(is_valid(img->image, k));
          auto back = carlitz2_involutions(img->image);
          ASSERT_TRUE(back.has_value());
          EXPECT_EQ(back->image, t);
          EXPECT_EQ(back->stage, img->stage);
          EXPECT_EQ(signed_weight(img->image), -signed_weight(t));
        } else {
          fixed += signed_weight(t);
        }
      }
      EXPECT_EQ(total, q_binomial(static_cast<long>(n), k)) << n << "," << k;
      EXPECT_EQ(fixed, q_binomial(static_cast<long>(n), k)) << n << "," << k;
    }
  }
}

TEST(Carlitz2, Sweep) {
  auto s = carlitz2_sweep(4, 2, 3);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.fixed_weight, q_binomial(4, 2));
  EXPECT_EQ(s.certificates.size(), 3u);
}
