#include <gtest/gtest.h>

#include <set>

#include "qstirl/det_tuples.hpp"
#include "qstirl/stirling.hpp"

using namespace qstirl;

namespace {
RGWord R(const char* s) { return RGWord::parse(s); }
}  // namespace

TEST(DetTuples, ClassifyExamples) {
  DetTuple t1{1, 1, {0, 1}, {R("1"), R("122")}};
  ASSERT_TRUE(is_valid(t1));
  EXPECT_EQ(repeat_counts(t1), (std::vector<int>{0, 1}));
  EXPECT_EQ(det_classify(t1), DetClass::T1);
  EXPECT_THROW(det_involution(t1), std::invalid_argument);

  DetTuple t2{1, 1, {1, 0}, {R("12"), R("11")}};
  ASSERT_TRUE(is_valid(t2));
  EXPECT_EQ(repeat_counts(t2), (std::vector<int>{0, 0}));
  EXPECT_EQ(det_classify(t2), DetClass::T2);
  DetTuple image = det_involution(t2);
  EXPECT_TRUE(is_valid(image));
  EXPECT_EQ(image.sigma, (std::vector<int>{0, 1}));
  EXPECT_EQ(det_involution(image), t2);
  EXPECT_EQ(det_signed_weight(image), -det_signed_weight(t2));

  DetTuple broken{1, 1, {0, 1}, {R("1"), R("12")}};
  EXPECT_FALSE(is_valid(broken));
}

TEST(DetTuples, PermutationSign) {
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({1, 2, 0}), 1);
}

TEST(DetTuples, SignedSumIsTheDeterminant) {
  for (long n = 0; n <= 2; ++n) {
    for (long s = 0; s <= 2; ++s) {
      auto all = enumerate_det_tuples(n, s);
      QPoly total, t1, t2;
      for (const auto& t : all) {
        ASSERT_TRUE(is_valid(t));
        total += det_signed_weight(t);
        if (det_classify(t) == DetClass::T1) {
          t1 += det_signed_weight(t);
          std::vector<int> id(static_cast<std::size_t>(n) + 1);
          for (int i = 0; i <= n; ++i) id[static_cast<std::size_t>(i)] = i;
          EXPECT_EQ(t.sigma, id);
          auto a = repeat_counts(t);
          for (int i = 0; i <= n; ++i) EXPECT_EQ(a[static_cast<std::size_t>(i)], i);
        } else {
          t2 += det_signed_weight(t);
        }
      }
      EXPECT_EQ(total, hankel_det(n, s)) << n << "," << s;
      EXPECT_EQ(t1, hankel_rhs(n, s));
      EXPECT_TRUE(t2.is_zero());
    }
  }
  EXPECT_EQ(enumerate_det_tuples(0, 2).size(), 1u);
  EXPECT_THROW(enumerate_det_tuples(3, 0), std::invalid_argument);
}

TEST(DetTuples, RepeatCountsBounded) {
  for (long n = 0; n <= 2; ++n)
    for (long s = 0; s <= 2; ++s)
      for (const auto& t : enumerate_det_tuples(n, s)) {
        auto a = repeat_counts(t);
        for (std::size_t i = 0; i < a.size(); ++i)
          EXPECT_LE(a[i], std::min<int>(static_cast<int>(i), t.sigma[i]));
      }
}

TEST(DetTuples, InvolutionOnT2) {
  for (long n = 1; n <= 2; ++n) {
    for (long s = 0; s <= 2; ++s) {
      for (const auto& t : enumerate_det_tuples(n, s)) {
        if (det_classify(t) != DetClass::T2) continue;
        DetTuple u = det_involution(t);
        EXPECT_TRUE(is_valid(u)) << to_string(t);
        EXPECT_EQ(det_classify(u), DetClass::T2);
        EXPECT_EQ(det_involution(u), t);
        EXPECT_NE(u, t);
        EXPECT_EQ(det_weight(u), det_weight(t));
        EXPECT_EQ(permutation_sign(u.sigma), -permutation_sign(t.sigma));
        EXPECT_TRUE(det_certificate(t).ok());
      }
    }
  }
}

TEST(DetTuples, Sweep) {
  DetSweep d = det_sweep(1, 1, 4);
  EXPECT_TRUE(d.summary.ok());
  EXPECT_EQ(d.t1_weight, (QPoly{1, 1}));
  EXPECT_TRUE(d.t2_weight.is_zero());
  EXPECT_LE(d.summary.certificates.size(), 5u);
}
