#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qstirl/qanalog.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/qseries.hpp"

using namespace qstirl;

TEST(QPoly, NormalizesTrailingZeros) {
  QPoly p(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (QPoly{1, 2}));
  EXPECT_TRUE(QPoly(std::vector<Integer>{0, 0}).is_zero());
  EXPECT_EQ(QPoly().degree(), -1);
}

TEST(QPoly, RingOperations) {
  QPoly a{1, 1};
  EXPECT_EQ(a * a, (QPoly{1, 2, 1}));
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(QPoly({1, 1, 1}).eval(1), 3);
  EXPECT_EQ(QPoly({1, 1, 1}).eval(2), 7);
  EXPECT_EQ(a.shifted(2), (QPoly{0, 0, 1, 1}));
  EXPECT_EQ(a.scaled(-3), (QPoly{-3, -3}));
  EXPECT_EQ(a.pow(0), QPoly{1});
  EXPECT_EQ(QPoly().pow(0), QPoly{1});
  EXPECT_TRUE(QPoly().pow(3).is_zero());
}

TEST(QPoly, Rendering) {
  EXPECT_EQ(to_string(QPoly{}), "0");
  EXPECT_EQ(to_string(QPoly{2, 1}), "2 + q");
  EXPECT_EQ(to_string(QPoly{2, 1, 3}), "2 + q + 3*q^2");
  EXPECT_EQ(to_string(QPoly{1, -1}), "1 - q");
  EXPECT_EQ(to_string(QPoly{0, -1}), "-q");
  EXPECT_EQ(to_string(QPoly{0, 0, -2}), "-2*q^2");
  std::ostringstream os;
  os << QPoly{3, 3, 1};
  EXPECT_EQ(os.str(), "3 + 3*q + q^2");
}

TEST(QPoly, BigCoefficientsDoNotOverflow) {
  QPoly p = QPoly{1, -1}.pow(80);
  EXPECT_EQ(p.coeff(40), Integer("107507208733336176461620"));
  EXPECT_EQ(p.eval(1), 0);
}

TEST(QPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  auto random_poly = [&] {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return QPoly(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).eval(3), a.eval(3) * b.eval(3));
  }
}

TEST(QAnalog, QInt) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), QPoly{1});
  EXPECT_EQ(q_int(3), (QPoly{1, 1, 1}));
}

TEST(QAnalog, QFactorial) {
  EXPECT_EQ(q_factorial(0), QPoly{1});
  EXPECT_EQ(q_factorial(2), (QPoly{1, 1}));
  EXPECT_EQ(q_factorial(3), (QPoly{1, 2, 2, 1}));
  EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QAnalog, QBinomial) {
  EXPECT_EQ(q_binomial(4, 2), (QPoly{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(5, 5), QPoly{1});
  EXPECT_TRUE(q_binomial(3, 5).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  EXPECT_EQ(q_binomial(0, 0), QPoly{1});
  // product formula at q = 2: [4 choose 2]_2 = (2^4-1)(2^3-1)/((2^2-1)(2-1)) = 35
  EXPECT_EQ(q_binomial(4, 2).eval(2), 35);
}

TEST(QAnalog, QBinomialMatchesSubsetSums) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(oracle::from(q_binomial(n, k)), oracle::gaussian(n, k)) << n << "," << k;
}

TEST(QAnalog, QPascalAndSpecialization) {
  for (long n = 1; n <= 12; ++n) {
    for (long k = 1; k <= n; ++k) {
      EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(static_cast<std::size_t>(k)));
    }
  }
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      EXPECT_EQ(q_binomial(n, k).eval(1), oracle::classical_binomial(static_cast<int>(n), static_cast<int>(k)));
}

TEST(QAnalog, QFalling) {
  EXPECT_EQ(q_falling(5, 0), QPoly{1});
  EXPECT_EQ(q_falling(2, 1), (QPoly{1, 1}));
  EXPECT_EQ(q_falling(3, 2), (QPoly{1, 1, 1} * QPoly{1, 1}));
  EXPECT_THROW(q_falling(2, 3), std::invalid_argument);
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(q_falling(n, k) * q_factorial(n - k), q_factorial(n));
}

TEST(QAnalog, IntegerBinomialAndSignedPowers) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(neg_q_power(2, 3), (QPoly{0, 0, 0, 0, 0, 0, -1}));
  EXPECT_EQ(neg_q_power(0, 2), QPoly{1});
  EXPECT_EQ(neg_q_power(5, 0), QPoly{1});
}

TEST(QSeries, Geometric) {
  EXPECT_EQ(series_geom(QPoly{1}, 3), QSeries(3, {QPoly{1}, QPoly{1}, QPoly{1}, QPoly{1}}));
  EXPECT_EQ(series_geom(QPoly{1, 1}, 2), QSeries(2, {QPoly{1}, QPoly{1, 1}, QPoly{1, 2, 1}}));
  EXPECT_EQ(series_geom(QPoly{}, 5), QSeries::one(5));
}

TEST(QSeries, ProductAndCoefficients) {
  QSeries a(2, {QPoly{1}, QPoly{1}});
  QSeries b(2, {QPoly{1}, QPoly{-1}});
  EXPECT_EQ(a * b, QSeries(2, {QPoly{1}, QPoly{}, QPoly{-1}}));
  EXPECT_EQ(series_geom(QPoly{1, 1}, 3).coeff(2), (QPoly{1, 2, 1}));
  EXPECT_THROW(a.coeff(3), std::out_of_range);
  EXPECT_THROW(a * QSeries(3), std::invalid_argument);
  EXPECT_THROW(a += QSeries(3), std::invalid_argument);
}

TEST(QSeries, ShiftTruncates) {
  QSeries g = series_geom(QPoly{1}, 3).shifted(2);
  EXPECT_EQ(g, QSeries(3, {QPoly{}, QPoly{}, QPoly{1}, QPoly{1}}));
  EXPECT_EQ(to_string(QSeries(2, {QPoly{1}, QPoly{1, 1}})), "(1) + (1 + q)*t + O(t^3)");
}
