#include <gtest/gtest.h>

#include <cmath>

#include "guinand/coeffs.hpp"
#include "guinand/radial.hpp"
#include "oracles.hpp"

using namespace guinand;

namespace {

ScaledRational sr(long num, long den, int p) { return ScaledRational(Rational(num, den), p); }

long double naive_factorial(int n) {
  long double out = 1;
  for (int m = 2; m <= n; ++m) out *= m;
  return out;
}

long double naive_double_factorial(int n) {
  long double out = 1;
  for (int m = n; m > 1; m -= 2) out *= m;
  return out;
}

}  // namespace

TEST(Coeffs, GuinandAndFiveDimensional) {
  EXPECT_EQ(alpha(3), sr(1, 1, 0));
  EXPECT_EQ(beta(0, 3), sr(1, 1, 0));
  EXPECT_EQ(alpha(5), sr(-1, 6, -1));
  EXPECT_EQ(beta(0, 5), sr(1, 2, -1));
  EXPECT_EQ(beta(1, 5), sr(-1, 2, -1));
}

TEST(Coeffs, HigherRows) {
  EXPECT_EQ(alpha(7), sr(1, 60, -2));
  EXPECT_EQ(alpha(9), sr(-1, 840, -3));
  const std::vector<ScaledRational> row7{sr(3, 4, -2), sr(-3, 4, -2), sr(1, 4, -2)};
  EXPECT_EQ(beta_row(7), row7);
}

TEST(Coeffs, MatchFloatingFormula) {
  for (int k = 3; k <= 21; k += 2) {
    const int h = (k - 3) / 2;
    const long double scale = std::pow(2.0L * oracle::kPi, -h);
    const long double a = (h % 2 ? -1.0L : 1.0L) / naive_double_factorial(k - 2) * scale;
    EXPECT_NEAR(alpha(k).to_double(), static_cast<double>(a), 1e-15 * std::abs(static_cast<double>(a))) << k;
    const auto row = beta_row_double(k);
    ASSERT_EQ(row.size(), static_cast<std::size_t>(h + 1));
    for (int j = 0; j <= h; ++j) {
      const long double b = (j % 2 ? -1.0L : 1.0L) * naive_factorial(k - j - 3) /
                            (naive_factorial(j) * naive_double_factorial(k - 2 * j - 3)) * scale;
      EXPECT_NEAR(row[j], static_cast<double>(b), 1e-14 * std::abs(static_cast<double>(b))) << k << "," << j;
    }
  }
}

TEST(Coeffs, Formatting) {
  EXPECT_EQ(alpha(5).to_string(), "-1/6*pi^-1");
  EXPECT_EQ(alpha(7).to_string(), "1/60*pi^-2");
  EXPECT_EQ(alpha(3).to_string(), "1");
  EXPECT_EQ(sr(4, 1, 1).to_string(), "4*pi");
  EXPECT_EQ(sr(0, 1, 5).pi_power(), 0);
}

TEST(Coeffs, DoubleFactorial) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_THROW(double_factorial(-2), std::invalid_argument);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Coeffs, Errors) {
  EXPECT_THROW(alpha(4), std::invalid_argument);
  EXPECT_THROW(alpha(1), std::invalid_argument);
  EXPECT_THROW(beta(2, 5), std::invalid_argument);
  EXPECT_THROW(beta(-1, 5), std::invalid_argument);
}

TEST(BesselPoly, Recurrence) {
  EXPECT_EQ(bessel_poly(0).coeffs, std::vector<BigInt>{1});
  EXPECT_EQ(bessel_poly(1).coeffs, (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(bessel_poly(2).coeffs, (std::vector<BigInt>{3, 3, 1}));
  EXPECT_EQ(bessel_poly(3).coeffs, (std::vector<BigInt>{15, 15, 6, 1}));
}

TEST(BesselPoly, MatchesBetaRows) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(beta_bessel_crosscheck(n)) << n;
}

TEST(SphereArea, ExactValues) {
  EXPECT_EQ(sphere_area(3), sr(4, 1, 1));
  EXPECT_EQ(sphere_area(5), sr(8, 3, 2));
  EXPECT_EQ(sphere_area(7), sr(16, 15, 3));
  for (int k = 3; k <= 15; k += 2) {
    EXPECT_NEAR(sphere_area(k).to_double(), static_cast<double>(oracle::sphere_area(k)),
                1e-14 * static_cast<double>(oracle::sphere_area(k)));
  }
}
