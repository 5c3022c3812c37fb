#pragma once

// Exact coefficients of the odd-k summation formulas and radial transforms,
// plus the Bessel polynomials they are tied to.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace guinand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// pi to 50 decimal digits.
const HighFloat& pi_high();

/// Exact value (num/den) * pi^pi_power, kept in lowest terms with den > 0.
/// Zero is normalized to pi_power == 0.
class ScaledRational {
 public:
  ScaledRational() = default;
  ScaledRational(Rational value, int pi_power);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }
  const Rational& rational() const noexcept { return value_; }
  int pi_power() const noexcept { return pi_power_; }
  int sign() const { return value_.sign(); }

  HighFloat to_high() const;
  double to_double() const;
  /// e.g. "-1/6*pi^-1", "1", "3/4*pi^-2".
  std::string to_string() const;

  friend ScaledRational operator*(const ScaledRational& a, const ScaledRational& b);
  friend ScaledRational operator-(const ScaledRational& a);
  friend bool operator==(const ScaledRational& a, const ScaledRational& b) = default;

 private:
  Rational value_{0};
  int pi_power_ = 0;
};

/// n!! with (-1)!! = 0!! = 1.
BigInt double_factorial(int n);
BigInt factorial(int n);

/// (-1)^((k-3)/2) / (k-2)!! * (2 pi)^(-(k-3)/2), k odd >= 3.
ScaledRational alpha(int k);
/// (-1)^j (k-j-3)! / (j! (k-2j-3)!!) * (2 pi)^(-(k-3)/2), 0 <= j <= (k-3)/2.
ScaledRational beta(int j, int k);
/// beta(0,k) .. beta((k-3)/2, k).
std::vector<ScaledRational> beta_row(int k);
/// The same row as doubles.
std::vector<double> beta_row_double(int k);

struct BesselPoly {
  int n = 0;
  std::vector<BigInt> coeffs;  // ascending powers of z
};

/// theta_0 = 1, theta_1 = z + 1, theta_n = (2n-1) theta_{n-1} + z^2 theta_{n-2}.
BesselPoly bessel_poly(int n);

/// True iff theta_n(z) == (2 pi)^n sum_j beta(j, 2n+3) (-z)^j coefficientwise, exactly.
bool beta_bessel_crosscheck(int n);

void require_odd_dimension(int k, const char* where);

}  // namespace guinand
