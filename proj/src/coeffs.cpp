#include "guinand/coeffs.hpp"

#include <sstream>
#include <stdexcept>

namespace guinand {

const HighFloat& pi_high() {
  static const HighFloat pi("3.14159265358979323846264338327950288419716939937510");
  return pi;
}

ScaledRational::ScaledRational(Rational value, int pi_power)
    : value_(std::move(value)), pi_power_(value_ == 0 ? 0 : pi_power) {}

HighFloat ScaledRational::to_high() const {
  HighFloat out = HighFloat(numerator(value_)) / HighFloat(denominator(value_));
  if (pi_power_ != 0) out *= boost::multiprecision::pow(pi_high(), pi_power_);
  return out;
}

double ScaledRational::to_double() const { return to_high().convert_to<double>(); }

std::string ScaledRational::to_string() const {
  std::ostringstream os;
  os << numerator(value_);
  if (denominator(value_) != 1) os << '/' << denominator(value_);
  if (pi_power_ == 1) {
    os << "*pi";
  } else if (pi_power_ != 0) {
    os << "*pi^" << pi_power_;
  }
  return os.str();
}

ScaledRational operator*(const ScaledRational& a, const ScaledRational& b) {
  return ScaledRational(a.value_ * b.value_, a.pi_power_ + b.pi_power_);
}

ScaledRational operator-(const ScaledRational& a) { return ScaledRational(-a.value_, a.pi_power_); }

BigInt double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  BigInt out = 1;
  for (int m = n; m > 1; m -= 2) out *= m;
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt out = 1;
  for (int m = 2; m <= n; ++m) out *= m;
  return out;
}

void require_odd_dimension(int k, const char* where) {
  if (k < 3 || k % 2 == 0) {
    throw std::invalid_argument(std::string(where) + ": k must be an odd integer >= 3, got " +
                                std::to_string(k));
  }
}

namespace {

// (2 pi)^(-h) split as 2^(-h) into the rational part and pi^(-h).
ScaledRational two_pi_power(int h) {
  Rational two_pow = 1;
  for (int i = 0; i < (h < 0 ? -h : h); ++i) two_pow *= 2;
  return ScaledRational(h >= 0 ? Rational(1) / two_pow : two_pow, -h);
}

}  // namespace

ScaledRational alpha(int k) {
  require_odd_dimension(k, "alpha");
  const int h = (k - 3) / 2;
  const Rational sign = (h % 2 == 0) ? 1 : -1;
  return ScaledRational(sign / Rational(double_factorial(k - 2)), 0) * two_pi_power(h);
}

ScaledRational beta(int j, int k) {
  require_odd_dimension(k, "beta");
  const int h = (k - 3) / 2;
  if (j < 0 || j > h) {
    throw std::invalid_argument("beta: j must lie in [0, (k-3)/2], got j=" + std::to_string(j) +
                                " for k=" + std::to_string(k));
  }
  const Rational sign = (j % 2 == 0) ? 1 : -1;
  const Rational value =
      sign * Rational(factorial(k - j - 3)) / Rational(factorial(j) * double_factorial(k - 2 * j - 3));
  return ScaledRational(value, 0) * two_pi_power(h);
}

std::vector<ScaledRational> beta_row(int k) {
  require_odd_dimension(k, "beta_row");
  std::vector<ScaledRational> row;
  for (int j = 0; j <= (k - 3) / 2; ++j) row.push_back(beta(j, k));
  return row;
}

std::vector<double> beta_row_double(int k) {
  std::vector<double> row;
  for (const auto& b : beta_row(k)) row.push_back(b.to_double());
  return row;
}

BesselPoly bessel_poly(int n) {
  if (n < 0) throw std::invalid_argument("bessel_poly: n must be >= 0");
  std::vector<BigInt> prev{1};
  if (n == 0) return {0, prev};
  std::vector<BigInt> cur{1, 1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] += (2 * m - 1) * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + 2] += prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

bool beta_bessel_crosscheck(int n) {
  if (n < 0) throw std::invalid_argument("beta_bessel_crosscheck: n must be >= 0");
  const BesselPoly theta = bessel_poly(n);
  const int k = 2 * n + 3;
  Rational two_pow = 1;
  for (int i = 0; i < n; ++i) two_pow *= 2;
  const ScaledRational scale(two_pow, n);
  for (int j = 0; j <= n; ++j) {
    ScaledRational term = scale * beta(j, k);
    if (j % 2 == 1) term = -term;
    if (term.pi_power() != 0 || term.den() != 1 || term.num() != theta.coeffs[static_cast<std::size_t>(j)]) {
      return false;
    }
  }
  return theta.coeffs.size() == static_cast<std::size_t>(n) + 1;
}

}  // namespace guinand
