#pragma once

// Reference values computed without the library: direct lattice counting,
// one-dimensional theta products and textbook closed forms.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr long double kPi = std::numbers::pi_v<long double>;

/// #{m in Z^k : |m|^2 = n} by an odometer over [-s, s]^k.
inline std::int64_t count_squares(int k, std::int64_t n) {
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  std::vector<std::int64_t> m(static_cast<std::size_t>(k), -s);
  std::int64_t count = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto v : m) sum += v * v;
    count += (sum == n);
    int i = 0;
    while (i < k && m[i] == s) m[i++] = -s;
    if (i == k) break;
    ++m[i];
  }
  return count;
}

/// sum_{m in Z} exp(-pi a m^2)
inline long double theta(long double a) {
  long double sum = 1.0L;
  for (int m = 1; m < 200; ++m) {
    const long double term = 2.0L * std::exp(-kPi * a * m * m);
    sum += term;
    if (term < 1e-40L) break;
  }
  return sum;
}

/// 1 + sum_{n>=1} r_k(n) exp(-pi a n) = theta(a)^k
inline long double lattice_gaussian(int k, long double a) { return std::pow(theta(a), k); }

/// sum_m e^{2 pi i <m, xi>} f(|m + eta|) restricted to |m+eta| <= R, by a plain
/// triple loop (k = 3 only).
template <class F>
std::complex<double> shifted_sum3(const double* eta, const double* xi, double R, F f) {
  std::complex<double> total{};
  const int b = static_cast<int>(R) + 2;
  for (int a0 = -b; a0 <= b; ++a0)
    for (int a1 = -b; a1 <= b; ++a1)
      for (int a2 = -b; a2 <= b; ++a2) {
        const double x0 = a0 + eta[0], x1 = a1 + eta[1], x2 = a2 + eta[2];
        const double r = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2);
        if (r > R) continue;
        const double turns = a0 * xi[0] + a1 * xi[1] + a2 * xi[2];
        total += std::polar(1.0, 2.0 * std::numbers::pi * turns) * f(r);
      }
  return total;
}

/// Surface area of S^(k-1): 2 pi^(k/2) / Gamma(k/2).
inline long double sphere_area(int k) { return 2.0L * std::pow(kPi, k / 2.0L) / std::tgamma(k / 2.0L); }

/// int_{R^k} |x|^2 exp(-pi |x|^2) dx = k / (2 pi)
inline long double second_moment(int k) { return k / (2.0L * kPi); }

}  // namespace oracle
