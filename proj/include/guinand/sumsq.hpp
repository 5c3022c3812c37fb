#pragma once

// Sum-of-k-squares representation counts r_k(n) = #{m in Z^k : |m|^2 = n}.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "guinand/work_caps.hpp"

namespace guinand {

using BigInt = boost::multiprecision::cpp_int;

/// Exact table r_k(0..max_n). Immutable once built.
class RepTable {
 public:
  RepTable(int k, std::vector<BigInt> counts);

  int k() const noexcept { return k_; }
  std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(counts_.size()) - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::int64_t n) const { return counts_.at(static_cast<std::size_t>(n)); }

  /// r_k(n) rounded to double (exact below 2^53).
  double as_double(std::int64_t n) const;

 private:
  int k_;
  std::vector<BigInt> counts_;
};

/// Floor of the square root, computed in integers.
std::int64_t isqrt(std::int64_t n);
bool is_perfect_square(std::int64_t n);

/// r_k(n) for 0 <= n <= max_n by k-fold convolution with the r_1 table.
RepTable rk_table(int k, std::int64_t max_n, const WorkCaps& caps = {});

/// Dense Cauchy product: r_{k1+k2}(n) = sum_j r_{k1}(j) r_{k2}(n-j).
/// The result is truncated to the shorter of the two tables.
RepTable convolve(const RepTable& a, const RepTable& b);

/// Exhaustive count over the box [-floor(sqrt n), floor(sqrt n)]^k.
BigInt rk_bruteforce(int k, std::int64_t n, const WorkCaps& caps = {});

}  // namespace guinand
