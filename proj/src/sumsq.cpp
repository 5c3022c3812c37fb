#include "guinand/sumsq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "guinand/errors.hpp"

namespace guinand {

RepTable::RepTable(int k, std::vector<BigInt> counts) : k_(k), counts_(std::move(counts)) {
  if (k_ < 1) throw std::invalid_argument("RepTable: k must be >= 1");
  if (counts_.empty()) throw std::invalid_argument("RepTable: empty table");
}

double RepTable::as_double(std::int64_t n) const { return (*this)[n].convert_to<double>(); }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  // Seed from floating point, then correct; the seed may be off by one near 2^53.
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

RepTable rk_table(int k, std::int64_t max_n, const WorkCaps& caps) {
  if (k < 1) throw std::invalid_argument("rk_table: k must be >= 1, got " + std::to_string(k));
  if (max_n < 0) throw std::invalid_argument("rk_table: max_n must be >= 0");
  if (max_n > caps.max_table_n) {
    throw WorkCapExceeded("rk_table: table size " + std::to_string(max_n + 1) +
                          " exceeds the cap of " + std::to_string(caps.max_table_n + 1) + " entries");
  }
  const auto size = static_cast<std::size_t>(max_n) + 1;

  std::vector<BigInt> r1(size, 0);
  r1[0] = 1;
  for (std::int64_t m = 1; m * m <= max_n; ++m) r1[static_cast<std::size_t>(m * m)] = 2;

  // r_1 is supported on squares only, so each convolution step costs N*sqrt(N).
  std::vector<BigInt> current = r1;
  std::vector<BigInt> next(size);
  for (int step = 1; step < k; ++step) {
    for (std::size_t n = 0; n < size; ++n) {
      BigInt acc = current[n];
      for (std::int64_t m = 1; m * m <= static_cast<std::int64_t>(n); ++m) {
        acc += 2 * current[n - static_cast<std::size_t>(m * m)];
      }
      next[n] = std::move(acc);
    }
    current.swap(next);
  }
  return RepTable(k, std::move(current));
}

RepTable convolve(const RepTable& a, const RepTable& b) {
  const std::int64_t n_max = std::min(a.max_n(), b.max_n());
  std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::int64_t j = 0; j <= n; ++j) acc += a[j] * b[n - j];
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return RepTable(a.k() + b.k(), std::move(out));
}

namespace {

// Counts vectors in the remaining `dims` coordinates with squared norm `remaining`.
std::int64_t count_box(int dims, std::int64_t remaining, std::int64_t bound) {
  if (dims == 0) return remaining == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    const std::int64_t left = remaining - x * x;
    if (left < 0) continue;
    total += count_box(dims - 1, left, bound);
  }
  return total;
}

}  // namespace

BigInt rk_bruteforce(int k, std::int64_t n, const WorkCaps& caps) {
  if (k < 1) throw std::invalid_argument("rk_bruteforce: k must be >= 1");
  if (n < 0) throw std::invalid_argument("rk_bruteforce: n must be >= 0");
  const std::int64_t bound = isqrt(n);
  const double side = static_cast<double>(2 * bound + 1);
  const double work = static_cast<double>(k) * std::pow(side, k);
  if (work > static_cast<double>(caps.max_oracle_points)) {
    throw WorkCapExceeded("rk_bruteforce: k*(2*floor(sqrt(n))+1)^k = " + std::to_string(work) +
                          " exceeds the cap of " + std::to_string(caps.max_oracle_points));
  }
  return BigInt(count_box(k, n, bound));
}

}  // namespace guinand
