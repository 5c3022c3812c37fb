#include "guinand/tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace guinand {

namespace {

double log_h(std::span<const EnvelopeTerm> terms, double x) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.coeff <= 0.0) continue;
    const double l = std::log(t.coeff) + 0.5 * t.half_power * std::log(x) - std::numbers::pi * t.scale * x;
    logs.push_back(l);
    best = std::max(best, l);
  }
  if (!std::isfinite(best)) return best;
  double s = 0.0;
  for (double l : logs) s += std::exp(l - best);
  return best + std::log(s);
}

}  // namespace

double series_tail_bound(std::span<const EnvelopeTerm> terms, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("series_tail_bound: N must be >= 0");
  double a_min = std::numeric_limits<double>::infinity();
  double d = 0.0;
  bool any = false;
  for (const auto& t : terms) {
    if (t.coeff <= 0.0) continue;
    if (!(t.scale > 0.0)) throw std::invalid_argument("series_tail_bound: envelope needs Gaussian decay");
    any = true;
    a_min = std::min(a_min, t.scale);
    d = std::max(d, t.half_power);
  }
  if (!any) return 0.0;

  const double decay = std::exp(-std::numbers::pi * a_min);
  const double target = 0.5 * (1.0 + decay);
  auto rho = [&](double n) { return std::pow(1.0 + 1.0 / n, 0.5 * d) * decay; };

  // First integer M >= 1 with rho(M) <= target.
  std::int64_t m0 = 1;
  if (d > 0.0) {
    const double q = std::pow(target / decay, 2.0 / d) - 1.0;
    m0 = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(1.0 / q)));
    while (rho(static_cast<double>(m0)) > target) ++m0;
  }

  double log_total = -std::numeric_limits<double>::infinity();
  auto accumulate = [&](double l) {
    if (!std::isfinite(l)) return;
    if (!std::isfinite(log_total)) {
      log_total = l;
    } else {
      const double hi = std::max(log_total, l);
      log_total = hi + std::log(std::exp(log_total - hi) + std::exp(l - hi));
    }
  };
  const std::int64_t start = N + 1;
  const std::int64_t m = std::max(start, m0);
  for (std::int64_t n = start; n < m; ++n) accumulate(log_h(terms, static_cast<double>(n)));
  const double r = rho(static_cast<double>(m));
  accumulate(log_h(terms, static_cast<double>(m)) - std::log1p(-r));
  return std::exp(log_total);
}

std::vector<EnvelopeTerm> lattice_count_envelope(int k) {
  std::vector<EnvelopeTerm> out;
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    out.push_back({binom * std::pow(2.0, i), static_cast<double>(i), 0.0});
    binom = binom * (k - i) / (i + 1);
  }
  return out;
}

std::vector<EnvelopeTerm> multiply(std::span<const EnvelopeTerm> a, std::span<const EnvelopeTerm> b) {
  std::vector<EnvelopeTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.push_back({x.coeff * y.coeff, x.half_power + y.half_power, x.scale + y.scale});
    }
  }
  return out;
}

}  // namespace guinand
