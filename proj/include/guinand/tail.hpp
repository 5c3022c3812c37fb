#pragma once

// Upper bounds for discarded tails of shell sums.

#include <cstdint>
#include <span>
#include <vector>

namespace guinand {

/// c * x^(half_power/2) * exp(-pi * scale * x), with c >= 0 and scale > 0.
struct EnvelopeTerm {
  double coeff = 0.0;
  double half_power = 0.0;
  double scale = 1.0;
};

/// Bound on sum_{n > N} h(n), h(n) = sum of the envelope terms at x = n.
///
/// For n >= M the ratio h(n+1)/h(n) is at most
/// rho(n) = (1 + 1/n)^(D/2) exp(-pi a_min), D = max positive half_power, and
/// rho is decreasing, so the tail from M is at most h(M)/(1 - rho(M)).
/// Terms between N+1 and the first M with rho(M) <= (1 + exp(-pi a_min))/2
/// are summed explicitly. Evaluated in log space; results below the double
/// range are returned as 0. The bound is nonincreasing in N.
double series_tail_bound(std::span<const EnvelopeTerm> terms, std::int64_t N);

/// Expands (2 sqrt(x) + 1)^k into envelope terms with half_power i and scale 0
/// (caller multiplies by a decaying factor).
std::vector<EnvelopeTerm> lattice_count_envelope(int k);

/// Products of two envelope term lists (half powers add, scales add).
std::vector<EnvelopeTerm> multiply(std::span<const EnvelopeTerm> a, std::span<const EnvelopeTerm> b);

}  // namespace guinand
