#pragma once

// Both sides of the odd-k summation formulas
//
//   phi'(0) + sum_n r_k(n)/sqrt(n) phi(sqrt n)
//     = i alpha_k psi^(k-2)(0) + i sum_n r_k(n)/n^((k-2)/2) sum_j beta_jk n^(j/2) psi^(j)(sqrt n),
//
// psi = fourier(phi), phi odd, and of the shifted-lattice variant, evaluated
// on truncations with tail certificates.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "guinand/schwartz.hpp"
#include "guinand/sumsq.hpp"
#include "guinand/work_caps.hpp"

namespace guinand {

enum class Identity { guinand, general_k, k5, shifted, duality };

std::string to_string(Identity id);

struct Truncation {
  std::optional<std::int64_t> N;
  std::optional<double> r_time;
  std::optional<double> r_freq;
};

struct VerificationReport {
  Identity identity = Identity::general_k;
  int k = 0;
  std::complex<double> lhs{};
  std::complex<double> rhs{};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tail_bound_lhs = 0.0;
  double tail_bound_rhs = 0.0;
  std::int64_t terms_used = 0;
  Truncation truncation;
  double tol = 0.0;
  // The printed k=3 / k=5 right-hand side, when it exists, and its relative
  // distance from the general-k evaluation.
  std::optional<std::complex<double>> specialized_rhs;
  std::optional<double> specialized_rel_diff;
  bool passed = false;
};

/// Agreement required between the k=3/k=5 printed forms and the general path.
inline constexpr double kSpecializedTolerance = 1e-13;

/// |a-b| / max(|a|, |b|, 1e-300)
double relative_residual(std::complex<double> a, std::complex<double> b);

std::complex<double> lhs_general(int k, const GaussPoly& phi, std::int64_t N);
std::complex<double> lhs_general(const RepTable& table, const GaussPoly& phi);

std::complex<double> rhs_general(int k, const GaussPoly& psi, std::int64_t N);
std::complex<double> rhs_general(const RepTable& table, const GaussPoly& psi);

/// i psi'(0) + i sum r_3(n)/sqrt(n) psi(sqrt n)
std::complex<double> rhs_guinand(const RepTable& table, const GaussPoly& psi);
/// -i/(6 pi) psi'''(0) + i/(2 pi) sum r_5(n)/n^(3/2) [psi(sqrt n) - sqrt(n) psi'(sqrt n)]
std::complex<double> rhs_k5(const RepTable& table, const GaussPoly& psi);

/// Requires phi odd; throws std::invalid_argument otherwise.
VerificationReport verify(int k, const GaussPoly& phi, std::int64_t N, double tol);

/// |<sigma_k_hat, phi> - <sigma_k, phi_hat>| at truncation N (any phi).
VerificationReport verify_duality(int k, const GaussPoly& phi, std::int64_t N, double tol);

/// Bound on sum_{n>N} r_k(n) n^(-1/2) |f(sqrt n)| using r_k(n) <= (2 sqrt(n) + 1)^k.
double tail_bound(int k, const GaussPoly& f, std::int64_t N);
/// Bound on sum_{n>N} r_k(n) sum_j |beta_jk| n^((j-k+2)/2) |psi^(j)(sqrt n)|.
double rhs_tail_bound(int k, const GaussPoly& psi, std::int64_t N);

struct ShellPartial {
  std::int64_t n = 0;
  double node = 0.0;
  std::complex<double> lhs{};
  std::complex<double> rhs{};
};

/// Running sums of both sides after each shell n = 0..N (n = 0 is the origin term).
std::vector<ShellPartial> shell_partial_sums(int k, const GaussPoly& phi, std::int64_t N);

struct LatticeNode {
  std::vector<std::int64_t> m;
  double node = 0.0;  // |m + shift|
  double r2 = 0.0;    // |m + shift|^2
};

/// All m in Z^k with |m + shift| <= R, in lexicographic order of m.
/// Throws std::invalid_argument if shift is in Z^k and WorkCapExceeded when the
/// estimated point count exceeds caps.max_lattice_points (or k >= 7 and R > 6).
std::vector<LatticeNode> shifted_nodes(int k, std::span<const double> shift, double R, const WorkCaps& caps = {});

/// <sigma, phi> for sigma = sum_m e^{2 pi i <m,xi>}/|m+eta| (delta_|m+eta| - delta_-|m+eta|)
/// against the pairing of its transform with reflect(fourier(phi)).
VerificationReport verify_shifted(int k, std::span<const double> eta, std::span<const double> xi,
                                  const GaussPoly& phi, double r_time, double r_freq, double tol,
                                  const WorkCaps& caps = {});

/// The left side summed point by point, without building a comb.
std::complex<double> shifted_lhs_direct(int k, std::span<const double> eta, std::span<const double> xi,
                                        const GaussPoly& phi, double r_time, const WorkCaps& caps = {});

nlohmann::json to_json(const VerificationReport& report);
void write_shell_csv(std::ostream& os, std::span<const ShellPartial> rows);

}  // namespace guinand
