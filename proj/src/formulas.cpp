#include "guinand/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "guinand/atoms.hpp"
#include "guinand/coeffs.hpp"
#include "guinand/compensated.hpp"
#include "guinand/tail.hpp"

namespace guinand {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_odd_function(const GaussPoly& phi, const char* where) {
  if (!phi.is_odd()) {
    throw std::invalid_argument(std::string(where) + ": test function must be odd (apply odd_part first)");
  }
}

std::int64_t nonzero_shells(const RepTable& table) {
  std::int64_t count = 0;
  for (std::int64_t n = 1; n <= table.max_n(); ++n) count += (table[n] != 0);
  return count;
}

// Envelope terms of |f(sqrt x)| * weight * x^(shift/2).
void append_envelope(std::vector<EnvelopeTerm>& out, const GaussPoly& f, double weight, double shift) {
  for (const auto& term : f.terms()) {
    for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
      const double c = std::abs(term.coeffs[m]) * weight;
      if (c > 0.0) out.push_back({c, static_cast<double>(m) + shift, term.scale});
    }
  }
}

std::complex<double> rhs_shell(const RepTable& table, const std::vector<GaussPoly>& ladder,
                               const std::vector<double>& betas, std::int64_t n) {
  const int k = table.k();
  const double root = std::sqrt(static_cast<double>(n));
  ComplexCompensatedSum inner;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const double power = std::pow(static_cast<double>(n), 0.5 * (static_cast<double>(j) - k + 2));
    inner.add(betas[j] * power * eval(ladder[j], root));
  }
  return kI * table.as_double(n) * inner.value();
}

}  // namespace

std::string to_string(Identity id) {
  switch (id) {
    case Identity::guinand: return "guinand";
    case Identity::general_k: return "general-k";
    case Identity::k5: return "k5";
    case Identity::shifted: return "shifted";
    case Identity::duality: return "duality";
  }
  return "unknown";
}

double relative_residual(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

std::complex<double> lhs_general(const RepTable& table, const GaussPoly& phi) {
  require_odd_function(phi, "lhs_general");
  ComplexCompensatedSum sum;
  sum.add(eval(derivative(phi, 1), 0.0));
  for (std::int64_t n = 1; n <= table.max_n(); ++n) {
    if (table[n] == 0) continue;
    const double root = std::sqrt(static_cast<double>(n));
    sum.add(table.as_double(n) / root * eval(phi, root));
  }
  return sum.value();
}

std::complex<double> lhs_general(int k, const GaussPoly& phi, std::int64_t N) {
  require_odd_dimension(k, "lhs_general");
  return lhs_general(rk_table(k, N), phi);
}

std::complex<double> rhs_general(const RepTable& table, const GaussPoly& psi) {
  const int k = table.k();
  require_odd_dimension(k, "rhs_general");
  const auto betas = beta_row_double(k);
  const auto ladder = derivative_ladder(psi, k - 2);
  ComplexCompensatedSum sum;
  sum.add(kI * alpha(k).to_double() * eval(ladder.back(), 0.0));
  for (std::int64_t n = 1; n <= table.max_n(); ++n) {
    if (table[n] == 0) continue;
    sum.add(rhs_shell(table, ladder, betas, n));
  }
  return sum.value();
}

std::complex<double> rhs_general(int k, const GaussPoly& psi, std::int64_t N) {
  require_odd_dimension(k, "rhs_general");
  return rhs_general(rk_table(k, N), psi);
}

std::complex<double> rhs_guinand(const RepTable& table, const GaussPoly& psi) {
  if (table.k() != 3) throw std::invalid_argument("rhs_guinand: needs an r_3 table");
  ComplexCompensatedSum sum;
  sum.add(kI * eval(derivative(psi, 1), 0.0));
  for (std::int64_t n = 1; n <= table.max_n(); ++n) {
    if (table[n] == 0) continue;
    const double root = std::sqrt(static_cast<double>(n));
    sum.add(kI * (table.as_double(n) / root) * eval(psi, root));
  }
  return sum.value();
}

std::complex<double> rhs_k5(const RepTable& table, const GaussPoly& psi) {
  if (table.k() != 5) throw std::invalid_argument("rhs_k5: needs an r_5 table");
  const GaussPoly d1 = derivative(psi, 1);
  const GaussPoly d3 = derivative(psi, 3);
  const double pi = std::numbers::pi;
  ComplexCompensatedSum series;
  for (std::int64_t n = 1; n <= table.max_n(); ++n) {
    if (table[n] == 0) continue;
    const double x = static_cast<double>(n);
    const double root = std::sqrt(x);
    series.add(table.as_double(n) / (x * root) * (eval(psi, root) - root * eval(d1, root)));
  }
  return -kI / (6.0 * pi) * eval(d3, 0.0) + kI / (2.0 * pi) * series.value();
}

double tail_bound(int k, const GaussPoly& f, std::int64_t N) {
  std::vector<EnvelopeTerm> env;
  append_envelope(env, f, 1.0, -1.0);
  const auto count = lattice_count_envelope(k);
  return series_tail_bound(multiply(count, env), N);
}

double rhs_tail_bound(int k, const GaussPoly& psi, std::int64_t N) {
  require_odd_dimension(k, "rhs_tail_bound");
  const auto betas = beta_row_double(k);
  const auto ladder = derivative_ladder(psi, static_cast<int>(betas.size()) - 1);
  std::vector<EnvelopeTerm> env;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    append_envelope(env, ladder[j], std::abs(betas[j]), static_cast<double>(j) - k + 2);
  }
  const auto count = lattice_count_envelope(k);
  return series_tail_bound(multiply(count, env), N);
}

VerificationReport verify(int k, const GaussPoly& phi, std::int64_t N, double tol) {
  require_odd_dimension(k, "verify");
  require_odd_function(phi, "verify");
  if (N < 1) throw std::invalid_argument("verify: N must be >= 1");
  const RepTable table = rk_table(k, N);
  const GaussPoly psi = fourier(phi);

  VerificationReport report;
  report.identity = k == 3 ? Identity::guinand : (k == 5 ? Identity::k5 : Identity::general_k);
  report.k = k;
  report.lhs = lhs_general(table, phi);
  report.rhs = rhs_general(table, psi);
  report.abs_residual = std::abs(report.lhs - report.rhs);
  report.rel_residual = relative_residual(report.lhs, report.rhs);
  report.tail_bound_lhs = tail_bound(k, phi, N);
  report.tail_bound_rhs = rhs_tail_bound(k, psi, N);
  report.terms_used = nonzero_shells(table) + 1;
  report.truncation.N = N;
  report.tol = tol;
  if (k == 3) report.specialized_rhs = rhs_guinand(table, psi);
  if (k == 5) report.specialized_rhs = rhs_k5(table, psi);
  if (report.specialized_rhs) {
    report.specialized_rel_diff = relative_residual(*report.specialized_rhs, report.rhs);
  }
  report.passed = report.rel_residual <= tol &&
                  (!report.specialized_rel_diff || *report.specialized_rel_diff <= kSpecializedTolerance);
  return report;
}

VerificationReport verify_duality(int k, const GaussPoly& phi, std::int64_t N, double tol) {
  require_odd_dimension(k, "verify_duality");
  if (N < 1) throw std::invalid_argument("verify_duality: N must be >= 1");
  const AtomComb sigma = sigma_k(k, N);
  const AtomComb sigma_hat = sigma_k_hat(k, N);
  const GaussPoly phi_hat = fourier(phi);

  VerificationReport report;
  report.identity = Identity::duality;
  report.k = k;
  report.lhs = pair(sigma_hat, phi);
  report.rhs = pair(sigma, phi_hat);
  report.abs_residual = std::abs(report.lhs - report.rhs);
  report.rel_residual = relative_residual(report.lhs, report.rhs);
  // Both +-sqrt(n) atoms contribute, hence the factor 2.
  report.tail_bound_lhs = 2.0 * rhs_tail_bound(k, phi, N);
  report.tail_bound_rhs = 2.0 * tail_bound(k, phi_hat, N);
  report.terms_used = static_cast<std::int64_t>(sigma.atoms().size() + sigma_hat.atoms().size());
  report.truncation.N = N;
  report.tol = tol;
  report.passed = report.rel_residual <= tol;
  return report;
}

std::vector<ShellPartial> shell_partial_sums(int k, const GaussPoly& phi, std::int64_t N) {
  require_odd_dimension(k, "shell_partial_sums");
  require_odd_function(phi, "shell_partial_sums");
  const RepTable table = rk_table(k, N);
  const GaussPoly psi = fourier(phi);
  const auto betas = beta_row_double(k);
  const auto ladder = derivative_ladder(psi, k - 2);

  ComplexCompensatedSum lhs;
  ComplexCompensatedSum rhs;
  lhs.add(eval(derivative(phi, 1), 0.0));
  rhs.add(kI * alpha(k).to_double() * eval(ladder.back(), 0.0));
  std::vector<ShellPartial> rows{{0, 0.0, lhs.value(), rhs.value()}};
  for (std::int64_t n = 1; n <= N; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    if (table[n] != 0) {
      lhs.add(table.as_double(n) / root * eval(phi, root));
      rhs.add(rhs_shell(table, ladder, betas, n));
    }
    rows.push_back({n, root, lhs.value(), rhs.value()});
  }
  return rows;
}

nlohmann::json to_json(const VerificationReport& r) {
  auto cplx = [](std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); };
  nlohmann::json trunc = nlohmann::json::object();
  if (r.truncation.N) trunc["N"] = *r.truncation.N;
  if (r.truncation.r_time) trunc["R_time"] = *r.truncation.r_time;
  if (r.truncation.r_freq) trunc["R_freq"] = *r.truncation.r_freq;
  nlohmann::json j = {
      {"identity", to_string(r.identity)},
      {"k", r.k},
      {"lhs", cplx(r.lhs)},
      {"rhs", cplx(r.rhs)},
      {"abs_residual", r.abs_residual},
      {"rel_residual", r.rel_residual},
      {"tail_bound_lhs", r.tail_bound_lhs},
      {"tail_bound_rhs", r.tail_bound_rhs},
      {"terms_used", r.terms_used},
      {"truncation", trunc},
      {"tol", r.tol},
      {"passed", r.passed},
  };
  if (r.specialized_rhs) j["specialized_rhs"] = cplx(*r.specialized_rhs);
  if (r.specialized_rel_diff) j["specialized_rel_diff"] = *r.specialized_rel_diff;
  return j;
}

void write_shell_csv(std::ostream& os, std::span<const ShellPartial> rows) {
  os << "n,node,lhs_re,lhs_im,rhs_re,rhs_im\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n", static_cast<long long>(row.n),
                  row.node, row.lhs.real(), row.lhs.imag(), row.rhs.real(), row.rhs.imag());
    os << buf;
  }
}

}  // namespace guinand
