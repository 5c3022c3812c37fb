#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include "guinand/atoms.hpp"
#include "guinand/compensated.hpp"
#include "guinand/errors.hpp"
#include "guinand/formulas.hpp"

namespace guinand {

namespace {

double ball_volume(int k, double radius) {
  const double half = 0.5 * k;
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0) + k * std::log(radius));
}

void check_shift(int k, std::span<const double> shift, const char* name) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument(std::string(name) + ": k must be odd and >= 3");
  if (static_cast<int>(shift.size()) != k) {
    throw std::invalid_argument(std::string(name) + ": shift vector must have k components");
  }
  bool integral = true;
  for (double s : shift) {
    if (!std::isfinite(s)) throw std::invalid_argument(std::string(name) + ": shift must be finite");
    integral = integral && std::abs(s - std::round(s)) <= 1e-12;
  }
  if (integral) throw std::invalid_argument(std::string(name) + ": shift must not lie in Z^k");
}

void check_radius(int k, double R, const WorkCaps& caps) {
  if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("lattice radius must be positive");
  if (k >= 7 && R > 6.0) {
    throw WorkCapExceeded("lattice radius " + std::to_string(R) + " exceeds 6 for k >= 7");
  }
  const double estimate = ball_volume(k, R + 0.5 * std::sqrt(static_cast<double>(k)));
  if (estimate > static_cast<double>(caps.max_lattice_points)) {
    throw WorkCapExceeded("estimated lattice point count " + std::to_string(estimate) + " exceeds cap " +
                          std::to_string(caps.max_lattice_points));
  }
}

// Fractional part of <m, v> in [0, 1).
double phase_turns(std::span<const std::int64_t> m, std::span<const double> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double term = static_cast<double>(m[i]) * v[i];
    acc += term - std::floor(term);
  }
  return acc - std::floor(acc);
}

// Exact at multiples of a quarter turn, so symmetric lattice sums cancel exactly.
std::complex<double> unit_phase(double turns) {
  return {boost::math::cos_pi(2.0 * turns), boost::math::sin_pi(2.0 * turns)};
}

void enumerate(int k, std::span<const double> shift, double R2, int axis, double used,
               std::vector<std::int64_t>& m, std::vector<LatticeNode>& out) {
  if (axis == k) {
    out.push_back({m, std::sqrt(used), used});
    return;
  }
  const double room = std::sqrt(std::max(R2 - used, 0.0));
  const auto lo = static_cast<std::int64_t>(std::ceil(-room - shift[axis]));
  const auto hi = static_cast<std::int64_t>(std::floor(room - shift[axis]));
  for (std::int64_t v = lo; v <= hi; ++v) {
    const double x = static_cast<double>(v) + shift[axis];
    const double next = used + x * x;
    if (next > R2) continue;
    m[axis] = v;
    enumerate(k, shift, R2, axis + 1, next, m, out);
  }
}

// Sum of |c_m| weight r^(m + shift) exp(-pi a r^2) maximized termwise over r in [lo, hi].
double envelope_sup(const GaussPoly& f, double lo, double hi, double weight, double shift) {
  double total = 0.0;
  for (const auto& term : f.terms()) {
    const double decay = std::exp(-std::numbers::pi * term.scale * lo * lo);
    for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
      const double c = std::abs(term.coeffs[m]);
      if (c == 0.0) continue;
      const double p = static_cast<double>(m) + shift;
      total += c * weight * std::pow(p >= 0.0 ? hi : lo, p) * decay;
    }
  }
  return total;
}

// Bound on the sum over lattice points with |m + shift| > R of per_point(lo, hi),
// taken over unit annuli [R + s, R + s + 1). Each annulus holds at most
// V_k(R + s + 1 + sqrt(k)/2) points. Summation stops once the terms decay
// geometrically with ratio below 1/2, adding the remaining geometric mass.
template <class PerPoint>
double annulus_tail(int k, double R, PerPoint per_point) {
  const double half_diag = 0.5 * std::sqrt(static_cast<double>(k));
  double total = 0.0;
  double previous = 0.0;
  for (int s = 0; s < 100000; ++s) {
    const double lo = R + s;
    const double hi = lo + 1.0;
    const double term = ball_volume(k, hi + half_diag) * per_point(lo, hi);
    total += term;
    if (term == 0.0) break;
    if (previous > 0.0 && term < 0.5 * previous && term <= 1e-20 * total) {
      total += term;  // geometric remainder with ratio <= 1/2
      break;
    }
    previous = term;
  }
  return total;
}

std::vector<RadialAtom> to_radial(const std::vector<LatticeNode>& nodes, std::span<const double> turns_vec,
                                  double turn_sign, std::complex<double> prefactor) {
  std::vector<RadialAtom> atoms;
  atoms.reserve(nodes.size());
  for (const auto& node : nodes) {
    const double turns = phase_turns(node.m, turns_vec);
    atoms.push_back({node.r2, std::nullopt, prefactor * unit_phase(turn_sign * turns)});
  }
  return atoms;
}

}  // namespace

std::vector<LatticeNode> shifted_nodes(int k, std::span<const double> shift, double R, const WorkCaps& caps) {
  check_shift(k, shift, "shifted_nodes");
  check_radius(k, R, caps);
  std::vector<LatticeNode> out;
  std::vector<std::int64_t> m(static_cast<std::size_t>(k), 0);
  enumerate(k, shift, R * R, 0, 0.0, m, out);
  return out;
}

std::complex<double> shifted_lhs_direct(int k, std::span<const double> eta, std::span<const double> xi,
                                        const GaussPoly& phi, double r_time, const WorkCaps& caps) {
  check_shift(k, xi, "shifted_lhs_direct");
  const auto nodes = shifted_nodes(k, eta, r_time, caps);
  ComplexCompensatedSum sum;
  for (const auto& node : nodes) {
    const std::complex<double> w = unit_phase(phase_turns(node.m, xi)) / node.node;
    sum.add(w * (eval(phi, node.node) - eval(phi, -node.node)));
  }
  return sum.value();
}

VerificationReport verify_shifted(int k, std::span<const double> eta, std::span<const double> xi,
                                  const GaussPoly& phi, double r_time, double r_freq, double tol,
                                  const WorkCaps& caps) {
  check_shift(k, eta, "verify_shifted");
  check_shift(k, xi, "verify_shifted");
  if (!phi.is_odd()) throw std::invalid_argument("verify_shifted: test function must be odd");

  const auto time_nodes = shifted_nodes(k, eta, r_time, caps);
  const auto freq_nodes = shifted_nodes(k, xi, r_freq, caps);

  const AtomComb sigma = project_measure(k, to_radial(time_nodes, xi, 1.0, 1.0));
  double eta_xi = 0.0;
  for (int i = 0; i < k; ++i) eta_xi += eta[i] * xi[i];
  const std::complex<double> prefactor = unit_phase(-(eta_xi - std::floor(eta_xi)));
  const AtomComb sigma_hat = project_ft(k, to_radial(freq_nodes, eta, -1.0, prefactor));

  const GaussPoly phi_hat = fourier(phi);
  const GaussPoly test = reflect(phi_hat);

  VerificationReport report;
  report.identity = Identity::shifted;
  report.k = k;
  report.lhs = pair(sigma, phi);
  report.rhs = pair(sigma_hat, test);
  report.abs_residual = std::abs(report.lhs - report.rhs);
  report.rel_residual = relative_residual(report.lhs, report.rhs);
  report.tail_bound_lhs =
      annulus_tail(k, r_time, [&](double lo, double hi) { return envelope_sup(phi, lo, hi, 2.0, -1.0); });

  const auto betas = beta_row_double(k);
  const auto ladder = derivative_ladder(test, static_cast<int>(betas.size()) - 1);
  report.tail_bound_rhs = annulus_tail(k, r_freq, [&](double lo, double hi) {
    double total = 0.0;
    for (std::size_t j = 0; j < betas.size(); ++j) {
      total += envelope_sup(ladder[j], lo, hi, 2.0 * std::abs(betas[j]), static_cast<double>(j) - k + 2);
    }
    return total;
  });
  report.terms_used = static_cast<std::int64_t>(time_nodes.size() + freq_nodes.size());
  report.truncation.r_time = r_time;
  report.truncation.r_freq = r_freq;
  report.tol = tol;
  report.passed = report.rel_residual <= tol;
  return report;
}

}  // namespace guinand
