// One PASS/FAIL line per acceptance criterion, with wall time against its budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "guinand/atoms.hpp"
#include "guinand/coeffs.hpp"
#include "guinand/formulas.hpp"
#include "guinand/radial.hpp"
#include "guinand/sumsq.hpp"
#include "oracles.hpp"

using namespace guinand;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPinned = 2.8602371906953891;

GaussPoly mono(std::complex<double> c, int p, double a) { return GaussPoly::monomial(c, p, a); }

std::vector<GaussPoly> odd_suite() {
  std::vector<GaussPoly> out;
  for (double a : {0.5, 1.0, 2.0}) {
    out.push_back(mono(1, 1, a));
    out.push_back(mono(1, 3, a));
    out.push_back(mono(1, 5, a) - mono(1, 1, a));
  }
  return out;
}

std::vector<GaussPoly> even_suite() {
  std::vector<GaussPoly> out;
  for (double a : {0.5, 1.0, 2.0}) {
    out.push_back(mono(1, 0, a));
    out.push_back(mono(1, 2, a));
    out.push_back(mono(1, 4, a) - mono(1, 2, a));
  }
  return out;
}

ScaledRational sr(long num, long den, int p) { return ScaledRational(Rational(num, den), p); }

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.ok && secs < budget_s;
  failures += !ok;
  std::printf("%s %d %s: %s [%.2fs / %.0fs]\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs, budget_s);
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "coefficient ground truth", 1.0, [] {
    const bool ok = alpha(3) == sr(1, 1, 0) && alpha(5) == sr(-1, 6, -1) && beta(0, 3) == sr(1, 1, 0) &&
                    beta(0, 5) == sr(1, 2, -1) && beta(1, 5) == sr(-1, 2, -1);
    return Outcome{ok, "alpha_5 = " + alpha(5).to_string() + ", beta_*,5 = " + beta(0, 5).to_string() + ", " +
                           beta(1, 5).to_string()};
  });

  criterion(2, "Bessel polynomial identity", 1.0, [] {
    int good = 0;
    for (int n = 0; n <= 8; ++n) good += beta_bessel_crosscheck(n);
    return Outcome{good == 9, std::to_string(good) + "/9 exact for n = 0..8"};
  });

  criterion(3, "r_k tables", 30.0, [] {
    int mismatches = 0;
    for (int k = 1; k <= 6; ++k) {
      const RepTable t = rk_table(k, 50);
      for (std::int64_t n = 0; n <= 50; ++n) {
        mismatches += t[n] != rk_bruteforce(k, n);
        mismatches += t[n] != oracle::count_squares(k, n);
      }
    }
    std::vector<RepTable> tables;
    for (int k = 1; k <= 11; ++k) tables.push_back(rk_table(k, 200));
    int conv_bad = 0;
    for (int k1 = 1; k1 <= 10; ++k1)
      for (int k2 = 1; k1 + k2 <= 11; ++k2)
        conv_bad += convolve(tables[k1 - 1], tables[k2 - 1]).counts() != tables[k1 + k2 - 1].counts();
    return Outcome{mismatches == 0 && conv_bad == 0,
                   std::to_string(mismatches) + " brute-force mismatches, " + std::to_string(conv_bad) +
                       " convolution mismatches"};
  });

  criterion(4, "Guinand self-duality", 5.0, [] {
    const AtomComb s = sigma_k(3, 400);
    const AtomComb h = sigma_k_hat(3, 400);
    bool ok = s.atoms().size() == h.atoms().size();
    for (std::size_t i = 0; ok && i < s.atoms().size(); ++i) {
      ok = h.atoms()[i].location == s.atoms()[i].location && h.atoms()[i].order == s.atoms()[i].order &&
           h.atoms()[i].weight == std::complex<double>(0, -1) * s.atoms()[i].weight;
    }
    return Outcome{ok, std::to_string(s.atoms().size()) + " atoms compared bit for bit"};
  });

  criterion(5, "summation identities", 60.0, [] {
    double worst = 0.0;
    double worst_special = 0.0;
    for (int k : {3, 5, 7, 9, 11})
      for (const auto& phi : odd_suite()) {
        const VerificationReport r = verify(k, phi, 400, 1e-9);
        worst = std::max(worst, r.rel_residual);
        if (r.specialized_rel_diff) worst_special = std::max(worst_special, *r.specialized_rel_diff);
      }
    return Outcome{worst <= 1e-9 && worst_special <= 1e-13,
                   "max rel_residual " + sci(worst) + " (<= 1e-9), max specialized diff " + sci(worst_special) +
                       " (<= 1e-13)"};
  });

  criterion(6, "pinned theta value", 10.0, [] {
    const long double direct = oracle::lattice_gaussian(3, 0.5L);
    const long double dual = 2.0L * std::sqrt(2.0L) * oracle::lattice_gaussian(3, 2.0L);
    const VerificationReport r = verify(3, mono(1, 1, 0.5), 400, 1e-10);
    const double dl = std::abs(r.lhs - kPinned);
    const double dr = std::abs(r.rhs - kPinned);
    const bool oracles_ok = std::abs(static_cast<double>(direct) - kPinned) <= 1e-15 &&
                            std::abs(static_cast<double>(dual) - kPinned) <= 1e-15;
    return Outcome{oracles_ok && dl <= 1e-8 && dr <= 1e-8,
                   "pinned 2.8602371906953891; |lhs-pin| " + sci(dl) + ", |rhs-pin| " + sci(dr)};
  });

  criterion(7, "shifted-lattice formula", 300.0, [] {
    const GaussPoly phi = mono(1, 1, 1.0);
    const std::vector<double> h{0.5, 0.5, 0.5};
    const VerificationReport a = verify_shifted(3, h, h, phi, 6, 6, 1e-8);
    const std::vector<double> eta{0.25, 0, 0, 0, 0};
    const std::vector<double> xi{0, 1.0 / 3, 0, 0, 0};
    const VerificationReport b = verify_shifted(5, eta, xi, phi, 6, 6, 1e-8);
    return Outcome{a.rel_residual <= 1e-8 && b.rel_residual <= 1e-8,
                   "k=3 rel " + sci(a.rel_residual) + " (|lhs| " + sci(std::abs(a.lhs)) + "), k=5 rel " +
                       sci(b.rel_residual) + " (|lhs| " + sci(std::abs(b.lhs)) + ")"};
  });

  criterion(8, "radial transform routes", 120.0, [] {
    double routes = 0.0;
    for (int k = 3; k <= 11; k += 2)
      for (int i = 1; i <= 200; ++i) {
        const double t = 0.1 * i;
        const double v[4] = {sphere_ft_closed(k, t), sphere_ft_bessel(k, t), sphere_ft_recurrence(k, t),
                             sphere_ft_besselpoly(k, t)};
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b) routes = std::max(routes, relative_residual(v[a], v[b]));
      }
    double quad = 0.0;
    for (int k : {3, 5, 7})
      for (const auto& f : even_suite())
        for (double t : {0.3, 1.0, 2.0, 5.0})
          quad = std::max(quad, std::abs(radial_ft_closed(f, k, t) - radial_ft_quadrature(f, k, t, 1e-10)));
    double fixed = 0.0;
    for (int k = 3; k <= 11; k += 2)
      for (int i = 1; i <= 50; ++i) {
        const double t = 0.1 * i;
        fixed = std::max(fixed, std::abs(radial_ft_closed(mono(1, 0, 1.0), k, t) - std::exp(-kPi * t * t)));
      }
    const bool area = sphere_area(3) == sr(4, 1, 1);
    return Outcome{routes <= 1e-12 && quad <= 1e-8 && fixed <= 1e-12 && area,
                   "four-route rel " + sci(routes) + ", closed vs quadrature " + sci(quad) + ", Gaussian fixed point " +
                       sci(fixed) + ", area(3) = " + sphere_area(3).to_string()};
  });

  criterion(9, "duality pairing", 30.0, [] {
    double worst = 0.0;
    for (int k : {3, 5, 7})
      for (const auto& phi : odd_suite()) worst = std::max(worst, verify_duality(k, phi, 400, 1e-9).rel_residual);
    return Outcome{worst <= 1e-9, "max |<s^,phi> - <s,phi^>| / max magnitude " + sci(worst)};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
