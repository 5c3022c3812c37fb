#include "guinand/radial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace guinand {

namespace {

constexpr double kPi = std::numbers::pi;

void require_even(const GaussPoly& f, const char* where) {
  if (!f.is_even()) throw std::invalid_argument(std::string(where) + ": f must be even");
}

// B_k f(t) for k >= 3, any t including 0. Per Gaussian scale the sum
// Q(t) = sum_j beta_j t^(j+1) fhat^(j+1)(t) is P(t) e^(-pi b t^2) with P
// divisible by t^(k-1) when f is even, so the division is done on
// coefficients and the low-order ones (zero up to rounding) are discarded.
std::complex<double> radial_closed_any(const GaussPoly& f, int k, double t) {
  if (k == 1) return eval(fourier(f), t);
  const auto betas = beta_row_double(k);
  const int top = static_cast<int>(betas.size());
  const GaussPoly fhat = fourier(f);
  std::complex<double> total{};
  for (const auto& term : fhat.terms()) {
    const auto ladder = derivative_ladder(GaussPoly(std::vector<GaussPoly::Term>{term}), top);
    std::vector<std::complex<double>> q;
    for (int j = 0; j < top; ++j) {
      if (ladder[j + 1].is_zero()) continue;
      const auto& coeffs = ladder[j + 1].terms().front().coeffs;
      if (q.size() < coeffs.size() + j + 1) q.resize(coeffs.size() + j + 1);
      for (std::size_t m = 0; m < coeffs.size(); ++m) q[m + j + 1] += betas[j] * coeffs[m];
    }
    std::complex<double> p{};
    for (std::size_t m = q.size(); m-- > static_cast<std::size_t>(k - 1);) p = p * t + q[m];
    total += p * std::exp(-kPi * term.scale * t * t);
  }
  return -total / (2.0 * kPi);
}

// s_k(x) in double for the quadrature integrand: power series for small
// argument, upward Bessel recurrence (stable for z > nu) otherwise.
double sphere_fast(int k, double x) {
  const double nu = 0.5 * (k - 2);
  const double z = 2.0 * kPi * x;
  if (z < nu + 3.0) {
    const double u = -kPi * kPi * x * x;
    double term = 1.0 / std::tgamma(nu + 1.0);
    double sum = term;
    for (int m = 0; m < 200; ++m) {
      term *= u / ((m + 1.0) * (m + 1.0 + nu));
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return 2.0 * kPi * std::pow(kPi, nu) * sum;
  }
  const double root = std::sqrt(2.0 / (kPi * z));
  double prev = root * std::cos(z);
  double cur = root * std::sin(z);
  if (k == 1) return 2.0 * kPi * std::pow(x, 0.5) * prev;
  for (double mu = 0.5; mu < nu; mu += 1.0) {
    const double next = (2.0 * mu / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return 2.0 * kPi * std::pow(x, -nu) * cur;
}

}  // namespace

std::complex<double> radial_ft_closed(const GaussPoly& f, int k, double t) {
  require_odd_dimension(k, "radial_ft_closed");
  require_even(f, "radial_ft_closed");
  if (t == 0.0 || !std::isfinite(t)) throw std::invalid_argument("radial_ft_closed: t must be finite and nonzero");
  return radial_closed_any(f, k, std::abs(t));
}

std::complex<double> radial_ft_zero(const GaussPoly& f, int k) {
  require_odd_dimension(k, "radial_ft_zero");
  require_even(f, "radial_ft_zero");
  return -(alpha(k).to_double() / (2.0 * kPi)) * eval(derivative(fourier(f), k - 1), 0.0);
}

std::complex<double> radial_ft_quadrature(const GaussPoly& f, int k, double t, double tol) {
  require_odd_dimension(k, "radial_ft_quadrature");
  require_even(f, "radial_ft_quadrature");
  if (!(tol >= 1e-12)) throw std::invalid_argument("radial_ft_quadrature: tol must be >= 1e-12");
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("radial_ft_quadrature: t must be >= 0");
  if (f.is_zero()) return {};

  const double area = sphere_area(k).to_double();
  auto weight = [&](double r) { return envelope(f, r) * std::pow(r, k - 1) * area; };
  double cutoff = 1.0;
  while (weight(cutoff) > tol * 1e-3 || weight(cutoff + 0.5) > weight(cutoff)) cutoff += 0.5;

  const double width = t > 0.0 ? std::min(0.25 / t, 1.0) : 1.0;
  const int panels = static_cast<int>(std::ceil(cutoff / width));
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  double re = 0.0;
  double im = 0.0;
  double error = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = p * width;
    const double b = std::min((p + 1) * width, cutoff);
    auto integrand = [&](double r, bool real) {
      const std::complex<double> v = eval(f, r) * sphere_fast(k, r * t) * std::pow(r, k - 1);
      return real ? v.real() : v.imag();
    };
    double err_re = 0.0;
    double err_im = 0.0;
    re += Rule::integrate([&](double r) { return integrand(r, true); }, a, b, 10, 1e-14, &err_re);
    im += Rule::integrate([&](double r) { return integrand(r, false); }, a, b, 10, 1e-14, &err_im);
    error += err_re + err_im;
  }
  if (error > tol) {
    throw std::runtime_error("radial_ft_quadrature: error estimate " + std::to_string(error) + " exceeds tol");
  }
  return {re, im};
}

double bk_recurrence_check(const GaussPoly& f, int k, double t) {
  require_odd_dimension(k, "bk_recurrence_check");
  require_even(f, "bk_recurrence_check");
  if (k < 5) throw std::invalid_argument("bk_recurrence_check: k must be >= 5");
  if (t == 0.0) throw std::invalid_argument("bk_recurrence_check: t must be nonzero");
  const double at = std::abs(t);
  const std::complex<double> direct = radial_closed_any(f, k, at);
  const std::complex<double> stepped = ((k - 4) / (2.0 * kPi * at * at)) * radial_closed_any(f, k - 2, at) -
                                       radial_closed_any(times_t(times_t(f)), k - 4, at) / (at * at);
  return std::abs(direct - stepped);
}

}  // namespace guinand
