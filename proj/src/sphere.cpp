#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "guinand/radial.hpp"

namespace guinand {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::pow;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

void require_nonzero(double t, const char* where) {
  if (t == 0.0 || !std::isfinite(t)) throw std::invalid_argument(std::string(where) + ": t must be finite and nonzero");
}

void require_odd_from_one(int k, const char* where) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument(std::string(where) + ": k must be odd and >= 1");
}

struct HighComplex {
  HighFloat re;
  HighFloat im;
};

HighComplex operator*(const HighComplex& a, const HighComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

std::string to_string(SphereMethod m) {
  switch (m) {
    case SphereMethod::closed: return "closed";
    case SphereMethod::bessel: return "bessel";
    case SphereMethod::recurrence: return "recurrence";
    case SphereMethod::besselpoly: return "besselpoly";
  }
  return "unknown";
}

SphereMethod sphere_method_from_string(const std::string& name) {
  for (auto m : {SphereMethod::closed, SphereMethod::bessel, SphereMethod::recurrence, SphereMethod::besselpoly}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown sphere method '" + name + "'");
}

double sphere_ft_closed(int k, double t) {
  require_odd_dimension(k, "sphere_ft_closed");
  require_nonzero(t, "sphere_ft_closed");
  const HighFloat x = std::abs(t);
  const HighFloat pi = pi_high();
  const HighFloat arg = 2 * pi * x;
  const auto betas = beta_row(k);
  HighFloat sum = 0;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    sum += betas[j].to_high() * pow(arg, static_cast<int>(j)) * sin(arg + pi * static_cast<int>(j) / 2);
  }
  return (2 * sum / pow(x, k - 2)).convert_to<double>();
}

double sphere_ft_bessel(int k, double t) {
  require_odd_from_one(k, "sphere_ft_bessel");
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("sphere_ft_bessel: t must be positive");
  const HighFloat x = t;
  const HighFloat pi = pi_high();
  const HighFloat z = 2 * pi * x;
  const HighFloat root = sqrt(2 / (pi * z));
  HighFloat prev = root * cos(z);  // J_{-1/2}
  HighFloat cur = root * sin(z);   // J_{1/2}
  if (k == 1) return (2 * pi * sqrt(x) * prev).convert_to<double>();
  // J_{mu+1} = (2 mu / z) J_mu - J_{mu-1}
  for (int twice_mu = 1; twice_mu < k - 2; twice_mu += 2) {
    HighFloat next = (HighFloat(twice_mu) / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  const HighFloat nu = HighFloat(k - 2) / 2;
  return (2 * pi * pow(x, -nu) * cur).convert_to<double>();
}

double sphere_ft_recurrence(int k, double t) {
  require_odd_from_one(k, "sphere_ft_recurrence");
  require_nonzero(t, "sphere_ft_recurrence");
  const HighFloat x = std::abs(t);
  const HighFloat pi = pi_high();
  HighFloat older = 2 * cos(2 * pi * x);   // s_1
  HighFloat old = 2 * sin(2 * pi * x) / x;  // s_3
  if (k == 1) return older.convert_to<double>();
  for (int m = 5; m <= k; m += 2) {
    HighFloat next = ((m - 4) * old - 2 * pi * older) / (2 * pi * x * x);
    older = old;
    old = next;
  }
  return old.convert_to<double>();
}

double sphere_ft_besselpoly(int k, double t) {
  require_odd_dimension(k, "sphere_ft_besselpoly");
  require_nonzero(t, "sphere_ft_besselpoly");
  const int n = (k - 3) / 2;
  const HighFloat x = std::abs(t);
  const HighFloat pi = pi_high();
  const HighFloat two_pi = 2 * pi;
  const BesselPoly theta = bessel_poly(n);
  const HighComplex arg{0, -two_pi * x};
  HighComplex value{0, 0};
  for (auto it = theta.coeffs.rbegin(); it != theta.coeffs.rend(); ++it) {
    value = value * arg;
    value.re += HighFloat(*it);
  }
  const HighComplex phase{cos(two_pi * x), sin(two_pi * x)};
  const HighFloat im = (value * phase).im / pow(two_pi, n);
  return (2 * im / pow(x, k - 2)).convert_to<double>();
}

double sphere_ft(SphereMethod method, int k, double t) {
  switch (method) {
    case SphereMethod::closed: return sphere_ft_closed(k, t);
    case SphereMethod::bessel: return sphere_ft_bessel(k, t);
    case SphereMethod::recurrence: return sphere_ft_recurrence(k, t);
    case SphereMethod::besselpoly: return sphere_ft_besselpoly(k, t);
  }
  throw std::invalid_argument("unknown sphere method");
}

ScaledRational sphere_area(int k) {
  require_odd_dimension(k, "sphere_area");
  const int h = (k - 1) / 2;
  return ScaledRational(Rational(BigInt(1) << (h + 1), double_factorial(k - 2)), h);
}

void write_sphere_csv(std::ostream& os, std::span<const SphereFTValue> rows) {
  os << "k,t,method,value\n";
  char buf[128];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%s,%.17g\n", row.k, row.t, to_string(row.method).c_str(), row.value);
    os << buf;
  }
}

}  // namespace guinand
