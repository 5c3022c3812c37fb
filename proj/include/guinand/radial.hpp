#pragma once

// Radial Fourier transforms in odd dimension k and the transform of the
// surface measure of the unit sphere S^(k-1).
//
// For an even f, F(x) = f(|x|) on R^k has F^(xi) = B_k f(|xi|) with
//   B_k f(t) = -1/(2 pi t^(k-1)) sum_j beta_jk t^(j+1) fhat^(j+1)(t),  t != 0,
//   B_k f(0) = -(alpha_k / 2 pi) fhat^(k-1)(0),
// and B_1 f = fhat.

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "guinand/coeffs.hpp"
#include "guinand/schwartz.hpp"

namespace guinand {

/// Requires f even and t != 0.
std::complex<double> radial_ft_closed(const GaussPoly& f, int k, double t);

/// Requires f even.
std::complex<double> radial_ft_zero(const GaussPoly& f, int k);

/// int_0^R f(r) s_k(r t) r^(k-1) dr by Gauss-Kronrod panels no wider than a
/// quarter period, R chosen where the Gaussian envelope falls below tol/1000.
/// Throws std::runtime_error if the summed error estimate exceeds tol.
std::complex<double> radial_ft_quadrature(const GaussPoly& f, int k, double t, double tol);

/// |B_k f(t) - ((k-4)/(2 pi t^2) B_(k-2) f(t) - B_(k-4)(t^2 f)(t) / t^2)|, k >= 5 odd.
double bk_recurrence_check(const GaussPoly& f, int k, double t);

enum class SphereMethod { closed, bessel, recurrence, besselpoly };

std::string to_string(SphereMethod m);
SphereMethod sphere_method_from_string(const std::string& name);

struct SphereFTValue {
  int k = 0;
  double t = 0.0;
  double value = 0.0;
  SphereMethod method = SphereMethod::closed;
};

// s_k(t), the transform of the surface measure on S^(k-1) at |xi| = t. All
// routes evaluate in 50-digit arithmetic and round once.

/// (2/t^(k-2)) sum_j beta_jk (2 pi t)^j sin(2 pi t + pi j/2); k >= 3 odd, t != 0.
double sphere_ft_closed(int k, double t);
/// 2 pi t^(-nu) J_nu(2 pi t), nu = (k-2)/2, upward recurrence; k >= 1 odd, t > 0.
double sphere_ft_bessel(int k, double t);
/// s_k = ((k-4) s_(k-2) - 2 pi s_(k-4)) / (2 pi t^2) from s_1 = 2cos(2 pi t),
/// s_3 = 2sin(2 pi t)/t; k >= 1 odd, t != 0.
double sphere_ft_recurrence(int k, double t);
/// (2/t^(k-2)) Im{theta_n(-2 pi i t) (2 pi)^(-n) e^(2 pi i t)}, n = (k-3)/2; k >= 3 odd, t != 0.
double sphere_ft_besselpoly(int k, double t);

double sphere_ft(SphereMethod method, int k, double t);

/// 2 (2 pi)^((k-1)/2) / (k-2)!!
ScaledRational sphere_area(int k);

/// k, t, method, value
void write_sphere_csv(std::ostream& os, std::span<const SphereFTValue> rows);

}  // namespace guinand
