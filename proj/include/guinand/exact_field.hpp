#pragma once

// Exact coefficient ring for the polynomial-Gaussian algebra:
// Laurent polynomials in pi with Gaussian-rational coefficients.

#include <complex>
#include <map>
#include <string>

#include "guinand/coeffs.hpp"

namespace guinand {

struct ComplexRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const;

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;
};

/// sum_e c_e pi^e with c_e in Q(i); only nonzero c_e are stored.
class PiLaurent {
 public:
  PiLaurent() = default;
  PiLaurent(ComplexRational c, int pi_power = 0);
  PiLaurent(long value);  // NOLINT: integer literals lift implicitly

  static PiLaurent real(Rational r, int pi_power = 0) { return PiLaurent({std::move(r), 0}, pi_power); }
  static PiLaurent imag(Rational r, int pi_power = 0) { return PiLaurent({0, std::move(r)}, pi_power); }

  const std::map<int, ComplexRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// The coefficient of pi^0 when that is the only term; throws otherwise.
  const ComplexRational& as_pure() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  PiLaurent& operator+=(const PiLaurent& other);
  friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
  friend PiLaurent operator-(const PiLaurent& a);
  friend PiLaurent operator-(const PiLaurent& a, const PiLaurent& b) { return a + (-b); }
  friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b);
  friend bool operator==(const PiLaurent& a, const PiLaurent& b) = default;

 private:
  void add_term(int power, const ComplexRational& c);
  std::map<int, ComplexRational> terms_;
};

}  // namespace guinand
