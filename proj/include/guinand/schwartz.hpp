#pragma once

// Test functions of the form sum_a p_a(t) exp(-pi a t^2).
//
// The family is closed under differentiation, multiplication by t, reflection
// and the Fourier transform fhat(xi) = int f(x) exp(-2 pi i x xi) dx, so every
// operation below is exact symbolic manipulation of the coefficient lists.
// Two coefficient fields are provided: complex doubles (GaussPoly) and an
// exact field of Laurent polynomials in pi over Q(i) (ExactGaussPoly).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "guinand/coeffs.hpp"
#include "guinand/errors.hpp"
#include "guinand/exact_field.hpp"

namespace guinand {

struct FloatField {
  using Coeff = std::complex<double>;
  using Scale = double;

  static Coeff zero() { return {}; }
  static bool is_zero(const Coeff& c) { return c.real() == 0.0 && c.imag() == 0.0; }
  static Coeff from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Coeff from_scale(Scale a) { return {a, 0.0}; }
  static Coeff minus_two_pi() { return {-2.0 * std::numbers::pi, 0.0}; }
  static Coeff i_over_two_pi() { return {0.0, 1.0 / (2.0 * std::numbers::pi)}; }
  static Coeff minus_i() { return {0.0, -1.0}; }
  static bool positive(Scale a) { return a > 0.0 && std::isfinite(a); }
  static Scale reciprocal(Scale a) { return 1.0 / a; }
  static Coeff inv_sqrt(Scale a) { return {1.0 / std::sqrt(a), 0.0}; }
};

struct ExactField {
  using Coeff = PiLaurent;
  using Scale = Rational;

  static Coeff zero() { return {}; }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static Coeff from_int(long v) { return PiLaurent(v); }
  static Coeff from_scale(const Scale& a) { return PiLaurent::real(a); }
  static Coeff minus_two_pi() { return PiLaurent::real(-2, 1); }
  static Coeff i_over_two_pi() { return PiLaurent::imag(Rational(1, 2), -1); }
  static Coeff minus_i() { return PiLaurent::imag(-1); }
  static bool positive(const Scale& a) { return a > 0; }
  static Scale reciprocal(const Scale& a) { return Rational(1) / a; }
  /// a^(-1/2); only defined when numerator and denominator are perfect squares.
  static Coeff inv_sqrt(const Scale& a);
};

template <class Field>
struct BasicGaussTerm {
  using Coeff = typename Field::Coeff;
  using Scale = typename Field::Scale;

  Scale scale{};               // factor exp(-pi * scale * t^2)
  std::vector<Coeff> coeffs;   // ascending powers of t

  friend bool operator==(const BasicGaussTerm&, const BasicGaussTerm&) = default;
};

template <class Field>
class BasicGaussPoly {
 public:
  using Coeff = typename Field::Coeff;
  using Scale = typename Field::Scale;
  using Term = BasicGaussTerm<Field>;

  BasicGaussPoly() = default;

  /// Merges equal scales, trims trailing zero coefficients and drops empty
  /// terms. Throws std::invalid_argument on a nonpositive scale.
  explicit BasicGaussPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  /// c * t^power * exp(-pi a t^2)
  static BasicGaussPoly monomial(Coeff c, int power, Scale a) {
    if (power < 0) throw std::invalid_argument("GaussPoly: negative power");
    std::vector<Coeff> coeffs(static_cast<std::size_t>(power) + 1, Field::zero());
    coeffs.back() = std::move(c);
    return BasicGaussPoly({Term{std::move(a), std::move(coeffs)}});
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& term : terms_) d = std::max(d, static_cast<int>(term.coeffs.size()) - 1);
    return d;
  }

  bool is_odd() const { return parity_clean(0); }
  bool is_even() const { return parity_clean(1); }

  friend BasicGaussPoly operator+(const BasicGaussPoly& a, const BasicGaussPoly& b) {
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return BasicGaussPoly(std::move(terms));
  }

  friend BasicGaussPoly operator*(const Coeff& c, const BasicGaussPoly& f) {
    std::vector<Term> terms = f.terms_;
    for (auto& term : terms) {
      for (auto& x : term.coeffs) x = c * x;
    }
    return BasicGaussPoly(std::move(terms));
  }

  friend BasicGaussPoly operator-(const BasicGaussPoly& a, const BasicGaussPoly& b) {
    return a + Field::from_int(-1) * b;
  }

  friend BasicGaussPoly operator*(const BasicGaussPoly& a, const BasicGaussPoly& b) {
    std::vector<Term> terms;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        std::vector<Coeff> coeffs(ta.coeffs.size() + tb.coeffs.size() - 1, Field::zero());
        for (std::size_t i = 0; i < ta.coeffs.size(); ++i) {
          for (std::size_t j = 0; j < tb.coeffs.size(); ++j) {
            coeffs[i + j] = coeffs[i + j] + ta.coeffs[i] * tb.coeffs[j];
          }
        }
        terms.push_back(Term{ta.scale + tb.scale, std::move(coeffs)});
      }
    }
    return BasicGaussPoly(std::move(terms));
  }

  friend bool operator==(const BasicGaussPoly&, const BasicGaussPoly&) = default;

 private:
  bool parity_clean(std::size_t start) const {
    for (const auto& term : terms_) {
      for (std::size_t m = start; m < term.coeffs.size(); m += 2) {
        if (!Field::is_zero(term.coeffs[m])) return false;
      }
    }
    return true;
  }

  void normalize() {
    for (const auto& term : terms_) {
      if (!Field::positive(term.scale)) {
        throw std::invalid_argument("GaussPoly: Gaussian scale must be positive");
      }
    }
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& x, const Term& y) { return x.scale < y.scale; });
    std::vector<Term> merged;
    for (auto& term : terms_) {
      if (!merged.empty() && merged.back().scale == term.scale) {
        auto& into = merged.back().coeffs;
        if (into.size() < term.coeffs.size()) into.resize(term.coeffs.size(), Field::zero());
        for (std::size_t m = 0; m < term.coeffs.size(); ++m) into[m] = into[m] + term.coeffs[m];
      } else {
        merged.push_back(std::move(term));
      }
    }
    std::erase_if(merged, [](Term& term) {
      while (!term.coeffs.empty() && Field::is_zero(term.coeffs.back())) term.coeffs.pop_back();
      return term.coeffs.empty();
    });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

using GaussPoly = BasicGaussPoly<FloatField>;
using ExactGaussPoly = BasicGaussPoly<ExactField>;

/// d^order/dt^order, exact in the coefficient field.
template <class Field>
BasicGaussPoly<Field> derivative(const BasicGaussPoly<Field>& f, int order = 1) {
  if (order < 0) throw std::invalid_argument("derivative: order must be >= 0");
  using Term = typename BasicGaussPoly<Field>::Term;
  using Coeff = typename Field::Coeff;
  std::vector<Term> terms = f.terms();
  for (int step = 0; step < order; ++step) {
    for (auto& term : terms) {
      // (p e^{-pi a t^2})' = (p' - 2 pi a t p) e^{-pi a t^2}
      const Coeff slope = Field::minus_two_pi() * Field::from_scale(term.scale);
      const std::size_t size = term.coeffs.size();
      std::vector<Coeff> next(size + 1, Field::zero());
      for (std::size_t m = 1; m < size; ++m) {
        next[m - 1] = Field::from_int(static_cast<long>(m)) * term.coeffs[m];
      }
      for (std::size_t m = 0; m < size; ++m) next[m + 1] = next[m + 1] + slope * term.coeffs[m];
      term.coeffs = std::move(next);
    }
  }
  return BasicGaussPoly<Field>(std::move(terms));
}

/// f(t) -> f(-t)
template <class Field>
BasicGaussPoly<Field> reflect(const BasicGaussPoly<Field>& f) {
  auto terms = f.terms();
  for (auto& term : terms) {
    for (std::size_t m = 1; m < term.coeffs.size(); m += 2) {
      term.coeffs[m] = Field::from_int(-1) * term.coeffs[m];
    }
  }
  return BasicGaussPoly<Field>(std::move(terms));
}

/// f(t) -> t f(t)
template <class Field>
BasicGaussPoly<Field> times_t(const BasicGaussPoly<Field>& f) {
  auto terms = f.terms();
  for (auto& term : terms) term.coeffs.insert(term.coeffs.begin(), Field::zero());
  return BasicGaussPoly<Field>(std::move(terms));
}

/// f(t) - f(-t): even coefficients dropped, odd ones doubled.
template <class Field>
BasicGaussPoly<Field> odd_part(const BasicGaussPoly<Field>& f) {
  auto terms = f.terms();
  for (auto& term : terms) {
    for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
      term.coeffs[m] = (m % 2 == 0) ? Field::zero() : Field::from_int(2) * term.coeffs[m];
    }
  }
  return BasicGaussPoly<Field>(std::move(terms));
}

/// g with f(t) = t g(t). Requires a zero constant term in every polynomial part.
template <class Field>
BasicGaussPoly<Field> hadamard_divide(const BasicGaussPoly<Field>& f) {
  auto terms = f.terms();
  for (auto& term : terms) {
    if (!Field::is_zero(term.coeffs.front())) {
      throw std::domain_error("hadamard_divide: polynomial part has a nonzero constant term");
    }
    term.coeffs.erase(term.coeffs.begin());
  }
  return BasicGaussPoly<Field>(std::move(terms));
}

/// One-dimensional Fourier transform with kernel exp(-2 pi i x xi).
///
/// Base rule: t^0 e^{-pi a t^2} -> a^{-1/2} e^{-pi xi^2 / a}; then
/// FT(t g) = (i / 2pi) d/dxi FT(g), which on q(xi) e^{-pi b xi^2} (b = 1/a) reads
/// q -> (i/2pi) q' - i b xi q.
template <class Field>
BasicGaussPoly<Field> fourier(const BasicGaussPoly<Field>& f) {
  using Term = typename BasicGaussPoly<Field>::Term;
  using Coeff = typename Field::Coeff;
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    const auto b = Field::reciprocal(term.scale);
    const Coeff minus_ib = Field::minus_i() * Field::from_scale(b);
    std::vector<Coeff> g{Field::inv_sqrt(term.scale)};
    std::vector<Coeff> acc(term.coeffs.size(), Field::zero());
    for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
      if (m > 0) {
        std::vector<Coeff> next(g.size() + 1, Field::zero());
        for (std::size_t p = 1; p < g.size(); ++p) {
          next[p - 1] = Field::i_over_two_pi() * (Field::from_int(static_cast<long>(p)) * g[p]);
        }
        for (std::size_t p = 0; p < g.size(); ++p) next[p + 1] = next[p + 1] + minus_ib * g[p];
        g = std::move(next);
      }
      if (Field::is_zero(term.coeffs[m])) continue;
      for (std::size_t p = 0; p < g.size(); ++p) acc[p] = acc[p] + term.coeffs[m] * g[p];
    }
    out.push_back(Term{b, std::move(acc)});
  }
  return BasicGaussPoly<Field>(std::move(out));
}

/// sum_terms p(t) exp(-pi a t^2), Horner evaluation per term.
std::complex<double> eval(const GaussPoly& f, double t);

/// Upper bound of |f(t)|: sum_terms sum_m |c_m| |t|^m exp(-pi a t^2).
double envelope(const GaussPoly& f, double t);

/// Rounds every exact coefficient and scale to double.
GaussPoly to_float(const ExactGaussPoly& f);

/// Derivatives f, f', ..., f^(max_order).
std::vector<GaussPoly> derivative_ladder(const GaussPoly& f, int max_order);

}  // namespace guinand
