#include "guinand/schwartz.hpp"

#include <boost/multiprecision/integer.hpp>

namespace guinand {

namespace {

bool exact_sqrt(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

PiLaurent ExactField::inv_sqrt(const Rational& a) {
  BigInt num_root;
  BigInt den_root;
  if (!exact_sqrt(numerator(a), num_root) || !exact_sqrt(denominator(a), den_root)) {
    throw NotExact("fourier: scale " + a.str() + " has no rational square root; use float mode");
  }
  return PiLaurent::real(Rational(den_root, num_root));
}

std::complex<double> eval(const GaussPoly& f, double t) {
  std::complex<double> total{};
  for (const auto& term : f.terms()) {
    std::complex<double> p{};
    for (auto it = term.coeffs.rbegin(); it != term.coeffs.rend(); ++it) p = p * t + *it;
    total += p * std::exp(-std::numbers::pi * term.scale * t * t);
  }
  return total;
}

double envelope(const GaussPoly& f, double t) {
  const double at = std::abs(t);
  double total = 0.0;
  for (const auto& term : f.terms()) {
    double p = 0.0;
    for (auto it = term.coeffs.rbegin(); it != term.coeffs.rend(); ++it) p = p * at + std::abs(*it);
    total += p * std::exp(-std::numbers::pi * term.scale * t * t);
  }
  return total;
}

GaussPoly to_float(const ExactGaussPoly& f) {
  std::vector<GaussPoly::Term> terms;
  for (const auto& term : f.terms()) {
    GaussPoly::Term out;
    const Rational& a = term.scale;
    out.scale = (HighFloat(numerator(a)) / HighFloat(denominator(a))).convert_to<double>();
    for (const auto& c : term.coeffs) out.coeffs.push_back(c.to_complex());
    terms.push_back(std::move(out));
  }
  return GaussPoly(std::move(terms));
}

std::vector<GaussPoly> derivative_ladder(const GaussPoly& f, int max_order) {
  std::vector<GaussPoly> out{f};
  for (int j = 1; j <= max_order; ++j) out.push_back(derivative(out.back(), 1));
  return out;
}

}  // namespace guinand
