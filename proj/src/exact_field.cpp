#include "guinand/exact_field.hpp"

#include <sstream>
#include <stdexcept>

namespace guinand {

namespace {

HighFloat to_high(const Rational& r) {
  return HighFloat(numerator(r)) / HighFloat(denominator(r));
}

}  // namespace

std::complex<double> ComplexRational::to_complex() const {
  return {to_high(re).convert_to<double>(), to_high(im).convert_to<double>()};
}

PiLaurent::PiLaurent(ComplexRational c, int pi_power) { add_term(pi_power, c); }

PiLaurent::PiLaurent(long value) { add_term(0, {Rational(value), 0}); }

void PiLaurent::add_term(int power, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const ComplexRational& PiLaurent::as_pure() const {
  static const ComplexRational zero{};
  if (terms_.empty()) return zero;
  if (terms_.size() != 1 || terms_.begin()->first != 0) {
    throw std::domain_error("PiLaurent: value " + to_string() + " is not a Gaussian rational");
  }
  return terms_.begin()->second;
}

std::complex<double> PiLaurent::to_complex() const {
  HighFloat re = 0;
  HighFloat im = 0;
  for (const auto& [power, c] : terms_) {
    const HighFloat p = boost::multiprecision::pow(pi_high(), power);
    re += to_high(c.re) * p;
    im += to_high(c.im) * p;
  }
  return {re.convert_to<double>(), im.convert_to<double>()};
}

std::string PiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re << (c.im.sign() < 0 ? "-" : "+") << abs(c.im) << "i)";
    if (power != 0) os << "*pi^" << power;
  }
  return os.str();
}

PiLaurent& PiLaurent::operator+=(const PiLaurent& other) {
  for (const auto& [power, c] : other.terms_) add_term(power, c);
  return *this;
}

PiLaurent operator-(const PiLaurent& a) {
  PiLaurent out;
  for (const auto& [power, c] : a.terms_) out.terms_.emplace(power, ComplexRational{-c.re, -c.im});
  return out;
}

PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
  PiLaurent out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, ca * cb);
  }
  return out;
}

}  // namespace guinand
