#include "guinand/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <numbers>

namespace guinand {

namespace {

using Complex = std::complex<double>;

// Scale 0 holds the polynomial part that has no Gaussian factor yet.
class ExprValue {
 public:
  static ExprValue constant(Complex c) {
    ExprValue v;
    v.terms_[0.0] = {c};
    return v;
  }
  static ExprValue power_of_t(int m) {
    ExprValue v;
    std::vector<Complex> coeffs(static_cast<std::size_t>(m) + 1);
    coeffs.back() = 1.0;
    v.terms_[0.0] = std::move(coeffs);
    return v;
  }
  static ExprValue gaussian(double scale) {
    ExprValue v;
    v.terms_[scale] = {1.0};
    return v;
  }

  friend ExprValue operator+(const ExprValue& a, const ExprValue& b) {
    ExprValue out = a;
    for (const auto& [scale, coeffs] : b.terms_) {
      auto& into = out.terms_[scale];
      if (into.size() < coeffs.size()) into.resize(coeffs.size());
      for (std::size_t m = 0; m < coeffs.size(); ++m) into[m] += coeffs[m];
    }
    return out;
  }

  friend ExprValue operator*(const ExprValue& a, const ExprValue& b) {
    ExprValue out;
    for (const auto& [sa, ca] : a.terms_) {
      for (const auto& [sb, cb] : b.terms_) {
        auto& into = out.terms_[sa + sb];
        if (into.size() < ca.size() + cb.size() - 1) into.resize(ca.size() + cb.size() - 1);
        for (std::size_t i = 0; i < ca.size(); ++i) {
          for (std::size_t j = 0; j < cb.size(); ++j) into[i + j] += ca[i] * cb[j];
        }
      }
    }
    return out;
  }

  ExprValue negated() const { return ExprValue::constant(-1.0) * *this; }

  // A pure constant, if this value is one.
  bool as_constant(Complex& c) const {
    c = 0.0;
    for (const auto& [scale, coeffs] : terms_) {
      for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == Complex{}) continue;
        if (scale != 0.0 || m != 0) return false;
        c = coeffs[m];
      }
    }
    return true;
  }

  const std::map<double, std::vector<Complex>>& terms() const { return terms_; }

 private:
  std::map<double, std::vector<Complex>> terms_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  GaussPoly run() {
    ExprValue value = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");

    std::vector<GaussPoly::Term> terms;
    for (const auto& [scale, coeffs] : value.terms()) {
      const bool nonzero = std::any_of(coeffs.begin(), coeffs.end(),
                                       [](const Complex& c) { return c != Complex{}; });
      if (!nonzero) continue;
      if (scale == 0.0) {
        throw ParseError("polynomial part without a Gaussian factor is not a Schwartz function", 0);
      }
      terms.push_back({scale, coeffs});
    }
    return GaussPoly(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  bool at_number() {
    skip_ws();
    return pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.');
  }

  double number() {
    skip_ws();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc{}) fail("malformed number");
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return value;
  }

  int small_integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc{} || value < 0 || value > 64) fail("exponent of t must be an integer in [0, 64]");
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return value;
  }

  ExprValue expr() {
    ExprValue value = term();
    while (true) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value + term().negated();
      } else {
        return value;
      }
    }
  }

  ExprValue term() {
    ExprValue value = factor();
    while (true) {
      if (accept('*')) {
        value = value * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Complex divisor;
        if (!factor().as_constant(divisor)) throw ParseError("division is only allowed by constants", at);
        if (divisor == Complex{}) throw ParseError("division by zero", at);
        value = value * ExprValue::constant(1.0 / divisor);
      } else {
        return value;
      }
    }
  }

  ExprValue factor() {
    if (accept('-')) return factor().negated();
    if (accept('+')) return factor();
    if (accept('(')) {
      ExprValue inner = expr();
      expect(')');
      return inner;
    }
    if (at_number()) return ExprValue::constant(number());

    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "i") return ExprValue::constant({0.0, 1.0});
    if (name == "pi") return ExprValue::constant(std::numbers::pi);
    if (name == "sqrt2") return ExprValue::constant(std::numbers::sqrt2);
    if (name == "t") return ExprValue::power_of_t(accept('^') ? small_integer() : 1);
    if (name == "exp") {
      expect('(');
      const double scale = gauss_argument(at);
      expect(')');
      return ExprValue::gaussian(scale);
    }
    if (name.empty()) {
      if (pos_ >= src_.size()) throw ParseError("unexpected end of input", at);
      throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'", at);
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  // Reads c in exp(c * t^2) as sign * value * pi^pi_power and returns a = -c / pi.
  double gauss_argument(std::size_t exp_at) {
    double value = accept('-') ? -1.0 : 1.0;
    int pi_power = 0;
    int t2_count = 0;
    bool dividing = false;
    while (true) {
      const std::size_t at = pos_;
      if (at_number()) {
        const double x = number();
        if (dividing && x == 0.0) throw ParseError("division by zero", at);
        value = dividing ? value / x : value * x;
      } else {
        const std::string name = identifier();
        if (name == "pi") {
          pi_power += dividing ? -1 : 1;
        } else if (name == "t") {
          if (!accept('^') || small_integer() != 2 || dividing) {
            throw ParseError("Gaussian exponent must contain t^2 exactly once, in the numerator", at);
          }
          ++t2_count;
        } else {
          throw ParseError("unexpected token in Gaussian exponent", at);
        }
      }
      if (accept('*')) {
        dividing = false;
      } else if (accept('/')) {
        dividing = true;
      } else {
        break;
      }
    }
    if (t2_count != 1) throw ParseError("Gaussian exponent must contain t^2 exactly once", exp_at);
    double scale = -value;
    for (int p = pi_power - 1; p > 0; --p) scale *= std::numbers::pi;
    for (int p = pi_power - 1; p < 0; ++p) scale /= std::numbers::pi;
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      throw ParseError("Gaussian scale must be positive (exp(-pi*q*t^2) with q > 0)", exp_at);
    }
    return scale;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

ParsedExpr parse(std::string_view expr) { return {std::string(expr), Parser(expr).run()}; }

std::string print(const GaussPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& term : f.terms()) {
    std::string poly;
    for (std::size_t m = 0; m < term.coeffs.size(); ++m) {
      const Complex c = term.coeffs[m];
      if (c == Complex{}) continue;
      if (!poly.empty()) poly += " + ";
      poly += "(" + format_double(c.real()) + (std::signbit(c.imag()) ? "-" : "+") +
              format_double(std::abs(c.imag())) + "*i)";
      if (m > 0) poly += "*t^" + std::to_string(m);
    }
    if (!out.empty()) out += " + ";
    out += "(" + poly + ")*exp(-pi*" + format_double(term.scale) + "*t^2)";
  }
  return out;
}

}  // namespace guinand
