#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "guinand/errors.hpp"
#include "guinand/parse.hpp"

using namespace guinand;

namespace {

GaussPoly mono(std::complex<double> c, int p, double a) { return GaussPoly::monomial(c, p, a); }

std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return std::string::npos;
}

}  // namespace

TEST(Parse, CanonicalForms) {
  EXPECT_EQ(parse("t*exp(-pi*t^2)").value, mono(1, 1, 1.0));
  EXPECT_EQ(parse("t*exp(-pi*t^2/2)").value, mono(1, 1, 0.5));
  EXPECT_EQ(parse("(t^5 - t)*exp(-2*pi*t^2)").value, mono(1, 5, 2.0) - mono(1, 1, 2.0));
  EXPECT_EQ(parse("exp(-pi*t^2)").value, mono(1, 0, 1.0));
  EXPECT_EQ(parse(" t^3 * exp( - pi * t^2 ) ").value, mono(1, 3, 1.0));
}

TEST(Parse, Constants) {
  EXPECT_EQ(parse("i*t*exp(-pi*t^2)").value, mono({0, 1}, 1, 1.0));
  EXPECT_EQ(parse("-2*sqrt2*i*t*exp(-2*pi*t^2)").value, mono({0, -2 * std::numbers::sqrt2}, 1, 2.0));
  EXPECT_EQ(parse("t*exp(-pi*t^2)/4").value, mono(0.25, 1, 1.0));
  EXPECT_EQ(parse("pi*exp(-pi*t^2)").value, mono(std::numbers::pi, 0, 1.0));
}

TEST(Parse, GaussianScaleForms) {
  EXPECT_EQ(parse("exp(-t^2*pi/4)").value, mono(1, 0, 0.25));
  EXPECT_EQ(parse("exp(-0.5*pi*t^2)").value, mono(1, 0, 0.5));
  // exp(-t^2) has scale 1/pi
  EXPECT_EQ(parse("exp(-t^2)").value, mono(1, 0, 1.0 / std::numbers::pi));
}

TEST(Parse, SumsAndProducts) {
  const GaussPoly f = parse("t*exp(-pi*t^2) + t^3*exp(-pi*t^2/2) - 3*t*exp(-pi*t^2)").value;
  EXPECT_EQ(f, mono(1, 3, 0.5) - mono(2, 1, 1.0));
  EXPECT_EQ(parse("exp(-pi*t^2)*exp(-pi*t^2)").value, mono(1, 0, 2.0));
}

TEST(Parse, ErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("t*exp(pi*t^2)"), 2u);
  EXPECT_EQ(error_offset("t + "), 4u);
  EXPECT_EQ(error_offset("t*exp(-pi*t^2) $"), 15u);
  EXPECT_EQ(error_offset("foo*exp(-pi*t^2)"), 0u);
  EXPECT_EQ(error_offset("t^2"), 0u);
  error_offset("exp(-pi*t)");
  error_offset("exp(-pi*t^2*t^2)");
  error_offset("exp(-pi*t^2)/t");
  error_offset("exp(-pi*t^2)/0");
  error_offset("(t*exp(-pi*t^2)");
  error_offset("");
}

TEST(Parse, ErrorMessageNamesByte) {
  try {
    parse("t*exp(-pi*t^2) $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("at byte 15"), std::string::npos);
  }
}

TEST(Print, RoundTripsBitForBit) {
  const std::vector<GaussPoly> fs{
      mono(1, 1, 1.0), mono({0.1, -0.3}, 4, 0.7) + mono(1.0 / 3.0, 1, 2.5), mono(-1e-20, 7, 1e-3),
      mono(1, 0, 1.0 / std::numbers::pi)};
  for (const auto& f : fs) EXPECT_EQ(parse(print(f)).value, f) << print(f);
  EXPECT_EQ(print(GaussPoly{}), "0");
}
