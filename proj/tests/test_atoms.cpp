#include <gtest/gtest.h>

#include <cmath>

#include "guinand/atoms.hpp"
#include "guinand/coeffs.hpp"
#include "guinand/sumsq.hpp"

using namespace guinand;

namespace {

const std::complex<double> I{0.0, 1.0};

GaussPoly mono(std::complex<double> c, int p, double a) { return GaussPoly::monomial(c, p, a); }

PointMeasure integer_ball(int k, std::int64_t N) {
  std::vector<PointAtom> atoms;
  const auto s = static_cast<int>(isqrt(N));
  std::vector<int> m(static_cast<std::size_t>(k), -s);
  while (true) {
    std::int64_t r2 = 0;
    for (int v : m) r2 += v * v;
    if (r2 <= N) atoms.push_back({std::vector<double>(m.begin(), m.end()), {1.0, 0.0}});
    int i = 0;
    while (i < k && m[i] == s) m[i++] = -s;
    if (i == k) break;
    ++m[i];
  }
  return PointMeasure(k, std::move(atoms));
}

void expect_same_comb(const AtomComb& a, const AtomComb& b, double rel) {
  ASSERT_EQ(a.atoms().size(), b.atoms().size());
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    const Atom& x = a.atoms()[i];
    const Atom& y = b.atoms()[i];
    EXPECT_EQ(x.order, y.order);
    EXPECT_NEAR(x.location, y.location, 1e-15 * (1 + std::abs(x.location)));
    EXPECT_NEAR(std::abs(x.weight - y.weight), 0.0, rel * std::abs(x.weight)) << i;
  }
}

}  // namespace

TEST(Sigma, StructureForThreeSquares) {
  const AtomComb s = sigma_k(3, 4);
  // origin atom plus +-sqrt(n) for n = 1..4 (r_3 nonzero on all of them)
  ASSERT_EQ(s.atoms().size(), 9u);
  const Atom& origin = s.atoms()[4];
  EXPECT_EQ(origin.location, 0.0);
  EXPECT_EQ(origin.order, 1);
  EXPECT_EQ(origin.weight, std::complex<double>(-2.0));
  EXPECT_EQ(s.atoms()[5].weight, std::complex<double>(6.0));
  EXPECT_EQ(s.atoms()[3].weight, std::complex<double>(-6.0));
  EXPECT_EQ(s.max_order(), 1);
}

TEST(Sigma, SkipsEmptyShells) {
  const AtomComb s = sigma_k(3, 7);
  for (const auto& a : s.atoms()) EXPECT_NE(a.n, std::optional<std::int64_t>(7));
}

TEST(Sigma, GuinandSelfDualityIsExact) {
  const AtomComb s = sigma_k(3, 400);
  const AtomComb h = sigma_k_hat(3, 400);
  ASSERT_EQ(s.atoms().size(), h.atoms().size());
  for (std::size_t i = 0; i < s.atoms().size(); ++i) {
    EXPECT_EQ(h.atoms()[i].location, s.atoms()[i].location);
    EXPECT_EQ(h.atoms()[i].order, s.atoms()[i].order);
    EXPECT_EQ(h.atoms()[i].weight, -I * s.atoms()[i].weight);
  }
}

TEST(Sigma, HatOriginAtom) {
  const AtomComb h = sigma_k_hat(5, 3);
  const auto it = std::find_if(h.atoms().begin(), h.atoms().end(), [](const Atom& a) { return a.location == 0.0; });
  ASSERT_NE(it, h.atoms().end());
  EXPECT_EQ(it->order, 3);
  EXPECT_DOUBLE_EQ(it->weight.imag(), 2.0 * alpha(5).to_double());
  EXPECT_EQ(h.max_order(), 3);
}

TEST(Pair, DerivativeConvention) {
  // <delta_x^(j), f> = (-1)^j f^(j)(x)
  const GaussPoly f = mono(1, 3, 1.0);
  const AtomComb c({{0.5, 2, {2.0, 0.0}, std::nullopt}, {0.3, 1, {1.0, 0.0}, std::nullopt}}, {});
  const std::complex<double> expected =
      2.0 * eval(derivative(f, 2), 0.5) - eval(derivative(f, 1), 0.3);
  EXPECT_NEAR(std::abs(pair(c, f) - expected), 0.0, 1e-15);
}

TEST(Pair, SigmaAgainstOddFunctionDoublesShellSum) {
  const GaussPoly phi = mono(1, 1, 1.0);
  const RepTable t = rk_table(3, 50);
  std::complex<double> expected = -2.0 * eval(derivative(phi), 0.0) * -1.0;
  for (std::int64_t n = 1; n <= 50; ++n) expected += 2.0 * t.as_double(n) / std::sqrt(n) * eval(phi, std::sqrt(n));
  EXPECT_NEAR(std::abs(pair(sigma_k(3, 50), phi) - expected), 0.0, 1e-14);
}

TEST(Comb, MergesAndDropsZeros) {
  const AtomComb c({{1.0, 0, {1.0, 0.0}, 1}, {1.0, 0, {-1.0, 0.0}, 1}, {2.0, 0, {3.0, 0.0}, 4}, {2.0, 1, {1.0, 0.0}, 4}},
                   {});
  ASSERT_EQ(c.atoms().size(), 2u);
  EXPECT_EQ(c.atoms()[0].location, 2.0);
  EXPECT_EQ(c.atoms()[0].order, 0);
  EXPECT_THROW(AtomComb({{0.0, 0, {NAN, 0.0}, std::nullopt}}, {}), std::invalid_argument);
  EXPECT_THROW(AtomComb({{0.0, -1, {1.0, 0.0}, std::nullopt}}, {}), std::invalid_argument);
}

TEST(Comb, JsonRoundTrip) {
  const AtomComb s = sigma_k_hat(5, 20);
  const nlohmann::json j = to_json(s);
  const AtomComb back = comb_from_json(j);
  ASSERT_EQ(back.atoms().size(), s.atoms().size());
  for (std::size_t i = 0; i < s.atoms().size(); ++i) {
    EXPECT_EQ(back.atoms()[i].weight, s.atoms()[i].weight);
    EXPECT_EQ(back.atoms()[i].location, s.atoms()[i].location);
    EXPECT_EQ(back.atoms()[i].n, s.atoms()[i].n);
  }
  EXPECT_TRUE(j[0].contains("weight"));
  EXPECT_THROW(comb_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST(Projection, IntegerBallGivesSigma) {
  for (int k : {3, 5}) {
    const PointMeasure mu = integer_ball(k, 12);
    expect_same_comb(project_measure(mu), sigma_k(k, 12), 1e-15);
    expect_same_comb(project_ft(mu, k), sigma_k_hat(k, 12), 1e-14);
  }
}

TEST(Projection, RadialAtomsMergeOffLattice) {
  // Two points at the same non-integral radius merge into one shell.
  const PointMeasure mu(3, {{{0.5, 0.5, 0.5}, {1.0, 0.0}}, {{-0.5, -0.5, -0.5}, {2.0, 0.0}}});
  const AtomComb c = project_measure(mu);
  ASSERT_EQ(c.atoms().size(), 2u);
  const double r = std::sqrt(0.75);
  EXPECT_NEAR(c.atoms()[1].weight.real(), 3.0 / r, 1e-15);
  EXPECT_THROW(project_ft(mu, 5), std::invalid_argument);
}

TEST(PointMeasureChecks, RejectsBadInput) {
  EXPECT_THROW(PointMeasure(3, {{{1.0, 2.0}, {1.0, 0.0}}}), std::invalid_argument);
  EXPECT_THROW(PointMeasure(1, {{{1.0}, {1.0, 0.0}}, {{1.0}, {2.0, 0.0}}}), std::invalid_argument);
}
