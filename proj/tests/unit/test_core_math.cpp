#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oco/core_math.hpp"
#include "support/oracles.hpp"

namespace oco {
namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

TEST(QRho, Examples) {
  EXPECT_EQ(q_rho(0.0, 2.0), 0.0);
  EXPECT_EQ(q_rho(1.0, 2.0), 0.5);
  EXPECT_EQ(q_rho(3.0, 2.0), kInf);
  EXPECT_EQ(q_rho(1e300, kInf), 0.5 * 1e300 * 1e300);
}

TEST(QRhoStar, Examples) {
  EXPECT_DOUBLE_EQ(q_rho_star(1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(q_rho_star(3.0, 2.0), 4.0);
  EXPECT_DOUBLE_EQ(q_rho_star(3.0, kInf), 4.5);
  EXPECT_DOUBLE_EQ(q_rho_star(-3.0, 2.0), 4.0);
}

TEST(QRhoStar, MatchesGridConjugate) {
  for (double rho : {0.25, 1.0, 2.0})
    for (double k = -4.0; k <= 4.0; k += 0.5)
      EXPECT_NEAR(q_rho_star(k, rho), testing::grid_conjugate_q_rho(k, rho), 1e-8);
}

TEST(QRhoStar, StableForLargeArguments) {
  EXPECT_DOUBLE_EQ(q_rho_star(1e15, 2.0), 2e15 - 2.0);
}

TEST(QRho, RejectsNonPositiveRho) {
  EXPECT_THROW(q_rho_star(1.0, 0.0), DomainError);
  EXPECT_THROW(ConvexModulus(-1.0), DomainError);
}

TEST(HintInterpolate, Examples) {
  const auto a = hint_interpolate(v2(1, 0), v2(3, 0), NormPair::l2());
  EXPECT_DOUBLE_EQ(a.lambda, 0.5);
  EXPECT_TRUE(a.corrected_hint.isApprox(v2(2, 0)));
  const auto b = hint_interpolate(v2(1, 0), v2(1, 0), NormPair::l1_linf());
  EXPECT_EQ(b.lambda, 1.0);
  EXPECT_EQ(b.corrected_hint, v2(1, 0));
  const auto c = hint_interpolate(v2(0, 0), v2(1, 0), NormPair::l2());
  EXPECT_EQ(c.lambda, 0.0);
  EXPECT_EQ(c.corrected_hint, v2(0, 0));
}

TEST(HintInterpolate, CorrectedErrorIsMinOfErrorAndGradient) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 500; ++i) {
    const NormPair norms = i % 2 ? NormPair::l2() : NormPair::l1_linf();
    Vec g(4), h(4);
    for (int j = 0; j < 4; ++j) g[j] = nd(rng), h[j] = 3 * nd(rng);
    const auto c = hint_interpolate(g, h, norms);
    EXPECT_NEAR(norms.dual(g - c.corrected_hint), std::min(norms.dual(g - h), norms.dual(g)), 1e-12);
    EXPECT_GE(c.lambda, 0.0);
    EXPECT_LE(c.lambda, 1.0);
  }
}

TEST(PhiCap, Examples) {
  EXPECT_DOUBLE_EQ(phi_cap(v2(1, 0), v2(3, 0), 1.0, kInf, NormPair::l2()), 1.5);
  EXPECT_EQ(phi_cap(v2(1, 0), v2(1, 0), 1.0, 2.0, NormPair::l2()), 0.0);
  EXPECT_DOUBLE_EQ(phi_cap(v2(1, 0), v2(3, 0), 1.0, 0.5, NormPair::l2()), 0.875);
}

TEST(PhiCap, ExamplesAgreeWithInfimumOracle) {
  EXPECT_NEAR(testing::phi_cap_grid(v2(1, 0), v2(3, 0), 1.0, kInf, NormPair::l2()), 1.5, 1e-6);
  EXPECT_NEAR(testing::phi_cap_grid(v2(1, 0), v2(3, 0), 1.0, 0.5, NormPair::l2()), 0.875, 1e-6);
}

TEST(PhiCap, StronglyConvexCaseNeverExceedsPlainPenalty) {
  // rho = inf: g e - g^2 / 2 <= e^2 / 2. Fails for finite rho, where the
  // plain penalty already grows only linearly.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 500; ++i) {
    Vec g(3), h(3);
    for (int j = 0; j < 3; ++j) g[j] = nd(rng), h[j] = 2 * nd(rng);
    const double xi = 0.1 + std::abs(nd(rng));
    const double rho = kInf;
    const NormPair norms = NormPair::l2();
    EXPECT_LE(phi_cap(g, h, xi, rho, norms), q_rho_star(xi * norms.dual(g - h), rho) + 1e-12);
  }
}

TEST(Kl, Examples) {
  EXPECT_EQ(kl(v2(0.5, 0.5), v2(0.5, 0.5)), 0.0);
  EXPECT_NEAR(kl(v2(1, 0), v2(0.5, 0.5)), std::log(2.0), 1e-15);
  EXPECT_NEAR(kl(v2(0.25, 0.75), v2(0.5, 0.5)), 0.25 * std::log(0.5) + 0.75 * std::log(1.5), 1e-15);
  EXPECT_THROW(kl(v2(0.5, 0.5), v2(1, 0)), DomainError);
}

TEST(LogSumExp, HandlesLargeInputs) {
  EXPECT_NEAR(log_sum_exp(v2(1000, 1000)), 1000 + std::log(2.0), 1e-12);
  const Vec ls = log_softmax(v2(-1, 0));
  EXPECT_NEAR(std::exp(ls[0]), 0.268941421369995, 1e-12);
}

TEST(Norms, DualPairs) {
  const Vec v = v2(3, -4);
  EXPECT_EQ(NormPair::l2().primal(v), 5.0);
  EXPECT_EQ(NormPair::l1_linf().primal(v), 7.0);
  EXPECT_EQ(NormPair::l1_linf().dual(v), 4.0);
}

}  // namespace
}  // namespace oco
