#include <gtest/gtest.h>

#include <cmath>

#include "oco/strategy.hpp"

namespace oco {
namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec softmax(const Vec& d) {
  const Vec e = (d.array() - d.maxCoeff()).exp();
  return e / e.sum();
}

TEST(SStep, FirstRoundPlaysAnchor) {
  StrategyState s(Engine::S, MirrorMap::entropy(2), {});
  EXPECT_TRUE(s.step(Vec::Zero(2), std::nullopt).play.isApprox(v2(0.5, 0.5)));
}

TEST(SStep, SecondRoundIsSoftmax) {
  StrategyState s(Engine::S, MirrorMap::entropy(2), {});
  s.step(Vec::Zero(2), std::nullopt);
  EXPECT_TRUE(s.step(Vec::Zero(2), v2(1, 0)).play.isApprox(softmax(v2(-1, 0)), 1e-14));
}

TEST(SStep, RoundProtocolIsEnforced) {
  StrategyState s(Engine::S, MirrorMap::entropy(2), {});
  EXPECT_THROW(s.step(Vec::Zero(2), v2(1, 0)), DomainError);
  s.step(Vec::Zero(2), std::nullopt);
  EXPECT_THROW(s.step(Vec::Zero(2), std::nullopt), DomainError);
}

TEST(OnesStep, OptimisticExample) {
  StrategyState s(Engine::ONES, MirrorMap::entropy(2), {});
  s.step(Vec::Zero(2), std::nullopt);
  EXPECT_TRUE(s.step(v2(1, 0), v2(1, 0)).play.isApprox(softmax(v2(-2, 0)), 1e-14));
}

TEST(OnesStep, ZeroLossesStayUniform) {
  StrategyState s(Engine::ONES, MirrorMap::entropy(3), {});
  StepResult r = s.step(Vec::Zero(3), std::nullopt);
  for (int t = 2; t < 10; ++t) r = s.step(Vec::Zero(3), Vec::Zero(3));
  EXPECT_TRUE(r.play.isApprox(Vec::Constant(3, 1.0 / 3)));
  EXPECT_TRUE(r.tilde_play.isApprox(Vec::Constant(3, 1.0 / 3)));
}

TEST(S1Step, EntropyReproducesS) {
  ScheduleSpec sched{Rate::inv_sqrt(0.8), Rate::sqrt(0.3)};
  StrategyState a(Engine::S, MirrorMap::entropy(3), sched);
  StrategyState b(Engine::SI, MirrorMap::entropy(3), sched);
  Vec g(3), h(3);
  g << 0.4, -1, 0.2;
  h << 0.1, 0.3, -0.5;
  a.step(h, std::nullopt);
  b.step(h, std::nullopt);
  for (int t = 2; t < 30; ++t) {
    EXPECT_TRUE(a.step(h, g).play.isApprox(b.step(h, g).play, 1e-12));
    g = g.reverse().eval();
  }
}

TEST(S1Step, SquaredNormProjectsCumulativeDual) {
  const MirrorMap m = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(2), 1.0));
  StrategyState s(Engine::SI, m, {});
  s.step(Vec::Zero(2), std::nullopt);
  StepResult r;
  for (int t = 2; t < 6; ++t) r = s.step(v2(0, 0.5), v2(1, 0));
  EXPECT_TRUE(r.check_dual.isApprox(v2(-4, 0)));
  EXPECT_TRUE(r.tilde_play.isApprox(v2(-1, 0)));
  EXPECT_TRUE(r.play.isApprox(m.domain().project(v2(-1, -0.5))));
}

TEST(S2Step, FirstRound) {
  const MirrorMap m = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(2), 1.0));
  StrategyState s(Engine::SII, m, {Rate::constant(1.0), Rate::constant(0.5)});
  EXPECT_TRUE(s.step(v2(4, 0), std::nullopt).play.isApprox(v2(-1, 0)));
}

TEST(OgpStep, PinnedOnBoundary) {
  const MirrorMap m = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(2), 1.0));
  StrategyState s(Engine::OGP, m, {});
  StepResult r = s.step(Vec::Zero(2), std::nullopt);
  EXPECT_TRUE(r.play.isApprox(Vec::Zero(2)) || r.play.norm() == 0.0);
  for (int t = 2; t < 8; ++t) {
    r = s.step(Vec::Zero(2), v2(0.3, 0));
    if (0.3 * (t - 1) >= 1.0) EXPECT_TRUE(r.tilde_play.isApprox(v2(-1, 0)));
  }
}

TEST(OlpOgp, InteriorTracesCoincide) {
  const MirrorMap m = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(2), 1e6));
  StrategyState a(Engine::OLP, m, {});
  StrategyState b(Engine::OGP, m, {});
  a.step(v2(0.1, 0.2), std::nullopt);
  b.step(v2(0.1, 0.2), std::nullopt);
  for (int t = 2; t < 40; ++t) {
    const Vec g = v2(std::sin(t), std::cos(t));
    EXPECT_LT((a.step(g, g).play - b.step(g, g).play).norm(), 1e-12);
  }
}

TEST(Engines, MapRequirements) {
  const MirrorMap sq = MirrorMap::squared_norm(FeasibleSet::simplex(2));
  EXPECT_THROW(StrategyState(Engine::ONES, sq, {}), ConfigError);
  EXPECT_THROW(StrategyState(Engine::OLP, MirrorMap::entropy(2), {}), ConfigError);
  EXPECT_THROW(engine_from_string("nope"), ConfigError);
  EXPECT_EQ(engine_from_string(to_string(Engine::OGP)), Engine::OGP);
}

TEST(Lookahead, DoesNotAdvance) {
  StrategyState s(Engine::SI, MirrorMap::entropy(2), {Rate::inv_sqrt(1.0), Rate::constant(1.0)});
  s.step(Vec::Zero(2), std::nullopt);
  const StepResult la = s.lookahead(v2(1, 0));
  EXPECT_EQ(s.round(), 1);
  EXPECT_DOUBLE_EQ(la.eta, 1.0 / std::sqrt(2.0));
  EXPECT_TRUE(la.accumulated_dual.isApprox(v2(1, 0)));
}

TEST(Rate, Values) {
  EXPECT_DOUBLE_EQ(Rate::inv_sqrt(2.0).at(4), 1.0);
  EXPECT_DOUBLE_EQ(Rate::sqrt(2.0).at(4), 4.0);
  EXPECT_THROW(Rate::constant(1.0).at(0), DomainError);
}

}  // namespace
}  // namespace oco
