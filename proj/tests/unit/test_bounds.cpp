#include <gtest/gtest.h>

#include <cmath>

#include "oco/bounds.hpp"
#include "oco/game.hpp"
#include "support/oracles.hpp"
#include "support/random_games.hpp"

namespace oco {
namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

GameLog hand_log() {
  GameLog log;
  log.setup.mirror = MirrorMap::entropy(2);
  for (int t = 1; t <= 2; ++t) {
    RoundRecord r;
    r.t = t;
    r.play = v2(0.5, 0.5);
    r.loss.kind = LossKind::Linear;
    r.loss.b = v2(1, 0);
    r.gradient = r.loss.b;
    r.loss_value = r.loss.value(r.play);
    log.rounds.push_back(r);
  }
  return log;
}

TEST(PlayedRegret, HandExample) {
  const GameLog log = hand_log();
  const ComparatorPath u = ComparatorPath::constant(v2(0, 1), 2);
  EXPECT_DOUBLE_EQ(played_regret(log, u), 1.0);
  EXPECT_DOUBLE_EQ(surrogate_regret(log, u), 1.0);
  const std::vector<Vec> plays{v2(0.5, 0.5), v2(0.5, 0.5)};
  EXPECT_DOUBLE_EQ(testing::direct_linear_regret({v2(1, 0), v2(1, 0)}, plays, u.points), 1.0);
}

TEST(PlayedRegret, ZeroAgainstOwnPlays) {
  const GameLog log = hand_log();
  std::vector<Vec> pts;
  for (const RoundRecord& r : log.rounds) pts.push_back(r.play);
  EXPECT_EQ(played_regret(log, ComparatorPath::from_points(pts, NormPair::l1_linf())), 0.0);
}

TEST(PlayedRegret, BelowSurrogateOnQuadraticGames) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GameSetup s = testing::random_setup(BoundId::OgpStatic, seed, 60);
    s.adversary.kind = AdversaryKind::Quadratic;
    s.adversary.adaptive = false;
    if (s.hint.clairvoyant()) s.hint.kind = HintKind::LastGradient;
    const GameLog log = play_game(s);
    EXPECT_LE(played_regret(log, log.comparator), surrogate_regret(log, log.comparator) + 1e-9);
  }
}

TEST(PlayedRegret, MonotoneFeedbackHasNoLossValues) {
  GameSetup s;
  s.mirror = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(2), 1.0));
  s.engine = Engine::OGP;
  s.adversary.kind = AdversaryKind::Monotone;
  s.comparator.kind = ComparatorKind::Static;
  s.horizon = 10;
  const GameLog log = play_game(s);
  EXPECT_THROW(played_regret(log, log.comparator), DomainError);
  const BoundReport r = evaluate_bound(BoundId::OgpStatic, log, log.comparator);
  EXPECT_TRUE(r.surrogate_regret);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Verdict, Tolerance) {
  BoundReport r;
  r.margin = 0.3;
  EXPECT_TRUE(check_violation(r, 1e-7).pass);
  r.margin = -1e-3;
  EXPECT_FALSE(check_violation(r, 1e-7).pass);
  r.margin = -1e-9;
  EXPECT_TRUE(check_violation(r, 1e-7).pass);
  r.margin = std::nan("");
  EXPECT_FALSE(check_violation(r, 1e-7).pass);
}

TEST(OnesBound, CornerContainerIsLogNOverEta) {
  GameSetup s;
  const int n = 6;
  s.mirror = MirrorMap::entropy(n);
  s.engine = Engine::ONES;
  s.schedule.eta = Rate::inv_sqrt(0.7);
  s.horizon = 50;
  const GameLog log = play_game(s);
  const Vec corner = Vec::Unit(n, 2);
  const BoundReport r = bound_ones_static(log, corner, OnesVariant::Eta);
  EXPECT_NEAR(r.container[0], std::log(n) / s.schedule.eta_at(51), 1e-12);
  EXPECT_EQ(bound_ones_static(log, s.mirror.anchor(), OnesVariant::Eta).container[0], 0.0);
}

TEST(S1Bound, EntropyBracketVanishes) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GameSetup s = testing::random_setup(BoundId::S1Dynamic, seed, 50);
    s.mirror = MirrorMap::entropy(3);
    s.engine = Engine::S;
    s.comparator.point.reset();
    if (s.adversary.kind != AdversaryKind::Linear) s.adversary.kind = AdversaryKind::Linear;
    const GameLog log = play_game(s);
    const BoundReport a = bound_s1_dynamic(log, log.comparator);
    const BoundReport b = bound_s_dynamic(log, log.comparator);
    EXPECT_NEAR(a.total_bound, b.total_bound, 1e-9 * (1 + std::abs(b.total_bound)));
  }
}

TEST(StaticBounds, DominateDynamicOnConstantPath) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GameSetup s = testing::random_setup(BoundId::SStaticEta, seed, 80);
    s.comparator.kind = ComparatorKind::BestStatic;
    if (s.adversary.kind == AdversaryKind::Monotone) s.adversary.kind = AdversaryKind::Linear;
    const GameLog log = play_game(s);
    const Vec& u = log.comparator.points.front();
    EXPECT_LE(bound_s_dynamic(log, log.comparator).total_bound,
              bound_s_static_eta(log, u).total_bound + 1e-9);
  }
}

TEST(Subtraction, RelaxesToModulus) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GameSetup s = testing::random_setup(BoundId::SDynamic, seed, 60);
    const GameLog log = play_game(s);
    const BoundReport r = bound_s_dynamic(log, log.comparator);
    const MirrorMap& m = log.mirror();
    for (std::size_t i = 0; i < log.rounds.size(); ++i) {
      const RoundRecord& rec = log.rounds[i];
      const double phi = m.modulus().phi(m.norms().primal(rec.play - rec.tilde_play));
      EXPECT_LE(r.subtraction[i], -phi / (rec.eta * rec.theta) + 1e-9);
    }
  }
}

TEST(Tightening, StrongConvexityIsLooser) {
  for (BoundId id : {BoundId::OlpStaticEta, BoundId::OnesThetaAux, BoundId::OgpDynamic}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GameLog log = play_game(testing::random_setup(id, seed, 60));
      EvalOptions inf;
      inf.rho = kInf;
      EXPECT_LE(evaluate_bound(id, log, log.comparator).total_bound,
                evaluate_bound(id, log, log.comparator, inf).total_bound + 1e-9);
    }
  }
}

TEST(OgpBound, SquaredDriftMatchesHandSum) {
  GameSetup s;
  s.mirror = MirrorMap::squared_norm(FeasibleSet::ball(Vec::Zero(3), 1.0));
  s.engine = Engine::OGP;
  s.schedule.theta = Rate::sqrt(0.5);
  s.adversary.kind = AdversaryKind::Quadratic;
  s.hint.kind = HintKind::LastGradient;
  s.comparator.kind = ComparatorKind::Drift;
  s.comparator.budget = 1.2;
  s.horizon = 80;
  s.seed = 4;
  const GameLog log = play_game(s);
  EvalOptions sq;
  sq.ogp_drift = DriftForm::Squared;
  const BoundReport r = bound_ogp_dynamic(log, log.comparator, false, sq);
  const double rho = 2.0;
  double hand = 0.0;
  for (std::size_t t = 1; t < log.rounds.size(); ++t)
    hand += rho / s.schedule.theta_at(static_cast<int>(t) + 1) *
            (log.comparator.points[t] - log.comparator.points[t - 1]).squaredNorm();
  EXPECT_NEAR(r.container_total() - r.container[0], hand, 1e-12);
  EXPECT_GE(r.margin, -1e-7);
}

TEST(Compatibility, Rules) {
  GameSetup s;
  s.mirror = MirrorMap::entropy(3);
  s.engine = Engine::ONES;
  s.schedule.eta = Rate::inv_sqrt(1.0);
  EXPECT_THROW(require_compatible(BoundId::OlpStaticEta, s), ConfigError);
  EXPECT_THROW(require_compatible(BoundId::S2Dynamic, s), ConfigError);
  EXPECT_NO_THROW(require_compatible(BoundId::OnesEta, s));
  EXPECT_THROW(require_compatible(BoundId::OnesTheta, s), ConfigError);
  s.comparator.kind = ComparatorKind::Drift;
  EXPECT_THROW(require_compatible(BoundId::OnesEta, s), ConfigError);
  EXPECT_NO_THROW(require_compatible(BoundId::S1Dynamic, s));
}

TEST(Compatibility, EveryIdHasRandomGames) {
  for (BoundId id : all_bounds()) {
    const GameSetup s = testing::random_setup(id, 1, 10);
    EXPECT_NO_THROW(require_compatible(id, s)) << to_string(id);
    EXPECT_EQ(bound_from_string(to_string(id)), id);
  }
}

TEST(PerfectHints, PenaltiesVanish) {
  GameSetup s;
  s.mirror = MirrorMap::squared_norm(FeasibleSet::simplex(4));
  s.engine = Engine::OLP;
  s.schedule.theta = Rate::sqrt(1.0);
  s.hint.kind = HintKind::Perfect;
  s.horizon = 50;
  const GameLog log = play_game(s);
  for (BoundId id : compatible_bounds(log, log.comparator)) {
    const BoundReport r = evaluate_bound(id, log, log.comparator);
    EXPECT_EQ(r.penalty_total(), 0.0) << to_string(id);
    EXPECT_GE(r.margin, -1e-7);
  }
}

}  // namespace
}  // namespace oco
