#pragma once

#include <cstdint>
#include <random>

#include "oco/bounds.hpp"
#include "oco/game.hpp"

namespace oco::testing {

enum class MapChoice { Entropy, SquaredNorm, Either };

inline MapChoice map_for(BoundId id) {
  const std::string name = to_string(id);
  if (name.rfind("ones", 0) == 0) return MapChoice::Entropy;
  if (name.rfind("olp", 0) == 0 || name.rfind("ogp", 0) == 0) return MapChoice::SquaredNorm;
  return MapChoice::Either;
}

inline FeasibleSet random_set(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(0.2, 2.0);
  switch (rng() % 3) {
    case 0: {
      Vec c = Vec::Zero(dim);
      for (int i = 0; i < dim; ++i) c[i] = u(rng) - 1.0;
      return FeasibleSet::ball(c, u(rng));
    }
    case 1: {
      Vec lo(dim), hi(dim);
      for (int i = 0; i < dim; ++i) {
        lo[i] = -u(rng);
        hi[i] = u(rng);
      }
      return FeasibleSet::box(lo, hi);
    }
    default:
      return FeasibleSet::simplex(dim);
  }
}

inline double pick(std::mt19937_64& rng, std::initializer_list<double> values) {
  auto it = values.begin();
  std::advance(it, static_cast<long>(rng() % values.size()));
  return *it;
}

/// A random game satisfying every precondition of `id`.
inline GameSetup random_setup(BoundId id, std::uint64_t seed, int horizon) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(id) * 7919 + 1);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  GameSetup s;
  s.seed = seed;
  s.horizon = horizon;
  const int dim = 2 + static_cast<int>(rng() % 5);

  MapChoice mc = map_for(id);
  if (mc == MapChoice::Either) mc = rng() % 2 ? MapChoice::Entropy : MapChoice::SquaredNorm;
  if (mc == MapChoice::Entropy) {
    std::optional<Vec> anchor;
    if (rng() % 2) anchor = FeasibleSet::simplex(dim).sample(rng());
    s.mirror = MirrorMap::entropy(dim, anchor);
  } else {
    FeasibleSet set = random_set(rng, dim);
    std::optional<Vec> anchor;
    if (rng() % 2) anchor = set.sample(rng());
    s.mirror = MirrorMap::squared_norm(set, anchor);
  }
  const bool entropy = mc == MapChoice::Entropy;

  switch (id) {
    case BoundId::S1Dynamic:
      s.engine = entropy ? (rng() % 2 ? Engine::SI : Engine::ONES)
                         : static_cast<Engine>(pick(rng, {0, 1, 4}));
      if (entropy && rng() % 3 == 0) s.engine = Engine::S;
      break;
    case BoundId::SDynamic:
    case BoundId::SStaticEta:
    case BoundId::SStaticTheta:
      s.engine = entropy && rng() % 2 ? Engine::ONES : Engine::S;
      break;
    case BoundId::S2Dynamic:
      s.engine = !entropy && rng() % 2 ? Engine::OGP : Engine::SII;
      break;
    case BoundId::OnesEta:
    case BoundId::OnesTheta:
    case BoundId::OnesEtaAux:
    case BoundId::OnesThetaAux:
      s.engine = rng() % 2 ? Engine::ONES : Engine::S;
      break;
    case BoundId::OlpDynamic:
    case BoundId::OlpDynamicAux:
    case BoundId::OlpStaticEta:
    case BoundId::OlpStaticEtaAux:
    case BoundId::OlpStaticTheta:
    case BoundId::OlpStaticThetaAux:
      s.engine = rng() % 2 ? Engine::OLP : Engine::SI;
      break;
    default:
      s.engine = rng() % 2 ? Engine::OGP : Engine::SII;
      break;
  }

  // Schedules per regime.
  const double c1 = 0.05 + 2.0 * u01(rng);
  const double c2 = 0.05 + 2.0 * u01(rng);
  const std::string name = to_string(id);
  const bool eta_regime = name.find("_eta") != std::string::npos;
  const bool theta_regime = name.find("_theta") != std::string::npos ||
                            name.rfind("olp_dynamic", 0) == 0 || name.rfind("ogp", 0) == 0;
  if (eta_regime) {
    s.schedule.theta = Rate::constant(1.0);
    s.schedule.eta = Rate{c1, pick(rng, {0.0, -0.5, -1.0 / 3.0, -1.0})};
  } else if (theta_regime) {
    s.schedule.eta = Rate::constant(1.0);
    s.schedule.theta = Rate{c2, pick(rng, {0.0, 0.5, 0.25, 1.0})};
  } else {
    s.schedule.eta = Rate{c1, pick(rng, {0.0, -0.5, 0.5, -1.0})};
    s.schedule.theta = Rate{c2, pick(rng, {0.0, -0.5, 0.5, 0.25})};
  }

  // Adversary.
  const int adv = static_cast<int>(rng() % 4);
  if (adv <= 1) {
    s.adversary.kind = AdversaryKind::Linear;
    s.adversary.bound = 0.2 + 3.0 * u01(rng);
    s.adversary.adaptive = adv == 1;
  } else if (adv == 2) {
    s.adversary.kind = AdversaryKind::Quadratic;
    s.adversary.q_max = 2.0 * u01(rng);
    s.adversary.b_max = 2.0 * u01(rng);
  } else {
    s.adversary.kind = AdversaryKind::Monotone;
    s.adversary.shape = rng() % 2 ? MonotoneShape::Skew : MonotoneShape::PsdSkew;
    s.adversary.scale = 0.1 + 2.0 * u01(rng);
    s.adversary.b_max = 2.0 * u01(rng);
  }

  // Hints.
  const bool oblivious = s.adversary.kind == AdversaryKind::Linear && !s.adversary.adaptive;
  const int h = static_cast<int>(rng() % (oblivious ? 4 : 2));
  s.hint.kind = static_cast<HintKind>(h);
  if (s.hint.kind == HintKind::NoisyPerfect) s.hint.sigma = pick(rng, {0.01, 0.1, 1.0, 10.0});

  // Comparator.
  const bool losses = s.adversary.kind != AdversaryKind::Monotone;
  const int c = static_cast<int>(rng() % 3);
  if (c == 0 || (!losses && c == 1 && is_static_bound(id))) {
    s.comparator.kind = ComparatorKind::Static;
    s.comparator.point = s.mirror.domain().sample(rng());
  } else if (c == 1 && losses) {
    s.comparator.kind = ComparatorKind::BestStatic;
  } else if (!is_static_bound(id)) {
    s.comparator.kind = ComparatorKind::Drift;
    s.comparator.budget = pick(rng, {0.1, 1.0, 5.0, 50.0});
    s.comparator.waypoints = 1 + static_cast<int>(rng() % 6);
  } else {
    s.comparator.kind = losses ? ComparatorKind::BestStatic : ComparatorKind::Static;
  }
  return s;
}

}  // namespace oco::testing
