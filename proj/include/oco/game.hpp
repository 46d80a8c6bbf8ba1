#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oco/game_log.hpp"

namespace oco {

/// Stream seed for (game seed, round, purpose); independent across rounds so
/// replays and parallel fan-out are deterministic.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t salt);

/// Loss generator with a known dual-norm bound on every gradient over C.
class Adversary {
 public:
  Adversary(AdversarySpec spec, const MirrorMap& mirror, std::uint64_t seed);

  /// Draws phi_t. `play` is only read by adaptive adversaries.
  LossFunction draw(int t, const Vec& play) const;
  /// True when draw(t, .) does not depend on the play and is linear, so its
  /// gradient can be revealed before the play.
  bool oblivious_linear() const;
  /// sup over C and t of ||grad phi_t||_*.
  double declared_bound() const { return declared_bound_; }
  const AdversarySpec& spec() const { return spec_; }
  const Mat& monotone_matrix() const { return matrix_; }

 private:
  Vec unit_dual_ball(std::mt19937_64& rng) const;

  AdversarySpec spec_;
  FeasibleSet domain_;
  NormPair norms_;
  std::uint64_t seed_;
  Vec bias_;
  Mat matrix_;
  double declared_bound_ = 0.0;
};

/// Produces hint_t from the information the protocol allows.
class HintOracle {
 public:
  HintOracle(HintSpec spec, std::uint64_t seed) : spec_(spec), seed_(seed) {}

  /// `last_gradient` is x*_{t-1} (absent at t = 1); `upcoming` is x*_t and is
  /// only consulted by the clairvoyant kinds.
  Vec hint(int t, int dimension, const std::optional<Vec>& last_gradient,
           const std::optional<Vec>& upcoming) const;
  const HintSpec& spec() const { return spec_; }

 private:
  HintSpec spec_;
  std::uint64_t seed_;
};

/// Piecewise-linear path through waypoints, advanced at constant speed in the
/// primal norm so that the total travelled length is at most `budget`.
ComparatorPath drift_path(const FeasibleSet& set, const NormPair& norms, int horizon,
                          double budget, int waypoints, std::uint64_t seed);

/// argmin over u in C of sum_t phi_t(u). Linear losses use the closed form
/// (lowest-index vertex on ties for the simplex); otherwise accelerated
/// projected gradient with step 1 / lambda_max for a fixed iteration count.
Vec best_static_comparator(const std::vector<LossFunction>& losses, const FeasibleSet& set);

ComparatorPath make_comparator(const ComparatorSpec& spec, const MirrorMap& mirror, int horizon,
                               const std::vector<LossFunction>& losses, std::uint64_t seed);

/// Runs the full protocol and records every round.
GameLog play_game(const GameSetup& setup);

}  // namespace oco
