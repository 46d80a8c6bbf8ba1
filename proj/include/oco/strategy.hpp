#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oco/mirror_map.hpp"

namespace oco {

/// A positive rate c * t^p. p = 0 gives a constant, p = -1/2 the usual
/// c / sqrt(t), p = 1/2 the growing c * sqrt(t).
struct Rate {
  double c = 1.0;
  double p = 0.0;

  double at(int t) const;
  bool is_constant() const { return p == 0.0; }

  static Rate constant(double c) { return {c, 0.0}; }
  static Rate inv_sqrt(double c) { return {c, -0.5}; }
  static Rate sqrt(double c) { return {c, 0.5}; }
};

/// eta_t (cumulative parameter) and theta_t (instantaneous parameter).
struct ScheduleSpec {
  Rate eta = Rate::constant(1.0);
  Rate theta = Rate::constant(1.0);

  double eta_at(int t) const { return eta.at(t); }
  double theta_at(int t) const { return theta.at(t); }
  bool eta_monotone_nonincreasing() const { return eta.p <= 0.0; }
  bool theta_monotone_nondecreasing() const { return theta.p >= 0.0; }
  bool eta_constant_one() const { return eta.is_constant() && eta.c == 1.0; }
  bool theta_constant_one() const { return theta.is_constant() && theta.c == 1.0; }
};

/// Update engines. S, S-I and S-II run over any mirror map; ONES, OLP and OGP
/// are the closed-form instantiations (entropy / squared norm).
enum class Engine { S, SI, SII, ONES, OLP, OGP };

std::string to_string(Engine e);
Engine engine_from_string(const std::string& s);

/// The relaxation family an engine belongs to.
enum class Variant { S, SI, SII };
Variant variant_of(Engine e);

/// Output of one round of an engine.
struct StepResult {
  Vec play;              // x_t
  Vec tilde_play;        // x~_t (the point whose dual is tilde_dual)
  Vec tilde_dual;        // x~^psi_t
  Vec check_dual;        // x^psi-check_t (equals tilde_dual for S)
  Vec accumulated_dual;  // sum_{i<t} theta_i x*_i
  double eta = 1.0;
  double theta = 1.0;
};

/// Mutable single-game state machine for one engine.
///
/// Each call to a *_step consumes the previous round's gradient (absent at
/// t = 1) and the current hint, matching the function form
/// (x_t, ...) = S(hint_t, x*_{t-1}; eta_t, theta_t).
class StrategyState {
 public:
  StrategyState(Engine engine, MirrorMap mirror, ScheduleSpec schedule);

  Engine engine() const { return engine_; }
  const MirrorMap& mirror() const { return mirror_; }
  const ScheduleSpec& schedule() const { return schedule_; }
  int round() const { return round_; }
  const Vec& accumulated_dual() const { return accumulated_dual_; }
  const Vec& tilde_dual() const { return tilde_dual_; }

  /// Dispatches to the engine's own step.
  StepResult step(const Vec& hint, const std::optional<Vec>& prev_gradient);

  StepResult s_step(const Vec& hint, const std::optional<Vec>& prev_gradient);
  StepResult s1_step(const Vec& hint, const std::optional<Vec>& prev_gradient);
  StepResult s2_step(const Vec& hint, const std::optional<Vec>& prev_gradient);
  StepResult ones_step(const Vec& hint, const std::optional<Vec>& prev_loss);
  StepResult olp_step(const Vec& hint, const std::optional<Vec>& prev_gradient);
  StepResult ogp_step(const Vec& hint, const std::optional<Vec>& prev_gradient);

  /// Round-(T+1) intermediate quantities after the final gradient, with a
  /// zero hint. Does not advance the state.
  StepResult lookahead(const Vec& last_gradient) const;

 private:
  void fold(const std::optional<Vec>& prev_gradient, const Vec& hint);

  Engine engine_;
  MirrorMap mirror_;
  ScheduleSpec schedule_;
  Vec accumulated_dual_;
  Vec tilde_dual_;
  Vec last_gradient_;  // x*_{t-1}, valid once round_ >= 1
  int round_ = 0;      // rounds played so far
};

}  // namespace oco
