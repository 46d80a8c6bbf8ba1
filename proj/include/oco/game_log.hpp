#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oco/mirror_map.hpp"
#include "oco/strategy.hpp"

namespace oco {

enum class LossKind { Linear, Quadratic, Monotone };

/// The round-t feedback phi_t (or monotone operator M_t), stored in a form
/// that can be re-evaluated at any point:
///   Linear:    phi(x) = <b, x>
///   Quadratic: phi(x) = x^T A x / 2 + <b, x>, A symmetric PSD
///   Monotone:  M(x) = A x + b with A monotone (A + A^T PSD); no loss value.
struct LossFunction {
  LossKind kind = LossKind::Linear;
  Mat a;
  Vec b;

  Vec gradient(const Vec& x) const;
  /// None for monotone feedback: a non-conservative operator has no potential.
  std::optional<double> value(const Vec& x) const;
  bool has_value() const { return kind != LossKind::Monotone; }
};

std::string to_string(LossKind k);

enum class AdversaryKind { Linear, Quadratic, Monotone };
enum class MonotoneShape { Skew, PsdSkew, Explicit };

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::Linear;
  double bound = 1.0;     // linear: dual-norm bound G on the loss vector
  bool adaptive = false;  // linear only: losses react to the play
  double q_max = 1.0;     // quadratic: spectral bound on A_t
  double b_max = 1.0;     // quadratic/monotone: bound on ||b_t||_2
  MonotoneShape shape = MonotoneShape::Skew;
  double scale = 1.0;     // monotone: scale of the generated matrix
  Mat matrix;             // monotone explicit matrix
};

enum class HintKind { Zero, LastGradient, Perfect, NoisyPerfect };

struct HintSpec {
  HintKind kind = HintKind::Zero;
  double sigma = 0.0;
  bool clairvoyant() const { return kind == HintKind::Perfect || kind == HintKind::NoisyPerfect; }
};

enum class ComparatorKind { Static, BestStatic, Drift };

struct ComparatorSpec {
  ComparatorKind kind = ComparatorKind::BestStatic;
  std::optional<Vec> point;  // static: u (defaults to the anchor)
  double budget = 1.0;       // drift: total path length D in the primal norm
  int waypoints = 4;
};

std::string to_string(AdversaryKind k);
std::string to_string(HintKind k);
std::string to_string(ComparatorKind k);
std::string to_string(MonotoneShape k);

/// Everything needed to replay or re-evaluate a game.
struct GameSetup {
  MirrorMap mirror = MirrorMap::entropy(2);
  Engine engine = Engine::S;
  ScheduleSpec schedule;
  AdversarySpec adversary;
  HintSpec hint;
  ComparatorSpec comparator;
  int horizon = 100;
  std::uint64_t seed = 0;
};

/// Complete trace of round t.
struct RoundRecord {
  int t = 0;
  Vec play;
  Vec gradient;
  Vec hint;
  Vec tilde_play;
  Vec tilde_dual;
  Vec check_dual;
  Vec accumulated_dual;
  double eta = 1.0;
  double theta = 1.0;
  std::optional<double> loss_value;
  LossFunction loss;
};

/// Reference points z_1..z_T in C.
struct ComparatorPath {
  std::vector<Vec> points;
  bool is_static = false;
  double path_length = 0.0;  // sum ||z_t - z_{t-1}|| in the primal norm

  static ComparatorPath constant(const Vec& u, int horizon);
  static ComparatorPath from_points(std::vector<Vec> points, const NormPair& norms);
};

struct GameLog {
  GameSetup setup;
  std::vector<RoundRecord> rounds;
  StepResult lookahead;  // round T+1 intermediates
  ComparatorPath comparator;
  bool clairvoyant_hints = false;
  bool auxiliary = false;  // replayed with corrected hints

  int horizon() const { return static_cast<int>(rounds.size()); }
  const MirrorMap& mirror() const { return setup.mirror; }
  bool has_loss_values() const;
};

/// Replays the logged strategy with hints replaced by
/// lambda * h_t + (1 - lambda) * g_t, producing the y-sequence used by the
/// auxiliary bound variants. The gradient stream is copied from the log.
GameLog build_auxiliary_log(const GameLog& log);

}  // namespace oco
