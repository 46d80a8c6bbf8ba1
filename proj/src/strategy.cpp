#include "oco/strategy.hpp"

#include <cmath>

namespace oco {

double Rate::at(int t) const {
  if (t < 1) throw DomainError("schedule evaluated at round < 1");
  if (!(c > 0.0)) throw DomainError("schedule constant must be positive");
  return p == 0.0 ? c : c * std::pow(static_cast<double>(t), p);
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::S: return "S";
    case Engine::SI: return "S-I";
    case Engine::SII: return "S-II";
    case Engine::ONES: return "ONES";
    case Engine::OLP: return "OLP";
    case Engine::OGP: return "OGP";
  }
  return "?";
}

Engine engine_from_string(const std::string& s) {
  if (s == "S") return Engine::S;
  if (s == "S-I" || s == "SI") return Engine::SI;
  if (s == "S-II" || s == "SII") return Engine::SII;
  if (s == "ONES") return Engine::ONES;
  if (s == "OLP") return Engine::OLP;
  if (s == "OGP") return Engine::OGP;
  throw ConfigError("unknown strategy '" + s + "'");
}

Variant variant_of(Engine e) {
  switch (e) {
    case Engine::S:
    case Engine::ONES: return Variant::S;
    case Engine::SI:
    case Engine::OLP: return Variant::SI;
    case Engine::SII:
    case Engine::OGP: return Variant::SII;
  }
  return Variant::S;
}

StrategyState::StrategyState(Engine engine, MirrorMap mirror, ScheduleSpec schedule)
    : engine_(engine), mirror_(std::move(mirror)), schedule_(schedule) {
  if (engine_ == Engine::ONES && mirror_.kind() != MirrorKind::Entropy) {
    throw ConfigError("ONES requires the entropy mirror map");
  }
  if ((engine_ == Engine::OLP || engine_ == Engine::OGP) &&
      mirror_.kind() != MirrorKind::SquaredNorm) {
    throw ConfigError(to_string(engine_) + " requires the squared-norm mirror map");
  }
  accumulated_dual_ = Vec::Zero(mirror_.dimension());
  tilde_dual_ = mirror_.anchor_dual();
  last_gradient_ = Vec::Zero(mirror_.dimension());
}

void StrategyState::fold(const std::optional<Vec>& prev_gradient, const Vec& hint) {
  require_same_dim(hint.size(), mirror_.dimension(), "hint");
  if (round_ == 0) {
    if (prev_gradient) throw DomainError("no previous gradient exists at round 1");
  } else {
    if (!prev_gradient) throw DomainError("previous gradient required for rounds t >= 2");
    require_same_dim(prev_gradient->size(), mirror_.dimension(), "gradient");
    accumulated_dual_ += schedule_.theta_at(round_) * *prev_gradient;
    last_gradient_ = *prev_gradient;
  }
  ++round_;
}

StepResult StrategyState::step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  switch (engine_) {
    case Engine::S: return s_step(hint, prev_gradient);
    case Engine::SI: return s1_step(hint, prev_gradient);
    case Engine::SII: return s2_step(hint, prev_gradient);
    case Engine::ONES: return ones_step(hint, prev_gradient);
    case Engine::OLP: return olp_step(hint, prev_gradient);
    case Engine::OGP: return ogp_step(hint, prev_gradient);
  }
  return {};
}

StepResult StrategyState::s_step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  fold(prev_gradient, hint);
  StepResult r;
  r.eta = schedule_.eta_at(round_);
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  r.tilde_dual = mirror_.anchor_dual() - r.eta * accumulated_dual_;
  r.check_dual = r.tilde_dual;
  r.tilde_play = mirror_.mirror_step(r.tilde_dual);
  r.play = mirror_.mirror_step(r.tilde_dual - r.eta * r.theta * hint);
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::s1_step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  fold(prev_gradient, hint);
  StepResult r;
  r.eta = schedule_.eta_at(round_);
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  r.check_dual = mirror_.anchor_dual() - r.eta * accumulated_dual_;
  r.tilde_play = mirror_.mirror_step(r.check_dual);
  // Re-select a subgradient at x~_t; may differ from the check point.
  r.tilde_dual = mirror_.reselect(r.check_dual);
  r.play = mirror_.mirror_step(r.tilde_dual - r.eta * r.theta * hint);
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::s2_step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  const Vec previous_tilde = tilde_dual_;
  fold(prev_gradient, hint);
  StepResult r;
  r.eta = 1.0;
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  if (round_ == 1) {
    r.check_dual = mirror_.anchor_dual();
    r.tilde_dual = mirror_.anchor_dual();
  } else {
    r.check_dual = previous_tilde - schedule_.theta_at(round_ - 1) * last_gradient_;
    r.tilde_dual = mirror_.reselect(r.check_dual);
  }
  r.tilde_play = mirror_.mirror_step(r.tilde_dual);
  r.play = mirror_.mirror_step(r.tilde_dual - r.theta * hint);
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::ones_step(const Vec& hint, const std::optional<Vec>& prev_loss) {
  fold(prev_loss, hint);
  StepResult r;
  r.eta = schedule_.eta_at(round_);
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  // w_t = N(a o exp(-eta (sum theta_i l_i + theta_t l^_t))), in logs.
  const Vec log_a = mirror_.anchor().array().log();
  const Vec log_tilde = log_softmax(log_a - r.eta * accumulated_dual_);
  const Vec log_play = log_softmax(log_a - r.eta * (accumulated_dual_ + r.theta * hint));
  r.tilde_play = log_tilde.array().exp();
  r.play = log_play.array().exp();
  r.tilde_play /= r.tilde_play.sum();
  r.play /= r.play.sum();
  r.tilde_dual = mirror_.anchor_dual() - r.eta * accumulated_dual_;
  r.check_dual = r.tilde_dual;
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::olp_step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  fold(prev_gradient, hint);
  const FeasibleSet& c = mirror_.domain();
  StepResult r;
  r.eta = schedule_.eta_at(round_);
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  r.check_dual = mirror_.anchor() - r.eta * accumulated_dual_;
  r.tilde_play = c.project(r.check_dual);
  r.tilde_dual = r.tilde_play;
  r.play = c.project(r.tilde_play - r.eta * r.theta * hint);
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::ogp_step(const Vec& hint, const std::optional<Vec>& prev_gradient) {
  const Vec previous_tilde = tilde_dual_;
  fold(prev_gradient, hint);
  const FeasibleSet& c = mirror_.domain();
  StepResult r;
  r.eta = 1.0;
  r.theta = schedule_.theta_at(round_);
  r.accumulated_dual = accumulated_dual_;
  if (round_ == 1) {
    r.check_dual = mirror_.anchor();
    r.tilde_play = mirror_.anchor();
  } else {
    r.check_dual = previous_tilde - schedule_.theta_at(round_ - 1) * last_gradient_;
    r.tilde_play = c.project(r.check_dual);
  }
  r.tilde_dual = r.tilde_play;
  r.play = c.project(r.tilde_play - r.theta * hint);
  tilde_dual_ = r.tilde_dual;
  return r;
}

StepResult StrategyState::lookahead(const Vec& last_gradient) const {
  if (round_ == 0) throw DomainError("lookahead before the first round");
  require_same_dim(last_gradient.size(), mirror_.dimension(), "gradient");
  const int t = round_ + 1;
  StepResult r;
  r.theta = schedule_.theta_at(t);
  r.accumulated_dual = accumulated_dual_ + schedule_.theta_at(round_) * last_gradient;
  switch (variant_of(engine_)) {
    case Variant::S:
      r.eta = schedule_.eta_at(t);
      r.check_dual = mirror_.anchor_dual() - r.eta * r.accumulated_dual;
      r.tilde_dual = r.check_dual;
      break;
    case Variant::SI:
      r.eta = schedule_.eta_at(t);
      r.check_dual = mirror_.anchor_dual() - r.eta * r.accumulated_dual;
      r.tilde_dual = mirror_.reselect(r.check_dual);
      break;
    case Variant::SII:
      r.eta = 1.0;
      r.check_dual = tilde_dual_ - schedule_.theta_at(round_) * last_gradient;
      r.tilde_dual = mirror_.reselect(r.check_dual);
      break;
  }
  r.tilde_play = mirror_.mirror_step(r.tilde_dual);
  r.play = r.tilde_play;
  return r;
}

}  // namespace oco
