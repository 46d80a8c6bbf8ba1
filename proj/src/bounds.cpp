#include "oco/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oco {

namespace {

struct BoundName {
  BoundId id;
  const char* name;
};

constexpr BoundName kNames[] = {
    {BoundId::S1Dynamic, "s1_dynamic"},
    {BoundId::SDynamic, "s_dynamic"},
    {BoundId::SStaticEta, "s_static_eta"},
    {BoundId::SStaticTheta, "s_static_theta"},
    {BoundId::S2Dynamic, "s2_dynamic"},
    {BoundId::OnesEta, "ones_eta"},
    {BoundId::OnesTheta, "ones_theta"},
    {BoundId::OnesEtaAux, "ones_eta_aux"},
    {BoundId::OnesThetaAux, "ones_theta_aux"},
    {BoundId::OlpDynamic, "olp_dynamic"},
    {BoundId::OlpDynamicAux, "olp_dynamic_aux"},
    {BoundId::OlpStaticEta, "olp_static_eta"},
    {BoundId::OlpStaticEtaAux, "olp_static_eta_aux"},
    {BoundId::OlpStaticTheta, "olp_static_theta"},
    {BoundId::OlpStaticThetaAux, "olp_static_theta_aux"},
    {BoundId::OgpDynamic, "ogp_dynamic"},
    {BoundId::OgpDynamicAux, "ogp_dynamic_aux"},
    {BoundId::OgpStatic, "ogp_static"},
    {BoundId::OgpStaticAux, "ogp_static_aux"},
};

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double rho_for(const GameLog& log, const EvalOptions& options) {
  return options.rho > 0.0 ? options.rho : log.mirror().modulus().rho();
}

BoundReport start(const char* id, const GameLog& log) {
  if (log.rounds.empty()) throw ConfigError(std::string(id) + ": empty log");
  BoundReport r;
  r.corollary_id = id;
  const auto n = log.rounds.size();
  r.container.assign(n, 0.0);
  r.penalty.assign(n, 0.0);
  r.subtraction.assign(n, 0.0);
  return r;
}

void require_lookahead(const GameLog& log, const char* id) {
  if (log.lookahead.check_dual.size() != log.mirror().dimension() ||
      log.lookahead.tilde_dual.size() != log.mirror().dimension())
    throw ConfigError(std::string(id) + ": log has no lookahead record");
}

void require_path(const GameLog& log, const ComparatorPath& path, const char* id) {
  if (static_cast<int>(path.points.size()) != log.horizon())
    throw DimensionError(std::string(id) + ": comparator path has " +
                         std::to_string(path.points.size()) + " points, log has " +
                         std::to_string(log.horizon()) + " rounds");
  for (const Vec& z : path.points) {
    require_same_dim(z.size(), log.mirror().dimension(), id);
    if (!log.mirror().domain().contains(z, 1e-9))
      throw DomainError(std::string(id) + ": comparator point outside the feasible set");
  }
}

// Sum of phi*(xi ||x* - x^*||) / xi with xi = eta_t theta_t.
void fill_penalty(BoundReport& r, const GameLog& log, double rho) {
  const NormPair& norms = log.mirror().norms();
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    const double xi = rec.eta * rec.theta;
    r.penalty[i] = q_rho_star(xi * norms.dual(rec.gradient - rec.hint), rho) / xi;
  }
}

// Sum of Phi_xi(x*, x^*) / xi.
void fill_aux_penalty(BoundReport& r, const GameLog& log, double rho) {
  const NormPair& norms = log.mirror().norms();
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    const double xi = rec.eta * rec.theta;
    r.penalty[i] = phi_cap(rec.gradient, rec.hint, xi, rho, norms) / xi;
  }
}

// -B_psi(x_t, x~^psi_t) / xi, from the given (primary or auxiliary) log.
void fill_bregman_subtraction(BoundReport& r, const GameLog& log) {
  const MirrorMap& m = log.mirror();
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    r.subtraction[i] = -m.bregman(rec.play, rec.tilde_dual) / (rec.eta * rec.theta);
  }
}

// -||x_t - x~_t||^2 / (2 xi).
void fill_euclid_subtraction(BoundReport& r, const GameLog& log) {
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    r.subtraction[i] = -0.5 * (rec.play - rec.tilde_play).squaredNorm() / (rec.eta * rec.theta);
  }
}

void finish(BoundReport& r, const GameLog& log, const ComparatorPath& path) {
  const double total = sum(r.container) + sum(r.penalty) + sum(r.subtraction);
  r.total_bound = total;
  r.round_regret.assign(log.rounds.size(), 0.0);
  r.surrogate_regret = !log.has_loss_values();
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    const Vec& z = path.points[i];
    r.round_regret[i] = r.surrogate_regret ? rec.gradient.dot(rec.play - z)
                                           : *rec.loss.value(rec.play) - *rec.loss.value(z);
  }
  if (r.surrogate_regret)
    r.warnings.push_back("monotone feedback: regret measured as sum <x*_t, x_t - z_t>");
  r.played_regret = sum(r.round_regret);
  if (std::isinf(total) && total > 0) {
    r.margin = kInf;
    r.warnings.push_back("infinite container term: comparator outside the anchor's support");
  } else {
    r.margin = total - r.played_regret;
  }
}

bool engine_in(Engine e, std::initializer_list<Engine> allowed) {
  return std::find(allowed.begin(), allowed.end(), e) != allowed.end();
}

void check(bool ok, BoundId id, const std::string& what) {
  if (!ok) throw ConfigError(to_string(id) + ": " + what);
}

const Vec& static_point(const ComparatorPath& path, BoundId id) {
  check(!path.points.empty(), id, "empty comparator path");
  for (const Vec& z : path.points)
    check((z - path.points.front()).norm() == 0.0, id, "static bound needs a static comparator");
  return path.points.front();
}

ComparatorPath constant_path(const GameLog& log, const Vec& u) {
  return ComparatorPath::constant(u, log.horizon());
}

}  // namespace

std::string to_string(BoundId id) {
  for (const auto& n : kNames)
    if (n.id == id) return n.name;
  return "?";
}

BoundId bound_from_string(const std::string& s) {
  for (const auto& n : kNames)
    if (s == n.name) return n.id;
  throw ConfigError("unknown bound '" + s + "'");
}

const std::vector<BoundId>& all_bounds() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

bool is_static_bound(BoundId id) {
  switch (id) {
    case BoundId::SStaticEta:
    case BoundId::SStaticTheta:
    case BoundId::OnesEta:
    case BoundId::OnesTheta:
    case BoundId::OnesEtaAux:
    case BoundId::OnesThetaAux:
    case BoundId::OlpStaticEta:
    case BoundId::OlpStaticEtaAux:
    case BoundId::OlpStaticTheta:
    case BoundId::OlpStaticThetaAux:
    case BoundId::OgpStatic:
    case BoundId::OgpStaticAux:
      return true;
    default:
      return false;
  }
}

bool is_auxiliary_bound(BoundId id) {
  switch (id) {
    case BoundId::OnesEtaAux:
    case BoundId::OnesThetaAux:
    case BoundId::OlpDynamicAux:
    case BoundId::OlpStaticEtaAux:
    case BoundId::OlpStaticThetaAux:
    case BoundId::OgpDynamicAux:
    case BoundId::OgpStaticAux:
      return true;
    default:
      return false;
  }
}

double BoundReport::container_total() const { return sum(container); }
double BoundReport::penalty_total() const { return sum(penalty); }
double BoundReport::subtraction_total() const { return sum(subtraction); }

// ---------------------------------------------------------------------------

double played_regret(const GameLog& log, const ComparatorPath& path) {
  require_path(log, path, "played_regret");
  double total = 0.0;
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& r = log.rounds[i];
    auto fx = r.loss.value(r.play);
    auto fz = r.loss.value(path.points[i]);
    if (!fx || !fz)
      throw DomainError("played_regret: monotone feedback has no loss values; use the monotone module");
    total += *fx - *fz;
  }
  return total;
}

double surrogate_regret(const GameLog& log, const ComparatorPath& path) {
  require_path(log, path, "surrogate_regret");
  double total = 0.0;
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& r = log.rounds[i];
    total += r.gradient.dot(r.play - path.points[i]);
  }
  return total;
}

void require_compatible(BoundId id, const GameSetup& setup) {
  const Engine e = setup.engine;
  const MirrorKind mk = setup.mirror.kind();
  const ScheduleSpec& s = setup.schedule;
  const bool eta_regime = s.theta_constant_one() && s.eta_monotone_nonincreasing();
  const bool theta_regime = s.eta_constant_one() && s.theta_monotone_nondecreasing();
  if (is_static_bound(id))
    check(setup.comparator.kind != ComparatorKind::Drift, id, "static bound needs a static comparator");
  switch (id) {
    case BoundId::S1Dynamic:
      check(engine_in(e, {Engine::S, Engine::SI, Engine::ONES, Engine::OLP}), id,
            "needs an S or S-I family engine");
      break;
    case BoundId::SDynamic:
      check(engine_in(e, {Engine::S, Engine::ONES}), id, "needs engine S or ONES");
      break;
    case BoundId::SStaticEta:
      check(engine_in(e, {Engine::S, Engine::ONES}), id, "needs engine S or ONES");
      check(eta_regime, id, "needs theta == 1 and non-increasing eta");
      break;
    case BoundId::SStaticTheta:
      check(engine_in(e, {Engine::S, Engine::ONES}), id, "needs engine S or ONES");
      check(theta_regime, id, "needs eta == 1 and non-decreasing theta");
      break;
    case BoundId::S2Dynamic:
      check(engine_in(e, {Engine::SII, Engine::OGP}), id, "needs engine S-II or OGP");
      break;
    case BoundId::OnesEta:
    case BoundId::OnesEtaAux:
    case BoundId::OnesTheta:
    case BoundId::OnesThetaAux: {
      check(mk == MirrorKind::Entropy, id, "needs the entropy map");
      check(engine_in(e, {Engine::S, Engine::ONES}), id, "needs engine S or ONES");
      const bool eta = id == BoundId::OnesEta || id == BoundId::OnesEtaAux;
      check(eta ? eta_regime : theta_regime, id,
            eta ? "needs theta == 1 and non-increasing eta" : "needs eta == 1 and non-decreasing theta");
      break;
    }
    case BoundId::OlpDynamic:
    case BoundId::OlpDynamicAux:
    case BoundId::OlpStaticTheta:
    case BoundId::OlpStaticThetaAux:
      check(mk == MirrorKind::SquaredNorm, id, "needs the squared-norm map");
      check(engine_in(e, {Engine::SI, Engine::OLP}), id, "needs engine S-I or OLP");
      check(theta_regime, id, "needs eta == 1 and non-decreasing theta");
      break;
    case BoundId::OlpStaticEta:
    case BoundId::OlpStaticEtaAux:
      check(mk == MirrorKind::SquaredNorm, id, "needs the squared-norm map");
      check(engine_in(e, {Engine::SI, Engine::OLP}), id, "needs engine S-I or OLP");
      check(eta_regime, id, "needs theta == 1 and non-increasing eta");
      break;
    case BoundId::OgpDynamic:
    case BoundId::OgpDynamicAux:
    case BoundId::OgpStatic:
    case BoundId::OgpStaticAux:
      check(mk == MirrorKind::SquaredNorm, id, "needs the squared-norm map");
      check(engine_in(e, {Engine::SII, Engine::OGP}), id, "needs engine S-II or OGP");
      check(s.theta_monotone_nondecreasing(), id, "needs non-decreasing theta");
      break;
  }
}

std::vector<BoundId> compatible_bounds(const GameSetup& setup) {
  std::vector<BoundId> out;
  for (BoundId id : all_bounds()) {
    try {
      require_compatible(id, setup);
      out.push_back(id);
    } catch (const ConfigError&) {
    }
  }
  return out;
}

void require_compatible(BoundId id, const GameLog& log, const ComparatorPath& path) {
  check(!log.rounds.empty(), id, "empty log");
  require_path(log, path, to_string(id).c_str());
  if (is_static_bound(id)) static_point(path, id);
  GameSetup setup = log.setup;
  setup.comparator.kind = ComparatorKind::Static;
  require_compatible(id, setup);
}

bool is_compatible(BoundId id, const GameLog& log, const ComparatorPath& path) {
  try {
    require_compatible(id, log, path);
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

std::vector<BoundId> compatible_bounds(const GameLog& log, const ComparatorPath& path) {
  std::vector<BoundId> out;
  for (BoundId id : all_bounds())
    if (is_compatible(id, log, path)) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------

BoundReport bound_s1_dynamic(const GameLog& log, const ComparatorPath& path,
                             const EvalOptions& options) {
  BoundReport r = start("s1_dynamic", log);
  require_lookahead(log, "s1_dynamic");
  require_path(log, path, "s1_dynamic");
  const MirrorMap& m = log.mirror();
  const Vec& a = m.anchor_dual();
  const std::size_t n = log.rounds.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RoundRecord& rec = log.rounds[i];
    const bool last = i + 1 == n;
    const double eta_next = last ? log.lookahead.eta : log.rounds[i + 1].eta;
    const Vec& check_next = last ? log.lookahead.check_dual : log.rounds[i + 1].check_dual;
    const Vec& tilde_next = last ? log.lookahead.tilde_dual : log.rounds[i + 1].tilde_dual;
    const double w = 1.0 / (rec.eta * rec.theta);
    const double ratio = rec.eta / eta_next;
    const Vec& z = path.points[i];
    r.container[i] = w * (m.bregman(z, rec.check_dual) - m.bregman(z, a + ratio * (check_next - a)));
    const Vec& source = options.x_selection == XSelection::Tilde ? tilde_next : check_next;
    const Vec x_next = m.mirror_step(a + ratio * (source - a));
    const double bracket = m.bregman(x_next, rec.tilde_dual) - m.bregman(x_next, rec.check_dual);
    r.subtraction[i] = w * bracket - w * m.bregman(rec.play, rec.tilde_dual);
  }
  fill_penalty(r, log, rho_for(log, options));
  finish(r, log, path);
  return r;
}

BoundReport bound_s_dynamic(const GameLog& log, const ComparatorPath& path,
                            const EvalOptions& options) {
  BoundReport r = start("s_dynamic", log);
  require_lookahead(log, "s_dynamic");
  require_path(log, path, "s_dynamic");
  const MirrorMap& m = log.mirror();
  const Vec& a = m.anchor_dual();
  const std::size_t n = log.rounds.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RoundRecord& rec = log.rounds[i];
    const bool last = i + 1 == n;
    const double eta_next = last ? log.lookahead.eta : log.rounds[i + 1].eta;
    const Vec& tilde_next = last ? log.lookahead.tilde_dual : log.rounds[i + 1].tilde_dual;
    const double w = 1.0 / (rec.eta * rec.theta);
    const Vec& z = path.points[i];
    r.container[i] = w * (m.bregman(z, rec.tilde_dual) -
                          m.bregman(z, a + (rec.eta / eta_next) * (tilde_next - a)));
  }
  fill_penalty(r, log, rho_for(log, options));
  fill_bregman_subtraction(r, log);
  finish(r, log, path);
  return r;
}

BoundReport bound_s_static_eta(const GameLog& log, const Vec& u, const EvalOptions& options) {
  BoundReport r = start("s_static_eta", log);
  const MirrorMap& m = log.mirror();
  const double eta_end = log.setup.schedule.eta_at(log.horizon() + 1);
  r.container[0] = m.bregman(u, m.anchor_dual()) / eta_end;
  fill_penalty(r, log, rho_for(log, options));
  fill_bregman_subtraction(r, log);
  finish(r, log, constant_path(log, u));
  return r;
}

BoundReport bound_s_static_theta(const GameLog& log, const Vec& u, const EvalOptions& options) {
  BoundReport r = start("s_static_theta", log);
  const MirrorMap& m = log.mirror();
  r.container[0] = m.bregman(u, m.anchor_dual()) / log.setup.schedule.theta_at(1);
  fill_penalty(r, log, rho_for(log, options));
  fill_bregman_subtraction(r, log);
  finish(r, log, constant_path(log, u));
  return r;
}

BoundReport bound_s2_dynamic(const GameLog& log, const ComparatorPath& path,
                             const EvalOptions& options) {
  BoundReport r = start("s2_dynamic", log);
  require_lookahead(log, "s2_dynamic");
  require_path(log, path, "s2_dynamic");
  const MirrorMap& m = log.mirror();
  const std::size_t n = log.rounds.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RoundRecord& rec = log.rounds[i];
    const Vec& check_next = i + 1 == n ? log.lookahead.check_dual : log.rounds[i + 1].check_dual;
    const Vec& z = path.points[i];
    r.container[i] = (m.bregman(z, rec.tilde_dual) - m.bregman(z, check_next)) / rec.theta;
  }
  fill_penalty(r, log, rho_for(log, options));
  fill_bregman_subtraction(r, log);
  finish(r, log, path);
  return r;
}

BoundReport bound_ones_static(const GameLog& log, const Vec& u, OnesVariant variant,
                              const EvalOptions& options) {
  static constexpr const char* ids[] = {"ones_eta", "ones_theta", "ones_eta_aux", "ones_theta_aux"};
  BoundReport r = start(ids[static_cast<int>(variant)], log);
  const MirrorMap& m = log.mirror();
  if (m.kind() != MirrorKind::Entropy) throw ConfigError("ones bounds need the entropy map");
  require_same_dim(u.size(), m.dimension(), "bound_ones_static");
  const bool eta = variant == OnesVariant::Eta || variant == OnesVariant::EtaAux;
  const double scale =
      eta ? log.setup.schedule.eta_at(log.horizon() + 1) : log.setup.schedule.theta_at(1);
  double container = 0.0;
  try {
    container = kl(u, m.anchor()) / scale;
  } catch (const DomainError&) {
    container = kInf;
  }
  r.container[0] = container;
  const double rho = rho_for(log, options);
  if (variant == OnesVariant::EtaAux || variant == OnesVariant::ThetaAux) {
    fill_aux_penalty(r, log, rho);
    fill_bregman_subtraction(r, build_auxiliary_log(log));
  } else {
    fill_penalty(r, log, rho);
    fill_bregman_subtraction(r, log);
  }
  finish(r, log, constant_path(log, u));
  return r;
}

namespace {

void require_euclidean(const GameLog& log, const char* id) {
  if (log.mirror().kind() != MirrorKind::SquaredNorm)
    throw ConfigError(std::string(id) + ": needs the squared-norm map");
}

void euclid_tail(BoundReport& r, const GameLog& log, bool auxiliary, double rho) {
  if (auxiliary) {
    fill_aux_penalty(r, log, rho);
    fill_euclid_subtraction(r, build_auxiliary_log(log));
  } else {
    fill_penalty(r, log, rho);
    fill_euclid_subtraction(r, log);
  }
}

}  // namespace

BoundReport bound_olp_dynamic(const GameLog& log, const ComparatorPath& path, bool auxiliary,
                              const EvalOptions& options) {
  const char* id = auxiliary ? "olp_dynamic_aux" : "olp_dynamic";
  BoundReport r = start(id, log);
  require_euclidean(log, id);
  require_path(log, path, id);
  const Vec& a = log.mirror().anchor();
  const double theta1 = log.rounds.front().theta;
  r.container[0] = 0.5 * (path.points[0] - a).squaredNorm() / theta1;
  for (std::size_t i = 1; i < log.rounds.size(); ++i) {
    const RoundRecord& rec = log.rounds[i];
    const Vec& z = path.points[i];
    r.container[i] = (z - a + rec.accumulated_dual).norm() * (z - path.points[i - 1]).norm() /
                     rec.theta;
  }
  euclid_tail(r, log, auxiliary, rho_for(log, options));
  finish(r, log, path);
  return r;
}

BoundReport bound_olp_static(const GameLog& log, const Vec& u, ScheduleVariant variant,
                             bool auxiliary, const EvalOptions& options) {
  const char* id = variant == ScheduleVariant::Eta
                       ? (auxiliary ? "olp_static_eta_aux" : "olp_static_eta")
                       : (auxiliary ? "olp_static_theta_aux" : "olp_static_theta");
  BoundReport r = start(id, log);
  require_euclidean(log, id);
  require_same_dim(u.size(), log.mirror().dimension(), id);
  const double scale = variant == ScheduleVariant::Eta
                           ? log.setup.schedule.eta_at(log.horizon() + 1)
                           : log.setup.schedule.theta_at(1);
  r.container[0] = 0.5 * (u - log.mirror().anchor()).squaredNorm() / scale;
  euclid_tail(r, log, auxiliary, rho_for(log, options));
  finish(r, log, constant_path(log, u));
  return r;
}

BoundReport bound_ogp_dynamic(const GameLog& log, const ComparatorPath& path, bool auxiliary,
                              const EvalOptions& options) {
  const char* id = auxiliary ? "ogp_dynamic_aux" : "ogp_dynamic";
  BoundReport r = start(id, log);
  require_euclidean(log, id);
  require_path(log, path, id);
  const double rho = rho_for(log, options);
  const double diameter = log.mirror().modulus().rho();
  const Vec& a = log.mirror().anchor();
  r.container[0] = 0.5 * (path.points[0] - a).squaredNorm() / log.rounds.front().theta;
  for (std::size_t i = 1; i < log.rounds.size(); ++i) {
    const double step = (path.points[i] - path.points[i - 1]).norm();
    const double drift = options.ogp_drift == DriftForm::Linear ? step : step * step;
    r.container[i] = diameter * drift / log.rounds[i].theta;
  }
  euclid_tail(r, log, auxiliary, rho);
  finish(r, log, path);
  return r;
}

BoundReport bound_ogp_static(const GameLog& log, const Vec& u, bool auxiliary,
                             const EvalOptions& options) {
  const char* id = auxiliary ? "ogp_static_aux" : "ogp_static";
  BoundReport r = start(id, log);
  require_euclidean(log, id);
  require_same_dim(u.size(), log.mirror().dimension(), id);
  r.container[0] = 0.5 * (u - log.mirror().anchor()).squaredNorm() / log.rounds.front().theta;
  euclid_tail(r, log, auxiliary, rho_for(log, options));
  finish(r, log, constant_path(log, u));
  return r;
}

BoundReport evaluate_bound(BoundId id, const GameLog& log, const ComparatorPath& path,
                           const EvalOptions& options) {
  require_compatible(id, log, path);
  const Vec& u = path.points.front();
  switch (id) {
    case BoundId::S1Dynamic: return bound_s1_dynamic(log, path, options);
    case BoundId::SDynamic: return bound_s_dynamic(log, path, options);
    case BoundId::SStaticEta: return bound_s_static_eta(log, u, options);
    case BoundId::SStaticTheta: return bound_s_static_theta(log, u, options);
    case BoundId::S2Dynamic: return bound_s2_dynamic(log, path, options);
    case BoundId::OnesEta: return bound_ones_static(log, u, OnesVariant::Eta, options);
    case BoundId::OnesTheta: return bound_ones_static(log, u, OnesVariant::Theta, options);
    case BoundId::OnesEtaAux: return bound_ones_static(log, u, OnesVariant::EtaAux, options);
    case BoundId::OnesThetaAux: return bound_ones_static(log, u, OnesVariant::ThetaAux, options);
    case BoundId::OlpDynamic: return bound_olp_dynamic(log, path, false, options);
    case BoundId::OlpDynamicAux: return bound_olp_dynamic(log, path, true, options);
    case BoundId::OlpStaticEta: return bound_olp_static(log, u, ScheduleVariant::Eta, false, options);
    case BoundId::OlpStaticEtaAux: return bound_olp_static(log, u, ScheduleVariant::Eta, true, options);
    case BoundId::OlpStaticTheta: return bound_olp_static(log, u, ScheduleVariant::Theta, false, options);
    case BoundId::OlpStaticThetaAux: return bound_olp_static(log, u, ScheduleVariant::Theta, true, options);
    case BoundId::OgpDynamic: return bound_ogp_dynamic(log, path, false, options);
    case BoundId::OgpDynamicAux: return bound_ogp_dynamic(log, path, true, options);
    case BoundId::OgpStatic: return bound_ogp_static(log, u, false, options);
    case BoundId::OgpStaticAux: return bound_ogp_static(log, u, true, options);
  }
  throw ConfigError("unknown bound");
}

Verdict check_violation(const BoundReport& report, double tol) {
  Verdict v;
  v.margin = report.margin;
  v.pass = !std::isnan(report.margin) && report.margin >= -tol;
  const std::size_t n = report.container.size();
  double bound = 0.0;
  double regret = 0.0;
  v.worst_cumulative_margin = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    bound += report.container[i] + report.penalty[i] + report.subtraction[i];
    if (i < report.round_regret.size()) regret += report.round_regret[i];
    const double m = bound - regret;
    if (m < v.worst_cumulative_margin) {
      v.worst_cumulative_margin = m;
      v.worst_round = static_cast<int>(i) + 1;
    }
  }
  if (n == 0) v.worst_cumulative_margin = report.margin;
  return v;
}

}  // namespace oco
