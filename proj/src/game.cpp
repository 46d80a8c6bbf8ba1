#include "oco/game.hpp"

#include <algorithm>
#include <cmath>

namespace oco {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kSaltBias = 1;
constexpr std::uint64_t kSaltLoss = 2;
constexpr std::uint64_t kSaltHint = 3;
constexpr std::uint64_t kSaltMatrix = 4;

Vec gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = nd(rng);
  return v;
}

Vec uniform_cube(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = ud(rng);
  return v;
}

// Uniform in the Euclidean unit ball.
Vec unit_ball_l2(std::mt19937_64& rng, int n) {
  Vec g = gaussian(rng, n);
  double norm = g.norm();
  while (norm == 0.0) {
    g = gaussian(rng, n);
    norm = g.norm();
  }
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  return g / norm * std::pow(ud(rng), 1.0 / n);
}

double spectral_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()[0];
}

Mat block_skew(int n) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    a(i, i + 1) = 1.0;
    a(i + 1, i) = -1.0;
  }
  return a;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t salt) {
  return splitmix(splitmix(splitmix(seed) ^ round) ^ (salt * 0xd1b54a32d192ed03ULL));
}

// ---------------------------------------------------------------------------

Vec LossFunction::gradient(const Vec& x) const {
  require_same_dim(x.size(), b.size(), "LossFunction::gradient");
  if (kind == LossKind::Linear) return b;
  return a * x + b;
}

std::optional<double> LossFunction::value(const Vec& x) const {
  require_same_dim(x.size(), b.size(), "LossFunction::value");
  switch (kind) {
    case LossKind::Linear:
      return b.dot(x);
    case LossKind::Quadratic:
      return 0.5 * x.dot(a * x) + b.dot(x);
    case LossKind::Monotone:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(LossKind k) {
  switch (k) {
    case LossKind::Linear: return "linear";
    case LossKind::Quadratic: return "quadratic";
    case LossKind::Monotone: return "monotone";
  }
  return "?";
}

std::string to_string(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::Linear: return "linear";
    case AdversaryKind::Quadratic: return "quadratic";
    case AdversaryKind::Monotone: return "monotone";
  }
  return "?";
}

std::string to_string(HintKind k) {
  switch (k) {
    case HintKind::Zero: return "zero";
    case HintKind::LastGradient: return "last";
    case HintKind::Perfect: return "perfect";
    case HintKind::NoisyPerfect: return "noisy";
  }
  return "?";
}

std::string to_string(ComparatorKind k) {
  switch (k) {
    case ComparatorKind::Static: return "static";
    case ComparatorKind::BestStatic: return "best";
    case ComparatorKind::Drift: return "drift";
  }
  return "?";
}

std::string to_string(MonotoneShape k) {
  switch (k) {
    case MonotoneShape::Skew: return "skew";
    case MonotoneShape::PsdSkew: return "psd-skew";
    case MonotoneShape::Explicit: return "matrix";
  }
  return "?";
}

bool GameLog::has_loss_values() const {
  return std::all_of(rounds.begin(), rounds.end(),
                     [](const RoundRecord& r) { return r.loss.has_value(); });
}

ComparatorPath ComparatorPath::constant(const Vec& u, int horizon) {
  ComparatorPath p;
  p.points.assign(static_cast<std::size_t>(std::max(horizon, 0)), u);
  p.is_static = true;
  return p;
}

ComparatorPath ComparatorPath::from_points(std::vector<Vec> points, const NormPair& norms) {
  ComparatorPath p;
  p.points = std::move(points);
  for (std::size_t i = 1; i < p.points.size(); ++i)
    p.path_length += norms.primal(p.points[i] - p.points[i - 1]);
  p.is_static = p.path_length == 0.0;
  return p;
}

// ---------------------------------------------------------------------------

Adversary::Adversary(AdversarySpec spec, const MirrorMap& mirror, std::uint64_t seed)
    : spec_(std::move(spec)), domain_(mirror.domain()), norms_(mirror.norms()), seed_(seed) {
  const int n = domain_.dimension();
  const double radius = domain_.max_euclidean_norm();
  switch (spec_.kind) {
    case AdversaryKind::Linear: {
      if (!(spec_.bound > 0.0)) throw ConfigError("adversary.G must be positive");
      std::mt19937_64 rng(mix_seed(seed_, 0, kSaltBias));
      bias_ = unit_dual_ball(rng);
      declared_bound_ = spec_.bound;
      break;
    }
    case AdversaryKind::Quadratic:
      if (!(spec_.q_max >= 0.0) || !(spec_.b_max >= 0.0))
        throw ConfigError("adversary.q_max and adversary.b_max must be non-negative");
      declared_bound_ = spec_.q_max * radius + spec_.b_max;
      break;
    case AdversaryKind::Monotone: {
      if (!(spec_.b_max >= 0.0)) throw ConfigError("adversary.b_max must be non-negative");
      switch (spec_.shape) {
        case MonotoneShape::Skew:
          matrix_ = spec_.scale * block_skew(n);
          break;
        case MonotoneShape::PsdSkew: {
          std::mt19937_64 rng(mix_seed(seed_, 0, kSaltMatrix));
          Mat p(n, n), s(n, n);
          for (int i = 0; i < n; ++i) p.row(i) = gaussian(rng, n).transpose();
          for (int i = 0; i < n; ++i) s.row(i) = gaussian(rng, n).transpose();
          Mat psd = p * p.transpose();
          Mat skew = s - s.transpose();
          double scale_psd = psd.norm() > 0 ? 1.0 / psd.norm() : 0.0;
          double scale_skew = skew.norm() > 0 ? 1.0 / skew.norm() : 0.0;
          matrix_ = spec_.scale * (scale_psd * psd + scale_skew * skew);
          break;
        }
        case MonotoneShape::Explicit: {
          if (spec_.matrix.rows() != n || spec_.matrix.cols() != n)
            throw DimensionError("adversary.operator matrix must be " + std::to_string(n) + "x" +
                                 std::to_string(n));
          Mat sym = 0.5 * (spec_.matrix + spec_.matrix.transpose());
          Eigen::SelfAdjointEigenSolver<Mat> es(sym);
          if (es.eigenvalues().minCoeff() < -1e-12)
            throw ConfigError("adversary.operator matrix is not monotone");
          matrix_ = spec_.matrix;
          break;
        }
      }
      declared_bound_ = spectral_norm(matrix_) * radius + spec_.b_max;
      break;
    }
  }
}

Vec Adversary::unit_dual_ball(std::mt19937_64& rng) const {
  const int n = domain_.dimension();
  if (norms_.kind == NormKind::L1Linf) return uniform_cube(rng, n);
  return unit_ball_l2(rng, n);
}

bool Adversary::oblivious_linear() const {
  return spec_.kind == AdversaryKind::Linear && !spec_.adaptive;
}

LossFunction Adversary::draw(int t, const Vec& play) const {
  const int n = domain_.dimension();
  std::mt19937_64 rng(mix_seed(seed_, static_cast<std::uint64_t>(t), kSaltLoss));
  LossFunction f;
  switch (spec_.kind) {
    case AdversaryKind::Linear: {
      f.kind = LossKind::Linear;
      Vec noise = unit_dual_ball(rng);
      if (!spec_.adaptive) {
        f.b = spec_.bound * (0.5 * bias_ + 0.5 * noise);
        break;
      }
      require_same_dim(play.size(), n, "Adversary::draw");
      Vec push = Vec::Zero(n);
      if (norms_.kind == NormKind::L1Linf) {
        Eigen::Index top = 0;
        play.maxCoeff(&top);
        push[top] = 1.0;
      } else {
        Vec off = play - domain_.center();
        double norm = off.norm();
        if (norm > 0.0) push = off / norm;
      }
      f.b = spec_.bound * (0.5 * push + 0.5 * noise);
      break;
    }
    case AdversaryKind::Quadratic: {
      f.kind = LossKind::Quadratic;
      Mat b(n, n);
      for (int i = 0; i < n; ++i) b.row(i) = gaussian(rng, n).transpose();
      Mat q = b * b.transpose();
      double fro = b.squaredNorm();
      f.a = fro > 0.0 ? Mat(spec_.q_max / fro * q) : Mat(Mat::Zero(n, n));
      f.b = spec_.b_max * unit_ball_l2(rng, n);
      break;
    }
    case AdversaryKind::Monotone:
      f.kind = LossKind::Monotone;
      f.a = matrix_;
      f.b = spec_.b_max * unit_ball_l2(rng, n);
      break;
  }
  return f;
}

// ---------------------------------------------------------------------------

Vec HintOracle::hint(int t, int dimension, const std::optional<Vec>& last_gradient,
                     const std::optional<Vec>& upcoming) const {
  switch (spec_.kind) {
    case HintKind::Zero:
      return Vec::Zero(dimension);
    case HintKind::LastGradient:
      return last_gradient ? *last_gradient : Vec::Zero(dimension);
    case HintKind::Perfect:
    case HintKind::NoisyPerfect: {
      if (!upcoming) throw ConfigError("clairvoyant hints need an oblivious linear adversary");
      if (spec_.kind == HintKind::Perfect) return *upcoming;
      if (!(spec_.sigma >= 0.0)) throw ConfigError("hint.sigma must be non-negative");
      std::mt19937_64 rng(mix_seed(seed_, static_cast<std::uint64_t>(t), kSaltHint));
      return *upcoming + spec_.sigma * gaussian(rng, dimension);
    }
  }
  return Vec::Zero(dimension);
}

// ---------------------------------------------------------------------------

ComparatorPath drift_path(const FeasibleSet& set, const NormPair& norms, int horizon,
                          double budget, int waypoints, std::uint64_t seed) {
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  if (!(budget >= 0.0)) throw ConfigError("comparator.budget must be non-negative");
  if (waypoints < 1) throw ConfigError("comparator.waypoints must be at least 1");
  std::vector<Vec> nodes;
  nodes.reserve(static_cast<std::size_t>(waypoints) + 1);
  for (int k = 0; k <= waypoints; ++k) nodes.push_back(set.sample(mix_seed(seed, k, 17)));
  std::vector<double> seg(nodes.size() - 1);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    seg[k] = norms.primal(nodes[k + 1] - nodes[k]);
    total += seg[k];
  }
  const double travel = std::min(budget, total);
  std::vector<Vec> points;
  points.reserve(static_cast<std::size_t>(horizon));
  for (int t = 1; t <= horizon; ++t) {
    double s = horizon == 1 ? 0.0 : travel * (t - 1) / (horizon - 1);
    std::size_t k = 0;
    while (k + 1 < seg.size() && s > seg[k]) {
      s -= seg[k];
      ++k;
    }
    double frac = seg[k] > 0.0 ? std::min(s / seg[k], 1.0) : 0.0;
    // Convex combination of two points of C stays in C.
    points.push_back(nodes[k] + frac * (nodes[k + 1] - nodes[k]));
  }
  return ComparatorPath::from_points(std::move(points), norms);
}

namespace {

Vec linear_minimizer(const Vec& l, const FeasibleSet& set) {
  const int n = set.dimension();
  switch (set.kind()) {
    case SetKind::Simplex: {
      Eigen::Index best = 0;
      for (Eigen::Index i = 1; i < n; ++i)
        if (l[i] < l[best]) best = i;
      Vec e = Vec::Zero(n);
      e[best] = 1.0;
      return e;
    }
    case SetKind::Ball: {
      double norm = l.norm();
      if (norm == 0.0) return set.ball_center();
      return set.ball_center() - set.ball_radius() / norm * l;
    }
    case SetKind::Box: {
      Vec x(n);
      for (int i = 0; i < n; ++i) {
        if (l[i] > 0.0) x[i] = set.box_lower()[i];
        else if (l[i] < 0.0) x[i] = set.box_upper()[i];
        else x[i] = 0.5 * (set.box_lower()[i] + set.box_upper()[i]);
      }
      return x;
    }
  }
  return set.center();
}

constexpr int kBestStaticIterations = 500;

}  // namespace

Vec best_static_comparator(const std::vector<LossFunction>& losses, const FeasibleSet& set) {
  const int n = set.dimension();
  Mat q = Mat::Zero(n, n);
  Vec l = Vec::Zero(n);
  bool curved = false;
  for (const auto& f : losses) {
    require_same_dim(f.b.size(), n, "best_static_comparator");
    if (f.kind == LossKind::Monotone)
      throw DomainError("best_static_comparator: monotone feedback has no loss to minimize");
    l += f.b;
    if (f.kind == LossKind::Quadratic) {
      q += f.a;
      curved = true;
    }
  }
  if (!curved) return linear_minimizer(l, set);
  Eigen::SelfAdjointEigenSolver<Mat> es(q, Eigen::EigenvaluesOnly);
  const double lmax = es.eigenvalues().maxCoeff();
  if (!(lmax > 0.0)) return linear_minimizer(l, set);
  const double step = 1.0 / lmax;
  Vec x = set.center();
  Vec prev = x;
  double tk = 1.0;
  for (int it = 0; it < kBestStaticIterations; ++it) {
    double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
    Vec y = x + ((tk - 1.0) / tn) * (x - prev);
    prev = x;
    x = set.project(y - step * (q * y + l));
    tk = tn;
  }
  return x;
}

ComparatorPath make_comparator(const ComparatorSpec& spec, const MirrorMap& mirror, int horizon,
                               const std::vector<LossFunction>& losses, std::uint64_t seed) {
  switch (spec.kind) {
    case ComparatorKind::Static: {
      Vec u = spec.point ? *spec.point : mirror.anchor();
      require_same_dim(u.size(), mirror.dimension(), "comparator.u");
      if (!mirror.domain().contains(u)) throw ConfigError("comparator.u is outside the feasible set");
      return ComparatorPath::constant(u, horizon);
    }
    case ComparatorKind::BestStatic:
      return ComparatorPath::constant(best_static_comparator(losses, mirror.domain()), horizon);
    case ComparatorKind::Drift:
      return drift_path(mirror.domain(), mirror.norms(), horizon, spec.budget, spec.waypoints,
                        mix_seed(seed, 0, 99));
  }
  return ComparatorPath::constant(mirror.anchor(), horizon);
}

// ---------------------------------------------------------------------------

GameLog play_game(const GameSetup& setup) {
  if (setup.horizon < 1) throw ConfigError("T must be at least 1");
  const MirrorMap& mirror = setup.mirror;
  const int n = mirror.dimension();
  Adversary adversary(setup.adversary, mirror, setup.seed);
  HintOracle oracle(setup.hint, setup.seed);
  if (setup.hint.clairvoyant() && !adversary.oblivious_linear())
    throw ConfigError("hint.kind=" + to_string(setup.hint.kind) +
                      " needs a non-adaptive linear adversary");
  if (setup.comparator.kind == ComparatorKind::BestStatic &&
      setup.adversary.kind == AdversaryKind::Monotone)
    throw ConfigError("comparator.kind=best needs loss functions; use static or drift");

  StrategyState state(setup.engine, mirror, setup.schedule);
  GameLog log;
  log.setup = setup;
  log.clairvoyant_hints = setup.hint.clairvoyant();
  log.rounds.reserve(static_cast<std::size_t>(setup.horizon));

  std::optional<Vec> last;
  for (int t = 1; t <= setup.horizon; ++t) {
    std::optional<LossFunction> early;
    std::optional<Vec> upcoming;
    if (log.clairvoyant_hints) {
      early = adversary.draw(t, Vec::Zero(n));
      upcoming = early->b;
    }
    Vec hint = oracle.hint(t, n, last, upcoming);
    StepResult step = state.step(hint, last);
    LossFunction f = early ? *early : adversary.draw(t, step.play);

    RoundRecord r;
    r.t = t;
    r.play = step.play;
    r.gradient = f.gradient(step.play);
    r.hint = std::move(hint);
    r.tilde_play = step.tilde_play;
    r.tilde_dual = step.tilde_dual;
    r.check_dual = step.check_dual;
    r.accumulated_dual = step.accumulated_dual;
    r.eta = step.eta;
    r.theta = step.theta;
    r.loss_value = f.value(step.play);
    r.loss = std::move(f);
    last = r.gradient;
    log.rounds.push_back(std::move(r));
  }
  log.lookahead = state.lookahead(*last);

  std::vector<LossFunction> losses;
  losses.reserve(log.rounds.size());
  for (const auto& r : log.rounds) losses.push_back(r.loss);
  log.comparator = make_comparator(setup.comparator, mirror, setup.horizon, losses, setup.seed);
  return log;
}

}  // namespace oco

namespace oco {

GameLog build_auxiliary_log(const GameLog& log) {
  const int horizon = log.horizon();
  if (horizon < 1) throw ConfigError("build_auxiliary_log: empty log");
  const MirrorMap& mirror = log.mirror();
  const int n = mirror.dimension();
  for (int i = 0; i < horizon; ++i) {
    const RoundRecord& r = log.rounds[static_cast<std::size_t>(i)];
    if (r.t != i + 1 || r.gradient.size() != n || r.hint.size() != n)
      throw ConfigError("build_auxiliary_log: incomplete log at round " + std::to_string(i + 1));
  }
  StrategyState state(log.setup.engine, mirror, log.setup.schedule);
  GameLog aux;
  aux.setup = log.setup;
  aux.comparator = log.comparator;
  aux.clairvoyant_hints = log.clairvoyant_hints;
  aux.auxiliary = true;
  aux.rounds.reserve(log.rounds.size());
  std::optional<Vec> last;
  for (const RoundRecord& r : log.rounds) {
    Vec hint = hint_interpolate(r.gradient, r.hint, mirror.norms()).corrected_hint;
    StepResult step = state.step(hint, last);
    RoundRecord a;
    a.t = r.t;
    a.play = step.play;
    a.gradient = r.gradient;
    a.hint = std::move(hint);
    a.tilde_play = step.tilde_play;
    a.tilde_dual = step.tilde_dual;
    a.check_dual = step.check_dual;
    a.accumulated_dual = step.accumulated_dual;
    a.eta = step.eta;
    a.theta = step.theta;
    a.loss = r.loss;
    a.loss_value = r.loss.value(step.play);
    last = r.gradient;
    aux.rounds.push_back(std::move(a));
  }
  aux.lookahead = state.lookahead(*last);
  return aux;
}

}  // namespace oco
