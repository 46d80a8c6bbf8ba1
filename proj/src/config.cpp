#include "oco/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "oco/game.hpp"

namespace oco {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "mirror.kind", "mirror.anchor", "set.kind", "set.dim", "set.center", "set.radius",
      "set.lower", "set.upper", "strategy", "schedule.eta.kind", "schedule.eta.c",
      "schedule.eta.p", "schedule.theta.kind", "schedule.theta.c", "schedule.theta.p",
      "adversary.kind", "adversary.G", "adversary.adaptive", "adversary.q_max",
      "adversary.b_max", "adversary.operator", "adversary.scale", "adversary.matrix",
      "hint.kind", "hint.sigma", "comparator.kind", "comparator.u", "comparator.budget",
      "comparator.waypoints", "T", "seeds", "seed", "bounds", "tolerance", "eval.rho",
      "eval.x_selection", "eval.ogp_drift", "monotone.operator", "monotone.dim",
      "monotone.matrix", "monotone.vector", "monotone.scale", "monotone.k", "monotone.n_max",
      "monotone.budget", "monotone.restarts", "monotone.instances", "monotone.loops",
      "monotone.set", "monotone.lower", "monotone.upper", "monotone.center", "monotone.radius"};
  return keys;
}

class Reader {
 public:
  explicit Reader(const KeyValues& kv) : kv_(kv) {}

  std::optional<std::string> get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    return it->second;
  }
  std::string str(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
  }
  double real(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? parse_real(key, *v) : fallback;
  }
  int integer(const std::string& key, int fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    const double d = parse_real(key, *v);
    if (d != std::floor(d) || std::abs(d) > 1e9)
      throw ConfigError(key + ": expected an integer, got '" + *v + "'");
    return static_cast<int>(d);
  }
  bool boolean(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    const std::string s = lower(*v);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError(key + ": expected a boolean, got '" + *v + "'");
  }
  // A vector of length n; a single number is broadcast.
  std::optional<Vec> vec(const std::string& key, int n) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    Vec out = parse_vector(key, *v);
    if (out.size() == 1 && n > 1) return Vec::Constant(n, out[0]);
    if (out.size() != n)
      throw ConfigError(key + ": expected " + std::to_string(n) + " entries, got " +
                           std::to_string(out.size()));
    return out;
  }

 private:
  const KeyValues& kv_;
};

Rate read_rate(const Reader& r, const std::string& prefix, double auto_c) {
  Rate rate;
  const std::string kind = lower(r.str(prefix + ".kind", "constant"));
  if (kind == "constant") rate.p = 0.0;
  else if (kind == "inv_sqrt") rate.p = -0.5;
  else if (kind == "sqrt") rate.p = 0.5;
  else if (kind == "power") rate.p = 0.0;
  else throw ConfigError(prefix + ".kind: unknown rate '" + kind + "'");
  rate.p = r.real(prefix + ".p", rate.p);
  const std::string c = lower(r.str(prefix + ".c", "1"));
  rate.c = c == "auto" ? auto_c : parse_real(prefix + ".c", c);
  if (!(rate.c > 0.0) || !std::isfinite(rate.c)) throw ConfigError(prefix + ".c must be positive");
  if (!std::isfinite(rate.p)) throw ConfigError(prefix + ".p must be finite");
  return rate;
}

FeasibleSet read_set(const Reader& r, const std::string& kind_key, const std::string& prefix,
                     const std::string& default_kind, int dim) {
  const std::string kind = lower(r.str(kind_key, default_kind));
  if (dim < 1) throw ConfigError(prefix + "dim must be positive");
  if (kind == "simplex") return FeasibleSet::simplex(dim);
  if (kind == "ball") {
    Vec center = r.vec(prefix + "center", dim).value_or(Vec::Zero(dim));
    return FeasibleSet::ball(center, r.real(prefix + "radius", 1.0));
  }
  if (kind == "box") {
    Vec lo = r.vec(prefix + "lower", dim).value_or(Vec::Zero(dim));
    Vec hi = r.vec(prefix + "upper", dim).value_or(Vec::Ones(dim));
    return FeasibleSet::box(lo, hi);
  }
  throw ConfigError(kind_key + ": unknown set kind '" + kind + "'");
}

std::vector<std::uint64_t> parse_seeds(const std::string& value) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split(value, ",")) {
    auto dots = item.find("..");
    auto to_u64 = [&](const std::string& s) {
      std::uint64_t v = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("seeds: bad seed '" + s + "'");
      return v;
    };
    if (dots == std::string::npos) {
      out.push_back(to_u64(item));
    } else {
      const std::uint64_t a = to_u64(trim(item.substr(0, dots)));
      const std::uint64_t b = to_u64(trim(item.substr(dots + 2)));
      if (b < a || b - a > 1000000) throw ConfigError("seeds: bad range '" + item + "'");
      for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
    }
  }
  return out;
}

}  // namespace

double parse_real(const std::string& key, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "inf" || v == "+inf" || v == "infinity") return kInf;
  if (v == "-inf") return -kInf;
  double out = 0.0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  return out;
}

Vec parse_vector(const std::string& key, const std::string& value) {
  std::vector<std::string> items = split(value, ",;");
  Vec out(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = parse_real(key, items[i]);
  return out;
}

Mat parse_matrix(const std::string& key, const std::string& value) {
  std::vector<std::string> rows = split(value, ";");
  if (rows.empty()) return Mat();
  std::vector<Vec> parsed;
  for (const auto& row : rows) parsed.push_back(parse_vector(key, row));
  const auto cols = parsed.front().size();
  Mat out(static_cast<Eigen::Index>(parsed.size()), cols);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].size() != cols) throw ConfigError(key + ": ragged matrix");
    out.row(static_cast<Eigen::Index>(i)) = parsed[i].transpose();
  }
  return out;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_vector(const Vec& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_real(v[i]);
  }
  return out;
}

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ConfigError(source + ":" + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_key_values(in, path);
}

const std::vector<std::string>& numeric_keys() {
  static const std::vector<std::string> keys = {
      "T", "set.dim", "set.radius", "schedule.eta.c", "schedule.eta.p", "schedule.theta.c",
      "schedule.theta.p", "adversary.G", "adversary.q_max", "adversary.b_max", "adversary.scale",
      "hint.sigma", "comparator.budget", "comparator.waypoints", "tolerance", "eval.rho"};
  return keys;
}

MonotoneOperator make_operator(const MonotoneConfig& cfg, std::uint64_t seed) {
  const int n = cfg.dimension;
  const std::string& op = cfg.op;
  if (op == "skew") {
    if (n == 2 && cfg.scale == 1.0) return MonotoneOperator::skew_demo();
    Mat a = Mat::Zero(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
      a(i, i + 1) = cfg.scale;
      a(i + 1, i) = -cfg.scale;
    }
    return MonotoneOperator::linear(a);
  }
  if (op == "gradient-quadratic") {
    Mat q = cfg.matrix.size() ? cfg.matrix : Mat(Mat::Identity(n, n));
    Vec b = cfg.vector.size() ? cfg.vector : Vec(Vec::Zero(q.rows()));
    return MonotoneOperator::gradient_quadratic(q, b);
  }
  if (op == "linear") {
    if (cfg.matrix.size() == 0) throw ConfigError("monotone.operator=linear needs monotone.matrix");
    Vec b = cfg.vector.size() ? cfg.vector : Vec(Vec::Zero(cfg.matrix.rows()));
    return MonotoneOperator::affine(cfg.matrix, b);
  }
  if (op == "psd-skew") {
    AdversarySpec spec;
    spec.kind = AdversaryKind::Monotone;
    spec.shape = MonotoneShape::PsdSkew;
    spec.scale = cfg.scale;
    spec.b_max = 0.0;
    Adversary adv(spec, MirrorMap::squared_norm(FeasibleSet::box(Vec::Zero(n), Vec::Ones(n))), seed);
    return MonotoneOperator::linear(adv.monotone_matrix());
  }
  if (op == "cubic-skew") return MonotoneOperator::cubic_skew(n, cfg.scale);
  throw ConfigError("monotone.operator: unknown operator '" + op + "'");
}

namespace {

ExperimentConfig build_config_unchecked(const KeyValues& kv) {
  for (const auto& [key, value] : kv)
    if (!known_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");
  Reader r(kv);
  ExperimentConfig cfg;
  cfg.raw = kv;

  // Feasible set and mirror map.
  const std::string mirror_kind = lower(r.str("mirror.kind", "entropy"));
  const int dim = r.integer("set.dim", 3);
  if (mirror_kind == "entropy") {
    const std::string set_kind = lower(r.str("set.kind", "simplex"));
    if (set_kind != "simplex") throw ConfigError("mirror.kind=entropy needs set.kind=simplex");
    if (dim < 1) throw ConfigError("set.dim must be positive");
    cfg.setup.mirror = MirrorMap::entropy(dim, r.vec("mirror.anchor", dim));
  } else if (mirror_kind == "sqnorm" || mirror_kind == "squared_norm") {
    FeasibleSet set = read_set(r, "set.kind", "set.", "ball", dim);
    auto anchor = r.vec("mirror.anchor", dim);
    if (anchor && !set.contains(*anchor)) throw ConfigError("mirror.anchor is outside the feasible set");
    cfg.setup.mirror = MirrorMap::squared_norm(set, anchor);
  } else {
    throw ConfigError("mirror.kind: unknown map '" + mirror_kind + "'");
  }
  const MirrorMap& mirror = cfg.setup.mirror;

  cfg.setup.engine = engine_from_string(r.str("strategy", mirror_kind == "entropy" ? "ONES" : "OLP"));
  cfg.setup.horizon = r.integer("T", 100);
  if (cfg.setup.horizon < 1) throw ConfigError("T must be at least 1");

  // Seeds.
  if (auto s = r.get("seed")) cfg.seeds = parse_seeds(*s);
  else cfg.seeds = parse_seeds(r.str("seeds", "1"));
  if (cfg.seeds.empty()) throw ConfigError("seeds: empty list");

  // Adversary.
  AdversarySpec& adv = cfg.setup.adversary;
  const std::string adv_kind = lower(r.str("adversary.kind", "linear"));
  if (adv_kind == "linear") adv.kind = AdversaryKind::Linear;
  else if (adv_kind == "quadratic") adv.kind = AdversaryKind::Quadratic;
  else if (adv_kind == "monotone") adv.kind = AdversaryKind::Monotone;
  else throw ConfigError("adversary.kind: unknown adversary '" + adv_kind + "'");
  adv.bound = r.real("adversary.G", 1.0);
  adv.adaptive = r.boolean("adversary.adaptive", false);
  adv.q_max = r.real("adversary.q_max", 1.0);
  adv.b_max = r.real("adversary.b_max", 1.0);
  adv.scale = r.real("adversary.scale", 1.0);
  const std::string shape = lower(r.str("adversary.operator", "skew"));
  if (shape == "skew") adv.shape = MonotoneShape::Skew;
  else if (shape == "psd-skew") adv.shape = MonotoneShape::PsdSkew;
  else if (shape == "matrix") adv.shape = MonotoneShape::Explicit;
  else throw ConfigError("adversary.operator: unknown operator '" + shape + "'");
  if (auto m = r.get("adversary.matrix")) adv.matrix = parse_matrix("adversary.matrix", *m);
  if (adv.adaptive && adv.kind != AdversaryKind::Linear)
    throw ConfigError("adversary.adaptive is only supported for linear adversaries");
  const Adversary probe(adv, mirror, cfg.seeds.front());

  // Schedules; c = auto gives diameter / G.
  const double auto_c = mirror.domain().diameter_in(mirror.norms().kind) / probe.declared_bound();
  cfg.setup.schedule.eta = read_rate(r, "schedule.eta", auto_c);
  cfg.setup.schedule.theta = read_rate(r, "schedule.theta", auto_c);

  // Hints.
  HintSpec& hint = cfg.setup.hint;
  const std::string hint_kind = lower(r.str("hint.kind", "zero"));
  if (hint_kind == "zero") hint.kind = HintKind::Zero;
  else if (hint_kind == "last") hint.kind = HintKind::LastGradient;
  else if (hint_kind == "perfect") hint.kind = HintKind::Perfect;
  else if (hint_kind == "noisy") hint.kind = HintKind::NoisyPerfect;
  else throw ConfigError("hint.kind: unknown hint '" + hint_kind + "'");
  hint.sigma = r.real("hint.sigma", 0.0);
  if (!(hint.sigma >= 0.0)) throw ConfigError("hint.sigma must be non-negative");
  if (hint.clairvoyant() && !probe.oblivious_linear())
    throw ConfigError("hint.kind=" + hint_kind + " needs a non-adaptive linear adversary");

  // Comparator.
  ComparatorSpec& cmp = cfg.setup.comparator;
  const std::string cmp_kind = lower(r.str("comparator.kind", "best"));
  if (cmp_kind == "static") cmp.kind = ComparatorKind::Static;
  else if (cmp_kind == "best") cmp.kind = ComparatorKind::BestStatic;
  else if (cmp_kind == "drift") cmp.kind = ComparatorKind::Drift;
  else throw ConfigError("comparator.kind: unknown comparator '" + cmp_kind + "'");
  cmp.point = r.vec("comparator.u", dim);
  if (cmp.point && !mirror.domain().contains(*cmp.point))
    throw ConfigError("comparator.u is outside the feasible set");
  cmp.budget = r.real("comparator.budget", 1.0);
  cmp.waypoints = r.integer("comparator.waypoints", 4);
  if (cmp.kind == ComparatorKind::BestStatic && adv.kind == AdversaryKind::Monotone)
    throw ConfigError("comparator.kind=best needs loss functions; use static or drift");

  // Evaluation.
  cfg.tolerance = r.real("tolerance", 1e-7);
  if (!(cfg.tolerance >= 0.0)) throw ConfigError("tolerance must be non-negative");
  if (auto rho = r.get("eval.rho")) {
    cfg.eval.rho = parse_real("eval.rho", *rho);
    if (!(cfg.eval.rho > 0.0)) throw ConfigError("eval.rho must be positive");
  }
  const std::string xsel = lower(r.str("eval.x_selection", "check"));
  if (xsel == "tilde") cfg.eval.x_selection = XSelection::Tilde;
  else if (xsel == "check") cfg.eval.x_selection = XSelection::Check;
  else throw ConfigError("eval.x_selection: expected tilde or check");
  const std::string drift = lower(r.str("eval.ogp_drift", "linear"));
  if (drift == "linear") cfg.eval.ogp_drift = DriftForm::Linear;
  else if (drift == "squared") cfg.eval.ogp_drift = DriftForm::Squared;
  else throw ConfigError("eval.ogp_drift: expected linear or squared");

  // Bounds.
  const std::string bounds = r.str("bounds", "all");
  if (lower(bounds) == "all") {
    cfg.bounds = compatible_bounds(cfg.setup);
  } else {
    for (const std::string& name : split(bounds, ",")) {
      BoundId id = bound_from_string(name);
      require_compatible(id, cfg.setup);
      cfg.bounds.push_back(id);
    }
  }

  // Monotone experiments.
  MonotoneConfig& mc = cfg.monotone;
  mc.op = lower(r.str("monotone.operator", "skew"));
  mc.dimension = r.integer("monotone.dim", 2);
  if (mc.dimension < 1) throw ConfigError("monotone.dim must be positive");
  if (auto m = r.get("monotone.matrix")) mc.matrix = parse_matrix("monotone.matrix", *m);
  if (auto v = r.get("monotone.vector")) mc.vector = parse_vector("monotone.vector", *v);
  if (mc.matrix.size() && mc.matrix.rows() != mc.dimension)
    throw ConfigError("monotone.matrix does not match monotone.dim");
  mc.scale = r.real("monotone.scale", 1.0);
  mc.quadrature = r.integer("monotone.k", kDefaultQuadrature);
  mc.n_max = r.integer("monotone.n_max", 3);
  mc.instances = r.integer("monotone.instances", 20);
  mc.loops = r.integer("monotone.loops", 20);
  mc.search.budget = r.integer("monotone.budget", mc.search.budget);
  mc.search.restarts = r.integer("monotone.restarts", mc.search.restarts);
  mc.search.quadrature = mc.quadrature;
  if (mc.quadrature < 1) throw ConfigError("monotone.k must be positive");
  if (mc.n_max < 0) throw ConfigError("monotone.n_max must be non-negative");
  if (mc.search.budget < 1) throw ConfigError("monotone.budget must be positive");
  cfg.monotone_set = read_set(r, "monotone.set", "monotone.", "box", mc.dimension);
  return cfg;
}

}  // namespace

ExperimentConfig build_config(const KeyValues& kv) {
  // Shape and domain failures while reading a config are config errors.
  try {
    return build_config_unchecked(kv);
  } catch (const DimensionError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace oco
