#include "oco/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace oco {

namespace {

void require_monotone_matrix(const Mat& a, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix must be square");
  Mat sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  if (a.rows() > 0 && es.eigenvalues().minCoeff() < -1e-10)
    throw DomainError(std::string(what) + ": symmetric part is not positive semidefinite");
}

Mat block_skew(int n) {
  Mat s = Mat::Zero(n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    s(i, i + 1) = 1.0;
    s(i + 1, i) = -1.0;
  }
  return s;
}

}  // namespace

MonotoneOperator MonotoneOperator::affine(Mat a, Vec b) {
  require_monotone_matrix(a, "MonotoneOperator::affine");
  require_same_dim(a.rows(), b.size(), "MonotoneOperator::affine");
  MonotoneOperator m;
  m.dimension_ = static_cast<int>(b.size());
  m.kind_ = Kind::Affine;
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  m.name_ = "affine";
  if ((m.a_ - m.a_.transpose()).cwiseAbs().maxCoeff() == 0.0 || m.a_.size() == 0) {
    const Mat q = m.a_;
    const Vec c = m.b_;
    m.potential_ = [q, c](const Vec& x) { return 0.5 * x.dot(q * x) + c.dot(x); };
  }
  return m;
}

MonotoneOperator MonotoneOperator::gradient_quadratic(Mat q, Vec b) {
  if (q.rows() != q.cols() || (q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("gradient_quadratic: Q must be symmetric");
  Mat sym = 0.5 * (q + q.transpose());
  MonotoneOperator m = affine(std::move(sym), std::move(b));
  m.name_ = "gradient-quadratic";
  return m;
}

MonotoneOperator MonotoneOperator::linear(Mat a) {
  const auto n = a.rows();
  MonotoneOperator m = affine(std::move(a), Vec::Zero(n));
  m.name_ = "linear";
  return m;
}

MonotoneOperator MonotoneOperator::skew_demo() {
  Mat a(2, 2);
  a << 0.0, 1.0, -1.0, 0.0;
  MonotoneOperator m = linear(a);
  m.name_ = "skew";
  return m;
}

MonotoneOperator MonotoneOperator::cubic_skew(int dimension, double s) {
  if (dimension < 1) throw DimensionError("cubic_skew: dimension must be positive");
  const Mat skew = s * block_skew(dimension);
  auto field = [skew](const Vec& x) -> Vec { return x.array().cube().matrix() + skew * x; };
  std::function<double(const Vec&)> potential;
  if (s == 0.0) potential = [](const Vec& x) { return 0.25 * x.array().pow(4).sum(); };
  return custom(dimension, field, potential, "cubic-skew");
}

MonotoneOperator MonotoneOperator::custom(int dimension, std::function<Vec(const Vec&)> field,
                                          std::function<double(const Vec&)> potential,
                                          std::string name) {
  if (!field) throw ConfigError("custom operator needs a field");
  MonotoneOperator m;
  m.dimension_ = dimension;
  m.kind_ = Kind::Custom;
  m.field_ = std::move(field);
  m.potential_ = std::move(potential);
  m.name_ = std::move(name);
  return m;
}

Vec MonotoneOperator::evaluate(const Vec& x) const {
  require_same_dim(x.size(), dimension_, "MonotoneOperator::evaluate");
  if (kind_ == Kind::Affine) return a_ * x + b_;
  return field_(x);
}

std::optional<double> MonotoneOperator::potential(const Vec& x) const {
  require_same_dim(x.size(), dimension_, "MonotoneOperator::potential");
  if (!potential_) return std::nullopt;
  return potential_(x);
}

double MonotoneOperator::sampled_monotonicity(const FeasibleSet& set, int pairs,
                                              std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  double worst = kInf;
  for (int i = 0; i < pairs; ++i) {
    const Vec x = set.sample(rng());
    const Vec y = set.sample(rng());
    worst = std::min(worst, (evaluate(x) - evaluate(y)).dot(x - y));
  }
  return worst;
}

// ---------------------------------------------------------------------------

SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y, int k) {
  if (k <= 0) throw ConfigError("segment_integral: k must be positive");
  require_same_dim(x.size(), m.dimension(), "segment_integral");
  require_same_dim(y.size(), m.dimension(), "segment_integral");
  SegmentIntegral s;
  const Vec d = y - x;
  if (d.squaredNorm() == 0.0) return s;
  const double h = 1.0 / k;
  double interior = 0.0;
  for (int i = 1; i < k; ++i) interior += m.evaluate(x + (i * h) * d).dot(d);
  const double m0 = m.evaluate(x).dot(d);
  const double m1 = m.evaluate(y).dot(d);
  s.lower = h * (m0 + interior);
  s.upper = h * (interior + m1);
  s.value = h * (0.5 * m0 + interior + 0.5 * m1);
  return s;
}

bool PolylinePath::closed(double tol) const {
  return vertices.size() >= 2 && (vertices.front() - vertices.back()).norm() <= tol;
}

SegmentIntegral path_integral(const MonotoneOperator& m, const PolylinePath& path, int k) {
  SegmentIntegral total;
  for (int i = 0; i < path.segments(); ++i) {
    const SegmentIntegral s = segment_integral(m, path.vertices[i], path.vertices[i + 1], k);
    total.value += s.value;
    total.lower += s.lower;
    total.upper += s.upper;
  }
  return total;
}

double loop_integral(const MonotoneOperator& m, const PolylinePath& loop, int k) {
  if (!loop.closed()) throw ConfigError("loop_integral: path is not closed");
  return path_integral(m, loop, k).value;
}

double cycle_sum(const MonotoneOperator& m, const std::vector<Vec>& points) {
  if (points.size() < 2) throw ConfigError("cycle_sum: need at least two points");
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec& p = points[i];
    const Vec& q = points[(i + 1) % points.size()];
    total += m.evaluate(p).dot(q - p);
  }
  return total;
}

double cyclic_monotonicity_check(const MonotoneOperator& m, const std::vector<Vec>& points) {
  std::vector<Vec> reversed(points.rbegin(), points.rend());
  return std::max(cycle_sum(m, points), cycle_sum(m, reversed));
}

// ---------------------------------------------------------------------------

namespace {

struct Search {
  const MonotoneOperator& m;
  const FeasibleSet& set;
  const RegretSearch& cfg;
  int used = 0;

  double eval(const std::vector<Vec>& v) {
    ++used;
    return path_integral(m, PolylinePath{v}, cfg.quadrature).value;
  }

  // Coordinate descent over the inner vertices with step halving.
  double descend(std::vector<Vec>& v, double value, double step, int limit) {
    const std::size_t inner_end = v.size() - 1;
    while (step >= cfg.min_step && used < limit) {
      bool improved = false;
      for (std::size_t i = 1; i < inner_end && used < limit; ++i) {
        for (int j = 0; j < v[i].size() && used < limit; ++j) {
          for (double sign : {1.0, -1.0}) {
            if (used >= limit) break;
            Vec moved = v[i];
            moved[j] += sign * step;
            moved = set.project(moved);
            if ((moved - v[i]).squaredNorm() == 0.0) continue;
            std::swap(v[i], moved);
            const double candidate = eval(v);
            if (candidate < value) {
              value = candidate;
              improved = true;
            } else {
              std::swap(v[i], moved);
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    return value;
  }
};

}  // namespace

RegretEstimate regret_n_estimate(const MonotoneOperator& m, const Vec& z, const Vec& x, int n,
                                 const FeasibleSet& set, std::uint64_t seed,
                                 const RegretSearch& search) {
  if (n < 0) throw ConfigError("regret_n_estimate: n must be non-negative");
  if (search.budget < 1) throw ConfigError("regret_n_estimate: budget below one restart");
  require_same_dim(z.size(), m.dimension(), "regret_n_estimate");
  require_same_dim(x.size(), m.dimension(), "regret_n_estimate");
  require_same_dim(set.dimension(), m.dimension(), "regret_n_estimate");
  if (!set.contains(z) || !set.contains(x))
    throw DomainError("regret_n_estimate: endpoints must lie in the feasible set");

  RegretEstimate est;
  est.n = n;
  if (n == 0) {
    est.path.vertices = {z, x};
    const SegmentIntegral s = segment_integral(m, z, x, search.quadrature);
    est.value = s.value;
    est.lower = s.lower;
    est.upper = s.upper;
    est.budget_used = 1;
    return est;
  }

  const RegretEstimate prev = regret_n_estimate(m, z, x, n - 1, set, seed, search);
  Search s{m, set, search};
  const int shares = std::max(search.restarts, 0) + 1;
  const double step0 = 0.25 * std::max(set.diameter_in(NormKind::L2L2), 1e-12);

  // Nested candidate: the (n-1) path with its first vertex duplicated.
  std::vector<Vec> best = prev.path.vertices;
  best.insert(best.begin() + 1, best.front());
  double best_value = s.eval(best);
  best_value = std::min(best_value, prev.value);
  best_value = s.descend(best, best_value, step0, search.budget / shares + 1);

  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n + 1)));
  for (int r = 1; r < shares && s.used < search.budget; ++r) {
    std::vector<Vec> v{z};
    for (int i = 0; i < n; ++i) v.push_back(set.sample(rng()));
    v.push_back(x);
    const int limit = std::min(search.budget, s.used + search.budget / shares + 1);
    double value = s.eval(v);
    value = s.descend(v, value, step0, limit);
    if (value < best_value) {
      best_value = value;
      best = std::move(v);
    }
  }

  est.path.vertices = std::move(best);
  const SegmentIntegral total = path_integral(m, est.path, search.quadrature);
  est.value = total.value;
  est.lower = total.lower;
  est.upper = total.upper;
  est.budget_used = s.used;
  return est;
}

// ---------------------------------------------------------------------------

MetaDecomposition meta_decomposition_check(const MonotoneOperator& m,
                                           const std::vector<Vec>& experts, const Vec& weights,
                                           int j, const Vec& z, int k) {
  if (experts.empty()) throw ConfigError("meta_decomposition_check: no experts");
  require_same_dim(static_cast<long>(experts.size()), weights.size(), "meta_decomposition_check");
  if (j < 0 || j >= static_cast<int>(experts.size()))
    throw ConfigError("meta_decomposition_check: expert index out of range");
  if (weights.minCoeff() < 0.0 || std::abs(weights.sum() - 1.0) > 1e-9)
    throw DomainError("meta_decomposition_check: weights must lie on the simplex");
  require_same_dim(z.size(), m.dimension(), "meta_decomposition_check");
  MetaDecomposition out;
  out.x_bar = Vec::Zero(m.dimension());
  for (std::size_t i = 0; i < experts.size(); ++i) {
    require_same_dim(experts[i].size(), m.dimension(), "meta_decomposition_check");
    out.x_bar += weights[static_cast<Eigen::Index>(i)] * experts[i];
  }
  const Vec& xj = experts[static_cast<std::size_t>(j)];
  const SegmentIntegral first = segment_integral(m, z, xj, k);
  const SegmentIntegral second = segment_integral(m, xj, out.x_bar, k);
  out.lhs = first.value + second.value;
  out.lhs_upper = first.upper + second.upper;

  const Vec g_bar = m.evaluate(out.x_bar);
  Vec loss(static_cast<Eigen::Index>(experts.size()));
  for (std::size_t i = 0; i < experts.size(); ++i)
    loss[static_cast<Eigen::Index>(i)] = g_bar.dot(experts[i]);
  Vec indicator = Vec::Zero(loss.size());
  indicator[j] = 1.0;
  out.rhs = loss.dot(weights - indicator) + m.evaluate(xj).dot(xj - z);
  return out;
}

}  // namespace oco
