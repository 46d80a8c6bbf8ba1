#include "oco/parallel.hpp"

#include <omp.h>

namespace oco {

namespace {

SeedOutcome run_one(const GameSetup& base, std::uint64_t seed, const std::vector<BoundId>& bounds,
                    const EvalOptions& options) {
  SeedOutcome out;
  out.seed = seed;
  try {
    GameSetup setup = base;
    setup.seed = seed;
    out.log = play_game(setup);
    for (BoundId id : bounds)
      out.reports.push_back(evaluate_bound(id, out.log, out.log.comparator, options));
  } catch (const ConfigError& e) {
    out.error = e.what();
    out.config_error = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

namespace serial {

std::vector<SeedOutcome> run_seeds(const GameSetup& base, const std::vector<std::uint64_t>& seeds,
                                   const std::vector<BoundId>& bounds, const EvalOptions& options) {
  std::vector<SeedOutcome> out;
  out.reserve(seeds.size());
  for (std::uint64_t seed : seeds) out.push_back(run_one(base, seed, bounds, options));
  return out;
}

SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y, int k) {
  return oco::segment_integral(m, x, y, k);
}

}  // namespace serial

namespace parallel {

std::vector<SeedOutcome> run_seeds(const GameSetup& base, const std::vector<std::uint64_t>& seeds,
                                   const std::vector<BoundId>& bounds, const EvalOptions& options) {
  std::vector<SeedOutcome> out(seeds.size());
  const long count = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = run_one(base, seeds[k], bounds, options);
  }
  return out;
}

SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y, int k) {
  if (k <= 0) throw ConfigError("segment_integral: k must be positive");
  require_same_dim(x.size(), m.dimension(), "segment_integral");
  require_same_dim(y.size(), m.dimension(), "segment_integral");
  SegmentIntegral s;
  const Vec d = y - x;
  if (d.squaredNorm() == 0.0) return s;
  const double h = 1.0 / k;
  double interior = 0.0;
#pragma omp parallel for reduction(+ : interior)
  for (int i = 1; i < k; ++i) interior += m.evaluate(x + (i * h) * d).dot(d);
  const double m0 = m.evaluate(x).dot(d);
  const double m1 = m.evaluate(y).dot(d);
  s.lower = h * (m0 + interior);
  s.upper = h * (interior + m1);
  s.value = h * (0.5 * m0 + interior + 0.5 * m1);
  return s;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace parallel

}  // namespace oco
