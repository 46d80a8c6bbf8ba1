#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oco/bounds.hpp"
#include "oco/game.hpp"
#include "oco/monotone.hpp"

namespace oco {

/// One seeded game and the bounds evaluated on it.
struct SeedOutcome {
  std::uint64_t seed = 0;
  GameLog log;
  std::vector<BoundReport> reports;
  std::string error;  // non-empty when the game or an evaluator threw
  bool config_error = false;
};

namespace serial {

std::vector<SeedOutcome> run_seeds(const GameSetup& base, const std::vector<std::uint64_t>& seeds,
                                   const std::vector<BoundId>& bounds,
                                   const EvalOptions& options = {});

SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y,
                                 int k = kDefaultQuadrature);

}  // namespace serial

/// OpenMP versions; results are identical to the serial reference up to the
/// summation order of the quadrature.
namespace parallel {

std::vector<SeedOutcome> run_seeds(const GameSetup& base, const std::vector<std::uint64_t>& seeds,
                                   const std::vector<BoundId>& bounds,
                                   const EvalOptions& options = {});

SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y,
                                 int k = kDefaultQuadrature);

int max_threads();

}  // namespace parallel

}  // namespace oco
