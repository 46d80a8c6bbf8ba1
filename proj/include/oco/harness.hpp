#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oco/config.hpp"
#include "oco/parallel.hpp"

namespace oco {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitConfig = 2, kExitRuntime = 3 };

struct CliOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::string out_dir = "out";
  bool serial = false;  // use the serial reference kernels
  bool write_files = true;
};

/// Applies --seed / --tolerance overrides and builds the config.
ExperimentConfig load_config(const KeyValues& kv, const CliOptions& options);

/// container + penalty share taken by the penalty terms.
double penalty_share(const BoundReport& report);

struct RunResult {
  std::vector<SeedOutcome> outcomes;
  int exit_code = kExitPass;
  int failures = 0;
};

RunResult run_experiment(const ExperimentConfig& cfg, const CliOptions& options, std::ostream& out);

struct SweepRow {
  double value = 0.0;
  std::string bound;
  double total_bound = 0.0;    // mean over seeds
  double played_regret = 0.0;  // mean over seeds
  double min_margin = 0.0;
  double penalty_share = 0.0;  // mean over seeds
  int failures = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int exit_code = kExitPass;
};

/// Resolves aliases (sigma, eta, theta, G, D) and rejects non-numeric keys.
std::string resolve_axis(const std::string& axis);

SweepResult run_sweep(const KeyValues& base, const std::string& axis,
                      const std::vector<double>& values, const CliOptions& options,
                      std::ostream& out);

struct MonotoneResult {
  int exit_code = kExitPass;
  std::vector<std::string> failures;
};

MonotoneResult run_monotone(const ExperimentConfig& cfg, const CliOptions& options,
                            std::ostream& out);

/// Subcommands. Each returns an ExitCode and never throws.
int cmd_run(const std::string& config_path, const CliOptions& options, std::ostream& out,
            std::ostream& err);
int cmd_sweep(const std::string& config_path, const std::string& axis,
              const std::vector<double>& values, const CliOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::string& log_path, const CliOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_monotone(const std::string& config_path, const CliOptions& options, std::ostream& out,
                 std::ostream& err);

}  // namespace oco
