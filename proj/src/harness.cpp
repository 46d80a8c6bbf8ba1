#include "oco/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <functional>

#include "json.hpp"

#include "oco/log_io.hpp"
#include "oco/report.hpp"

namespace oco {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<SeedOutcome> fan_out(const ExperimentConfig& cfg, const CliOptions& options) {
  return options.serial ? serial::run_seeds(cfg.setup, cfg.seeds, cfg.bounds, cfg.eval)
                        : parallel::run_seeds(cfg.setup, cfg.seeds, cfg.bounds, cfg.eval);
}

json json_real(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace

ExperimentConfig load_config(const KeyValues& kv, const CliOptions& options) {
  KeyValues adjusted = kv;
  if (options.seed) {
    adjusted.erase("seeds");
    adjusted["seed"] = std::to_string(*options.seed);
  }
  ExperimentConfig cfg = build_config(adjusted);
  if (options.tolerance) {
    if (!(*options.tolerance >= 0.0)) throw ConfigError("--tolerance must be non-negative");
    cfg.tolerance = *options.tolerance;
  }
  return cfg;
}

double penalty_share(const BoundReport& report) {
  const double c = report.container_total();
  const double p = report.penalty_total();
  const double denom = c + p;
  return denom > 0.0 ? p / denom : 0.0;
}

RunResult run_experiment(const ExperimentConfig& cfg, const CliOptions& options, std::ostream& out) {
  RunResult result;
  result.outcomes = fan_out(cfg, options);
  const fs::path dir(options.out_dir);
  if (options.write_files) {
    fs::create_directories(dir / "logs");
    fs::create_directories(dir / "reports");
    fs::create_directories(dir / "plots");
  }
  json summary;
  summary["tolerance"] = cfg.tolerance;
  summary["strategy"] = to_string(cfg.setup.engine);
  summary["mirror"] = cfg.setup.mirror.describe();
  summary["T"] = cfg.setup.horizon;
  summary["games"] = json::array();
  bool config_failure = false;
  bool runtime_failure = false;
  for (const SeedOutcome& o : result.outcomes) {
    json game;
    game["seed"] = o.seed;
    if (!o.error.empty()) {
      out << "seed " << o.seed << " ERROR " << o.error << '\n';
      game["error"] = o.error;
      (o.config_error ? config_failure : runtime_failure) = true;
      summary["games"].push_back(game);
      continue;
    }
    game["bounds"] = json::array();
    std::vector<Series> curves;
    for (const BoundReport& r : o.reports) {
      const Verdict v = check_violation(r, cfg.tolerance);
      if (!v.pass) ++result.failures;
      out << (v.pass ? "PASS " : "FAIL ") << r.corollary_id << " seed=" << o.seed
          << " bound=" << format_real(r.total_bound) << " regret=" << format_real(r.played_regret)
          << " margin=" << format_real(r.margin) << '\n';
      json b;
      b["id"] = r.corollary_id;
      b["container"] = json_real(r.container_total());
      b["penalty"] = json_real(r.penalty_total());
      b["subtraction"] = json_real(r.subtraction_total());
      b["total_bound"] = json_real(r.total_bound);
      b["played_regret"] = json_real(r.played_regret);
      b["margin"] = json_real(r.margin);
      b["surrogate_regret"] = r.surrogate_regret;
      b["verdict"] = v.pass ? "PASS" : "FAIL";
      b["worst_cumulative_margin"] = json_real(v.worst_cumulative_margin);
      b["worst_round"] = v.worst_round;
      b["warnings"] = r.warnings;
      game["bounds"].push_back(b);
      if (options.write_files) {
        write_report_csv((dir / "reports" / (r.corollary_id + "_seed" + std::to_string(o.seed) + ".csv")).string(), r);
        auto s = cumulative_series(r);
        curves.insert(curves.end(), s.begin(), s.end());
      }
    }
    game["clairvoyant_hints"] = o.log.clairvoyant_hints;
    summary["games"].push_back(game);
    if (options.write_files) {
      write_log_csv((dir / "logs" / ("seed" + std::to_string(o.seed) + ".csv")).string(), o.log,
                    cfg.raw);
      write_svg_plot((dir / "plots" / ("seed" + std::to_string(o.seed) + ".svg")).string(),
                     "seed " + std::to_string(o.seed), "round t", "cumulative value", curves);
    }
  }
  summary["failures"] = result.failures;
  if (runtime_failure) result.exit_code = kExitRuntime;
  else if (config_failure) result.exit_code = kExitConfig;
  else if (result.failures > 0) result.exit_code = kExitViolation;
  summary["exit_code"] = result.exit_code;
  if (options.write_files) {
    std::ofstream js(dir / "summary.json");
    js << summary.dump(2) << '\n';
  }
  return result;
}

std::string resolve_axis(const std::string& axis) {
  static const std::map<std::string, std::string> aliases = {
      {"sigma", "hint.sigma"}, {"eta", "schedule.eta.c"}, {"theta", "schedule.theta.c"},
      {"G", "adversary.G"},    {"D", "comparator.budget"}};
  auto it = aliases.find(axis);
  const std::string key = it == aliases.end() ? axis : it->second;
  const auto& keys = numeric_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end())
    throw ConfigError("unknown sweep axis '" + axis + "'");
  return key;
}

SweepResult run_sweep(const KeyValues& base, const std::string& axis,
                      const std::vector<double>& values, const CliOptions& options,
                      std::ostream& out) {
  SweepResult result;
  const std::string key = resolve_axis(axis);
  for (double value : values) {
    KeyValues kv = base;
    kv[key] = format_real(value);
    const ExperimentConfig cfg = load_config(kv, options);
    const std::vector<SeedOutcome> outcomes = fan_out(cfg, options);
    for (const SeedOutcome& o : outcomes)
      if (!o.error.empty()) {
        if (o.config_error) throw ConfigError(o.error);
        throw std::runtime_error(o.error);
      }
    for (std::size_t b = 0; b < cfg.bounds.size(); ++b) {
      SweepRow row;
      row.value = value;
      row.bound = to_string(cfg.bounds[b]);
      row.min_margin = kInf;
      for (const SeedOutcome& o : outcomes) {
        const BoundReport& r = o.reports[b];
        row.total_bound += r.total_bound;
        row.played_regret += r.played_regret;
        row.penalty_share += penalty_share(r);
        row.min_margin = std::min(row.min_margin, r.margin);
        if (!check_violation(r, cfg.tolerance).pass) ++row.failures;
      }
      const double count = static_cast<double>(outcomes.size());
      row.total_bound /= count;
      row.played_regret /= count;
      row.penalty_share /= count;
      if (row.failures) result.exit_code = kExitViolation;
      out << key << '=' << format_real(value) << ' ' << row.bound
          << " bound=" << format_real(row.total_bound)
          << " regret=" << format_real(row.played_regret)
          << " min_margin=" << format_real(row.min_margin)
          << " penalty_share=" << format_real(row.penalty_share)
          << (row.failures ? " FAIL" : " PASS") << '\n';
      result.rows.push_back(row);
    }
  }
  if (options.write_files) {
    const fs::path dir(options.out_dir);
    fs::create_directories(dir);
    std::ofstream csv(dir / "sweep.csv");
    csv << "axis,value,bound,total_bound,played_regret,min_margin,penalty_share,failures\n";
    for (const SweepRow& r : result.rows)
      csv << key << ',' << format_real(r.value) << ',' << r.bound << ','
          << format_real(r.total_bound) << ',' << format_real(r.played_regret) << ','
          << format_real(r.min_margin) << ',' << format_real(r.penalty_share) << ',' << r.failures
          << '\n';
    std::map<std::string, std::pair<Series, Series>> by_bound;
    for (const SweepRow& r : result.rows) {
      auto& [b, g] = by_bound[r.bound];
      b.name = r.bound + " bound";
      g.name = r.bound + " regret";
      g.dashed = true;
      b.x.push_back(r.value);
      b.y.push_back(r.total_bound);
      g.x.push_back(r.value);
      g.y.push_back(r.played_regret);
    }
    std::vector<Series> series;
    for (auto& [name, pair] : by_bound) {
      series.push_back(pair.first);
      series.push_back(pair.second);
    }
    write_svg_plot((dir / "sweep.svg").string(), "sweep over " + key, key, "mean over seeds",
                   series);
  }
  return result;
}

// ---------------------------------------------------------------------------

MonotoneResult run_monotone(const ExperimentConfig& cfg, const CliOptions& options,
                            std::ostream& out) {
  MonotoneResult result;
  const MonotoneConfig& mc = cfg.monotone;
  const FeasibleSet& set = *cfg.monotone_set;
  const std::uint64_t seed = cfg.seeds.front();
  const MonotoneOperator m = make_operator(mc, seed);
  const int k = mc.quadrature;
  auto fail = [&](const std::string& what) {
    result.failures.push_back(what);
    out << "FAIL " << what << '\n';
  };

  const double mono = m.sampled_monotonicity(set, 1000, seed);
  out << "operator " << m.describe() << " dim=" << m.dimension()
      << " sampled_monotonicity=" << format_real(mono) << '\n';
  if (mono < -1e-9) fail("operator is not monotone on sampled pairs");

  // Loops: the bounding rectangle in the first two coordinates (box sets)
  // plus random triangles.
  std::vector<std::pair<std::string, PolylinePath>> loops;
  if (set.kind() == SetKind::Box && m.dimension() >= 2) {
    const Vec& lo = set.box_lower();
    const Vec& hi = set.box_upper();
    Vec p0 = lo, p1 = lo, p2 = lo, p3 = lo;
    p1[0] = hi[0];
    p2[0] = hi[0];
    p2[1] = hi[1];
    p3[1] = hi[1];
    loops.push_back({"rectangle_ccw", PolylinePath{{p0, p1, p2, p3, p0}}});
    loops.push_back({"rectangle_cw", PolylinePath{{p0, p3, p2, p1, p0}}});
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < mc.loops; ++i) {
    Vec a = set.sample(rng()), b = set.sample(rng()), c = set.sample(rng());
    loops.push_back({"triangle_" + std::to_string(i), PolylinePath{{a, b, c, a}}});
  }
  std::vector<std::vector<std::string>> loop_rows;
  for (const auto& [name, loop] : loops) {
    const double v = loop_integral(m, loop, k);
    const SegmentIntegral s = path_integral(m, loop, k);
    if (!(s.lower <= s.value + 1e-12 && s.value <= s.upper + 1e-12))
      fail("bracket does not contain the trapezoid value on loop " + name);
    if (m.has_potential() && std::abs(v) > 1e-8) fail("conservative operator has loop residual on " + name);
    loop_rows.push_back({name, format_real(v), format_real(s.lower), format_real(s.upper)});
    out << "loop " << name << " integral=" << format_real(v) << '\n';
  }

  // Regret^n table.
  std::vector<std::vector<std::string>> regret_rows;
  std::vector<double> mean_value(static_cast<std::size_t>(mc.n_max) + 1, 0.0);
  for (int inst = 0; inst < mc.instances; ++inst) {
    const Vec z = set.sample(rng());
    const Vec x = set.sample(rng());
    const double surrogate = m.evaluate(x).dot(x - z);
    std::optional<double> potential_gap;
    if (m.has_potential()) potential_gap = *m.potential(x) - *m.potential(z);
    double prev = kInf;
    for (int n = 0; n <= mc.n_max; ++n) {
      const RegretEstimate e = regret_n_estimate(m, z, x, n, set, seed + static_cast<std::uint64_t>(inst), mc.search);
      mean_value[static_cast<std::size_t>(n)] += e.value / mc.instances;
      const std::string tag = "instance " + std::to_string(inst) + " n=" + std::to_string(n);
      if (!(e.lower <= e.value + 1e-12 && e.value <= e.upper + 1e-12)) fail(tag + ": bracket");
      if (e.value > prev + 1e-6) fail(tag + ": estimate increased with n");
      if (e.value > surrogate + 1e-7) fail(tag + ": estimate above <M(x), x - z>");
      if (potential_gap && std::abs(e.value - *potential_gap) > 1e-6) fail(tag + ": potential mismatch");
      prev = e.value;
      regret_rows.push_back({std::to_string(inst), std::to_string(n), format_real(e.value),
                             format_real(e.lower), format_real(e.upper),
                             std::to_string(e.budget_used), format_real(surrogate),
                             potential_gap ? format_real(*potential_gap) : ""});
    }
  }

  // Meta decomposition.
  std::vector<std::vector<std::string>> meta_rows;
  for (int inst = 0; inst < mc.instances; ++inst) {
    const int experts_n = 3;
    std::vector<Vec> experts;
    for (int i = 0; i < experts_n; ++i) experts.push_back(set.sample(rng()));
    Vec w = FeasibleSet::simplex(experts_n).sample(rng());
    const int j = static_cast<int>(rng() % experts_n);
    const Vec z = set.sample(rng());
    const MetaDecomposition d = meta_decomposition_check(m, experts, w, j, z, k);
    if (d.lhs_upper > d.rhs + 1e-7) fail("meta decomposition instance " + std::to_string(inst));
    meta_rows.push_back({std::to_string(inst), std::to_string(j), format_real(d.lhs),
                         format_real(d.lhs_upper), format_real(d.rhs)});
  }

  if (options.write_files) {
    const fs::path dir(options.out_dir);
    fs::create_directories(dir);
    auto write = [&](const char* file, const char* header,
                     const std::vector<std::vector<std::string>>& rows) {
      std::ofstream f(dir / file);
      f << header << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
        f << '\n';
      }
    };
    write("loops.csv", "loop,integral,lower,upper", loop_rows);
    write("regret_n.csv", "instance,n,value,lower,upper,budget_used,surrogate,potential_gap",
          regret_rows);
    write("meta.csv", "instance,j,lhs,lhs_upper,rhs", meta_rows);
    Series s{"mean Regret^n estimate", {}, {}, false};
    for (std::size_t n = 0; n < mean_value.size(); ++n) {
      s.x.push_back(static_cast<double>(n));
      s.y.push_back(mean_value[n]);
    }
    write_svg_plot((dir / "regret_n.svg").string(), "Regret^n estimates (" + m.describe() + ")",
                   "n", "mean estimate", {s});
  }
  out << (result.failures.empty() ? "PASS" : "FAIL") << " monotone checks ("
      << result.failures.size() << " failures)\n";
  result.exit_code = result.failures.empty() ? kExitPass : kExitViolation;
  return result;
}

// ---------------------------------------------------------------------------

int cmd_run(const std::string& config_path, const CliOptions& options, std::ostream& out,
            std::ostream& err) {
  return guarded(
      [&] {
        const ExperimentConfig cfg = load_config(read_config_file(config_path), options);
        const RunResult r = run_experiment(cfg, options, out);
        out << (r.exit_code == kExitPass ? "OK" : "NOT OK") << ": " << r.failures
            << " violation(s) over " << r.outcomes.size() << " seed(s)\n";
        return r.exit_code;
      },
      err);
}

int cmd_sweep(const std::string& config_path, const std::string& axis,
              const std::vector<double>& values, const CliOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(
      [&] { return run_sweep(read_config_file(config_path), axis, values, options, out).exit_code; },
      err);
}

int cmd_verify(const std::string& log_path, const CliOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(
      [&] {
        LoadedLog loaded = read_log_csv(log_path);
        if (options.tolerance) loaded.config.tolerance = *options.tolerance;
        const GameLog& log = loaded.log;
        int failures = 0;

        // Replay the engine from the logged hints and gradients.
        StrategyState state(log.setup.engine, log.setup.mirror, log.setup.schedule);
        std::optional<Vec> last;
        double worst = 0.0;
        for (const RoundRecord& r : log.rounds) {
          const StepResult s = state.step(r.hint, last);
          worst = std::max({worst, (s.play - r.play).cwiseAbs().maxCoeff(),
                            (s.tilde_dual - r.tilde_dual).cwiseAbs().maxCoeff(),
                            (s.check_dual - r.check_dual).cwiseAbs().maxCoeff()});
          last = r.gradient;
        }
        if (worst > 1e-9) {
          // The bounds only describe faithful traces; evaluating them on an
          // altered log would be meaningless (and may leave C).
          out << "FAIL replay: log mismatch, engine differs by " << format_real(worst) << '\n'
              << "bounds not evaluated\n";
          return kExitViolation;
        }
        out << "PASS replay\n";

        for (BoundId id : loaded.config.bounds) {
          const BoundReport rep = evaluate_bound(id, log, log.comparator, loaded.config.eval);
          const Verdict v = check_violation(rep, loaded.config.tolerance);
          if (!v.pass) ++failures;
          out << (v.pass ? "PASS " : "FAIL ") << rep.corollary_id
              << " bound=" << format_real(rep.total_bound)
              << " regret=" << format_real(rep.played_regret)
              << " margin=" << format_real(rep.margin) << '\n';
        }
        return failures ? kExitViolation : kExitPass;
      },
      err);
}

int cmd_monotone(const std::string& config_path, const CliOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(
      [&] {
        const ExperimentConfig cfg = load_config(read_config_file(config_path), options);
        return run_monotone(cfg, options, out).exit_code;
      },
      err);
}

}  // namespace oco
