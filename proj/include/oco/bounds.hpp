#pragma once

#include <string>
#include <vector>

#include "oco/game_log.hpp"

namespace oco {

enum class BoundId {
  S1Dynamic,
  SDynamic,
  SStaticEta,
  SStaticTheta,
  S2Dynamic,
  OnesEta,
  OnesTheta,
  OnesEtaAux,
  OnesThetaAux,
  OlpDynamic,
  OlpDynamicAux,
  OlpStaticEta,
  OlpStaticEtaAux,
  OlpStaticTheta,
  OlpStaticThetaAux,
  OgpDynamic,
  OgpDynamicAux,
  OgpStatic,
  OgpStaticAux,
};

std::string to_string(BoundId id);
BoundId bound_from_string(const std::string& s);
const std::vector<BoundId>& all_bounds();
bool is_static_bound(BoundId id);
bool is_auxiliary_bound(BoundId id);

/// Where X_{t+1} in the S-I bracket comes from: the re-selected dual
/// x~^psi_{t+1} or the raw cumulative dual x^psi-check_{t+1}. Only Check is
/// sound in general: with varying eta and an active projection, Tilde can
/// undercut the regret.
enum class XSelection { Tilde, Check };

/// OGP drift term: rho/theta_t * ||dz|| or rho/theta_t * ||dz||^2.
enum class DriftForm { Linear, Squared };

struct EvalOptions {
  double rho = 0.0;  // > 0 overrides the modulus rho (kInf gives the strongly convex bound)
  XSelection x_selection = XSelection::Check;
  DriftForm ogp_drift = DriftForm::Linear;
};

/// Term-by-term bound. Static leading terms sit at index 0 of `container`.
struct BoundReport {
  std::string corollary_id;
  std::vector<double> container;
  std::vector<double> penalty;
  std::vector<double> subtraction;  // signed (<= 0 except the S-I X-bracket)
  double total_bound = 0.0;
  double played_regret = 0.0;
  double margin = 0.0;
  bool surrogate_regret = false;  // regret measured by sum <x*_t, x_t - z_t>
  std::vector<double> round_regret;
  std::vector<std::string> warnings;

  double container_total() const;
  double penalty_total() const;
  double subtraction_total() const;
};

/// sum_t phi_t(x_t) - phi_t(z_t). Throws DomainError for monotone feedback.
double played_regret(const GameLog& log, const ComparatorPath& path);
/// sum_t <x*_t, x_t - z_t>, an upper bound on played_regret.
double surrogate_regret(const GameLog& log, const ComparatorPath& path);

/// Throws ConfigError when (engine, mirror, schedule, comparator) does not
/// satisfy the preconditions of `id`. The setup overload validates a config
/// before any game is played.
void require_compatible(BoundId id, const GameSetup& setup);
std::vector<BoundId> compatible_bounds(const GameSetup& setup);
void require_compatible(BoundId id, const GameLog& log, const ComparatorPath& path);
bool is_compatible(BoundId id, const GameLog& log, const ComparatorPath& path);
std::vector<BoundId> compatible_bounds(const GameLog& log, const ComparatorPath& path);

BoundReport evaluate_bound(BoundId id, const GameLog& log, const ComparatorPath& path,
                           const EvalOptions& options = {});

BoundReport bound_s1_dynamic(const GameLog& log, const ComparatorPath& path,
                             const EvalOptions& options = {});
BoundReport bound_s_dynamic(const GameLog& log, const ComparatorPath& path,
                            const EvalOptions& options = {});
BoundReport bound_s_static_eta(const GameLog& log, const Vec& u, const EvalOptions& options = {});
BoundReport bound_s_static_theta(const GameLog& log, const Vec& u, const EvalOptions& options = {});
BoundReport bound_s2_dynamic(const GameLog& log, const ComparatorPath& path,
                             const EvalOptions& options = {});

enum class OnesVariant { Eta, Theta, EtaAux, ThetaAux };
BoundReport bound_ones_static(const GameLog& log, const Vec& u, OnesVariant variant,
                              const EvalOptions& options = {});

enum class ScheduleVariant { Eta, Theta };
BoundReport bound_olp_dynamic(const GameLog& log, const ComparatorPath& path, bool auxiliary,
                              const EvalOptions& options = {});
BoundReport bound_olp_static(const GameLog& log, const Vec& u, ScheduleVariant variant,
                             bool auxiliary, const EvalOptions& options = {});
BoundReport bound_ogp_dynamic(const GameLog& log, const ComparatorPath& path, bool auxiliary,
                              const EvalOptions& options = {});
BoundReport bound_ogp_static(const GameLog& log, const Vec& u, bool auxiliary,
                             const EvalOptions& options = {});

struct Verdict {
  bool pass = true;
  double margin = 0.0;
  double worst_cumulative_margin = 0.0;  // min over t of partial bound - partial regret
  int worst_round = 0;
};

Verdict check_violation(const BoundReport& report, double tol);

}  // namespace oco
