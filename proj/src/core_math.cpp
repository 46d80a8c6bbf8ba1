#include "oco/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oco {

void require_same_dim(long a, long b, const std::string& what) {
  if (a != b) {
    throw DimensionError(what + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

namespace {

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
}

}  // namespace

double q_rho(double x, double rho) {
  require_positive_rho(rho);
  if (std::abs(x) > rho) return kInf;
  return 0.5 * x * x;
}

double q_rho_star(double k, double rho) {
  require_positive_rho(rho);
  // (|k| - inf)_+ must be exactly zero, never inf - inf.
  if (rho == kInf) return 0.5 * k * k;
  // Piecewise form; the difference of squares cancels badly for |k| >> rho.
  const double a = std::abs(k);
  return a <= rho ? 0.5 * k * k : rho * a - 0.5 * rho * rho;
}

ConvexModulus::ConvexModulus(double rho) : rho_(rho) { require_positive_rho(rho); }

double NormPair::primal(const Vec& v) const {
  return kind == NormKind::L1Linf ? v.lpNorm<1>() : v.norm();
}

double NormPair::dual(const Vec& v) const {
  if (v.size() == 0) return 0.0;
  return kind == NormKind::L1Linf ? v.lpNorm<Eigen::Infinity>() : v.norm();
}

HintCorrection hint_interpolate(const Vec& g, const Vec& h, const NormPair& norms) {
  require_same_dim(g.size(), h.size(), "hint_interpolate");
  const double err = norms.dual(g - h);
  HintCorrection out;
  // 0/0 when the hint is exact: take lambda = 1 (perfect-hint limit).
  out.lambda = err == 0.0 ? 1.0 : std::min(norms.dual(g) / err, 1.0);
  out.corrected_hint = out.lambda * h + (1.0 - out.lambda) * g;
  return out;
}

double phi_cap_scalar(double err_norm, double grad_norm, double xi, double rho) {
  if (!(xi > 0.0)) throw DomainError("phi_cap: xi must be positive");
  const double head = q_rho_star(xi * std::min(err_norm, grad_norm), rho);
  const double tail = xi * grad_norm * std::min(xi * positive_part(err_norm - grad_norm), rho);
  return head + tail;
}

double phi_cap(const Vec& g, const Vec& h, double xi, double rho, const NormPair& norms) {
  require_same_dim(g.size(), h.size(), "phi_cap");
  return phi_cap_scalar(norms.dual(g - h), norms.dual(g), xi, rho);
}

double kl(const Vec& u, const Vec& w) {
  require_same_dim(u.size(), w.size(), "kl");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] < 0.0 || w[i] < 0.0) throw DomainError("kl: negative entry");
    if (u[i] < 1e-300) continue;
    if (w[i] == 0.0) throw DomainError("kl: w has a zero entry where u is positive");
    sum += u[i] * std::log(u[i] / w[i]);
  }
  return std::max(sum, 0.0);
}

double log_sum_exp(const Vec& v) {
  if (v.size() == 0) throw DimensionError("log_sum_exp: empty vector");
  const double m = v.maxCoeff();
  if (m == kInf) return kInf;
  return m + std::log((v.array() - m).exp().sum());
}

Vec log_softmax(const Vec& v) { return v.array() - log_sum_exp(v); }

}  // namespace oco
