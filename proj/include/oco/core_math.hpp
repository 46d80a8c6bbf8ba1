#pragma once

#include <Eigen/Dense>
#include <limits>

#include "oco/errors.hpp"

namespace oco {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Extended-real +infinity. Used both for rho = infinity and for Q_rho
/// outside its indicator interval.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Default absolute comparison tolerance.
inline constexpr double kDefaultTol = 1e-9;

/// Q_rho(x) = x^2/2 on [-rho, rho], +inf outside.
double q_rho(double x, double rho);

/// Conjugate of Q_rho: k^2/2 - (|k| - rho)_+^2 / 2. With rho = inf the
/// subtraction is exactly zero.
double q_rho_star(double k, double rho);

/// The phi of a phi-convex regularizer, restricted to the Q_rho family.
class ConvexModulus {
 public:
  explicit ConvexModulus(double rho);

  double rho() const { return rho_; }
  bool is_strongly_convex() const { return rho_ == kInf; }

  double phi(double x) const { return q_rho(x, rho_); }
  double phi_star(double k) const { return q_rho_star(k, rho_); }

  /// Same family with rho replaced (rho = inf gives 1-strong convexity).
  ConvexModulus with_rho(double rho) const { return ConvexModulus(rho); }

 private:
  double rho_;
};

enum class NormKind {
  L1Linf,  // primal l1, dual l-infinity
  L2L2,
};

/// A primal/dual norm pair on R^n.
struct NormPair {
  NormKind kind = NormKind::L2L2;

  double primal(const Vec& v) const;
  double dual(const Vec& v) const;

  static NormPair l1_linf() { return {NormKind::L1Linf}; }
  static NormPair l2() { return {NormKind::L2L2}; }
};

struct HintCorrection {
  double lambda = 1.0;
  Vec corrected_hint;
};

/// lambda = min{ ||g|| / ||g - h||, 1 } with lambda = 1 when g == h, and the
/// corrected hint lambda * h + (1 - lambda) * g. The corrected hint satisfies
/// ||g - corrected|| = min{||g - h||, ||g||}.
HintCorrection hint_interpolate(const Vec& g, const Vec& h, const NormPair& norms);

/// Closed form of the auxiliary-sequence penalty Phi_xi(g, h) for phi = Q_rho:
///   Q_rho^*(xi min{||g-h||, ||g||}) + xi ||g|| min{ xi (||g-h|| - ||g||)_+, rho }.
double phi_cap(const Vec& g, const Vec& h, double xi, double rho, const NormPair& norms);

/// Scalar form of phi_cap taking the two dual norms directly.
double phi_cap_scalar(double err_norm, double grad_norm, double xi, double rho);

/// Kullback-Leibler divergence sum u_i ln(u_i / w_i) with 0 ln 0 = 0.
/// Throws DomainError if some w_i == 0 while u_i > 0.
double kl(const Vec& u, const Vec& w);

/// Numerically stable log(sum(exp(v))).
double log_sum_exp(const Vec& v);

/// v - log_sum_exp(v): the logarithm of the normalized exponential of v.
Vec log_softmax(const Vec& v);

/// (x)_+ = max{x, 0}.
inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace oco
