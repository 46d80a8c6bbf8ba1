#pragma once

#include <optional>
#include <string>

#include "oco/core_math.hpp"
#include "oco/feasible_set.hpp"

namespace oco {

enum class MirrorKind { Entropy, SquaredNorm };

/// A phi-convex regularizer psi on C together with the canonical subgradient
/// selection used by the strategies:
///  - negative entropy on the simplex, selection 1 + ln x, norms l1 / l-inf,
///    modulus Q_2;
///  - squared norm on a closed convex set, identity selection, norms l2 / l2,
///    modulus Q_rho with rho the Euclidean diameter of C.
///
/// Entropy quantities are evaluated in the log domain: dual points grow
/// linearly with the round count and naive exponentials overflow.
class MirrorMap {
 public:
  static MirrorMap entropy(int dimension, std::optional<Vec> anchor = std::nullopt);
  static MirrorMap squared_norm(FeasibleSet domain, std::optional<Vec> anchor = std::nullopt);

  MirrorKind kind() const { return kind_; }
  const FeasibleSet& domain() const { return domain_; }
  const NormPair& norms() const { return norms_; }
  const ConvexModulus& modulus() const { return modulus_; }
  const Vec& anchor() const { return anchor_; }
  const Vec& anchor_dual() const { return anchor_dual_; }
  int dimension() const { return domain_.dimension(); }

  /// A point of the conjugate subdifferential at d (always in C).
  Vec mirror_step(const Vec& d) const;
  /// Canonical element of the subdifferential of psi at x.
  Vec dual_image(const Vec& x) const;
  /// dual_image(mirror_step(d)), computed without leaving the log domain.
  Vec reselect(const Vec& d) const;

  double psi(const Vec& x) const;
  double psi_star(const Vec& d) const;

  /// B_psi(x, y*) = psi(x) + psi*(y*) - <y*, x>.
  double bregman(const Vec& x, const Vec& y_dual) const;

  /// LHS - RHS of the generalized cosine rule with y* = dual_image(y).
  double cosine_residual(const Vec& x, const Vec& y, const Vec& z_dual) const;

  /// X with d in the subdifferential of (psi - <a^psi, .>) / eta_t at X,
  /// i.e. mirror_step(a^psi + eta_t d).
  Vec resolve_intermediate(const Vec& d, double eta_t) const;

  std::string describe() const;

 private:
  MirrorMap(MirrorKind kind, FeasibleSet domain, NormPair norms, ConvexModulus modulus)
      : kind_(kind), domain_(std::move(domain)), norms_(norms), modulus_(modulus) {}

  void require_in_domain(const Vec& x, const char* op) const;

  MirrorKind kind_;
  FeasibleSet domain_;
  NormPair norms_;
  ConvexModulus modulus_;
  Vec anchor_;
  Vec anchor_dual_;
};

}  // namespace oco
