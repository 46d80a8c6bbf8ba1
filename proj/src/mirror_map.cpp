#include "oco/mirror_map.hpp"

#include <cmath>
#include <sstream>

namespace oco {

MirrorMap MirrorMap::entropy(int dimension, std::optional<Vec> anchor) {
  MirrorMap m(MirrorKind::Entropy, FeasibleSet::simplex(dimension), NormPair::l1_linf(),
              ConvexModulus(2.0));
  m.anchor_ = anchor ? *anchor : m.domain_.center();
  require_same_dim(m.anchor_.size(), dimension, "entropy anchor");
  if ((m.anchor_.array() <= 0.0).any() || std::abs(m.anchor_.sum() - 1.0) > 1e-9) {
    throw DomainError("entropy anchor must be a strictly positive probability vector");
  }
  m.anchor_dual_ = m.dual_image(m.anchor_);
  return m;
}

MirrorMap MirrorMap::squared_norm(FeasibleSet domain, std::optional<Vec> anchor) {
  const double rho = domain.diameter_in(NormKind::L2L2);
  MirrorMap m(MirrorKind::SquaredNorm, std::move(domain), NormPair::l2(), ConvexModulus(rho));
  m.anchor_ = anchor ? *anchor : m.domain_.center();
  require_same_dim(m.anchor_.size(), m.domain_.dimension(), "squared-norm anchor");
  if (!m.domain_.contains(m.anchor_)) throw DomainError("anchor must lie in C");
  m.anchor_dual_ = m.anchor_;
  return m;
}

void MirrorMap::require_in_domain(const Vec& x, const char* op) const {
  require_same_dim(x.size(), dimension(), op);
  if (!domain_.contains(x, 1e-9)) throw DomainError(std::string(op) + ": point outside C");
}

Vec MirrorMap::mirror_step(const Vec& d) const {
  require_same_dim(d.size(), dimension(), "mirror_step");
  if (kind_ == MirrorKind::Entropy) {
    Vec w = log_softmax(d).array().exp();
    return w / w.sum();
  }
  return domain_.project(d);
}

Vec MirrorMap::dual_image(const Vec& x) const {
  require_in_domain(x, "dual_image");
  if (kind_ == MirrorKind::Entropy) {
    if ((x.array() <= 0.0).any()) throw DomainError("dual_image: entropy needs x > 0");
    return Vec::Ones(x.size()) + Vec(x.array().log());
  }
  return x;
}

Vec MirrorMap::reselect(const Vec& d) const {
  require_same_dim(d.size(), dimension(), "reselect");
  if (kind_ == MirrorKind::Entropy) return Vec::Ones(d.size()) + log_softmax(d);
  return domain_.project(d);
}

double MirrorMap::psi(const Vec& x) const {
  require_in_domain(x, "psi");
  if (kind_ == MirrorKind::Entropy) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] > 1e-300) s += x[i] * std::log(x[i]);
    }
    return s;
  }
  return 0.5 * x.squaredNorm();
}

double MirrorMap::psi_star(const Vec& d) const {
  require_same_dim(d.size(), dimension(), "psi_star");
  if (kind_ == MirrorKind::Entropy) return log_sum_exp(d);
  return 0.5 * d.squaredNorm() - 0.5 * (d - domain_.project(d)).squaredNorm();
}

double MirrorMap::bregman(const Vec& x, const Vec& y_dual) const {
  require_in_domain(x, "bregman");
  require_same_dim(y_dual.size(), dimension(), "bregman");
  if (kind_ == MirrorKind::Entropy) {
    // sum x_i (ln x_i - log_softmax(y)_i); uses sum x = 1 on the simplex.
    const Vec log_w = log_softmax(y_dual);
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] > 1e-300) s += x[i] * (std::log(x[i]) - log_w[i]);
    }
    return s;
  }
  const Vec p = domain_.project(y_dual);
  return 0.5 * (x - y_dual).squaredNorm() - 0.5 * (y_dual - p).squaredNorm();
}

double MirrorMap::cosine_residual(const Vec& x, const Vec& y, const Vec& z_dual) const {
  const Vec y_dual = dual_image(y);
  const double lhs = bregman(x, y_dual) + bregman(y, z_dual) - bregman(x, z_dual);
  const double rhs = (z_dual - y_dual).dot(x - y);
  return lhs - rhs;
}

Vec MirrorMap::resolve_intermediate(const Vec& d, double eta_t) const {
  require_same_dim(d.size(), dimension(), "resolve_intermediate");
  if (!(eta_t > 0.0)) throw DomainError("resolve_intermediate: eta must be positive");
  return mirror_step(anchor_dual_ + eta_t * d);
}

std::string MirrorMap::describe() const {
  std::ostringstream os;
  os << (kind_ == MirrorKind::Entropy ? "entropy" : "sqnorm") << " on " << domain_.describe();
  return os.str();
}

}  // namespace oco
