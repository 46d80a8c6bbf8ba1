#include "oco/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace oco {

FeasibleSet FeasibleSet::ball(Vec center, double radius) {
  if (center.size() == 0) throw DimensionError("ball: empty center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("ball: radius must be positive");
  const Eigen::Index n = center.size();
  return FeasibleSet(SetKind::Ball, std::move(center), Vec::Zero(n), radius);
}

FeasibleSet FeasibleSet::box(Vec lower, Vec upper) {
  require_same_dim(lower.size(), upper.size(), "box");
  if (lower.size() == 0) throw DimensionError("box: empty bounds");
  if (((upper - lower).array() <= 0.0).any()) throw DomainError("box: lower must be < upper");
  return FeasibleSet(SetKind::Box, std::move(lower), std::move(upper), 0.0);
}

FeasibleSet FeasibleSet::simplex(int dimension) {
  if (dimension < 1) throw DimensionError("simplex: dimension must be positive");
  return FeasibleSet(SetKind::Simplex, Vec::Zero(dimension), Vec::Zero(dimension), 0.0);
}

double FeasibleSet::diameter() const {
  switch (kind_) {
    case SetKind::Ball: return 2.0 * radius_;
    case SetKind::Box: return (b_ - a_).norm();
    case SetKind::Simplex: return dimension() > 1 ? 2.0 : 0.0;
  }
  return 0.0;
}

double FeasibleSet::diameter_in(NormKind norm) const {
  if (norm == NormKind::L2L2) {
    if (kind_ == SetKind::Simplex) return dimension() > 1 ? std::sqrt(2.0) : 0.0;
    return diameter();
  }
  switch (kind_) {
    case SetKind::Ball: return 2.0 * radius_ * std::sqrt(static_cast<double>(dimension()));
    case SetKind::Box: return (b_ - a_).lpNorm<1>();
    case SetKind::Simplex: return diameter();
  }
  return 0.0;
}

double FeasibleSet::max_euclidean_norm() const {
  switch (kind_) {
    case SetKind::Ball: return a_.norm() + radius_;
    case SetKind::Box: return a_.cwiseAbs().cwiseMax(b_.cwiseAbs()).norm();
    case SetKind::Simplex: return 1.0;
  }
  return 0.0;
}

Vec project_simplex(const Vec& p) {
  const Eigen::Index n = p.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return p[i] > p[j]; });
  double cumulative = 0.0;
  double threshold = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += p[order[static_cast<std::size_t>(k)]];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (p[order[static_cast<std::size_t>(k)]] - candidate > 0.0) threshold = candidate;
  }
  return (p.array() - threshold).max(0.0);
}

Vec FeasibleSet::project(const Vec& p) const {
  require_same_dim(p.size(), a_.size(), "project");
  switch (kind_) {
    case SetKind::Ball: {
      const Vec offset = p - a_;
      const double r = offset.norm();
      if (r <= radius_) return p;
      return a_ + offset * (radius_ / r);
    }
    case SetKind::Box: return p.cwiseMax(a_).cwiseMin(b_);
    case SetKind::Simplex: return project_simplex(p);
  }
  return p;
}

bool FeasibleSet::contains(const Vec& p, double tol) const {
  if (p.size() != a_.size()) return false;
  if (!p.allFinite()) return false;
  return (p - project(p)).norm() <= tol;
}

Vec FeasibleSet::center() const {
  switch (kind_) {
    case SetKind::Ball: return a_;
    case SetKind::Box: return 0.5 * (a_ + b_);
    case SetKind::Simplex: return Vec::Constant(dimension(), 1.0 / dimension());
  }
  return a_;
}

Vec FeasibleSet::sample(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const int n = dimension();
  Vec x(n);
  switch (kind_) {
    case SetKind::Ball: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int i = 0; i < n; ++i) x[i] = gauss(rng);
      double norm = x.norm();
      while (norm == 0.0) {
        for (int i = 0; i < n; ++i) x[i] = gauss(rng);
        norm = x.norm();
      }
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double scale = radius_ * std::pow(unif(rng), 1.0 / n);
      return a_ + x * (scale / norm);
    }
    case SetKind::Box: {
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      for (int i = 0; i < n; ++i) x[i] = a_[i] + (b_[i] - a_[i]) * unif(rng);
      return x;
    }
    case SetKind::Simplex: {
      std::exponential_distribution<double> expo(1.0);
      for (int i = 0; i < n; ++i) x[i] = expo(rng);
      return x / x.sum();
    }
  }
  return x;
}

std::string FeasibleSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SetKind::Ball: os << "ball(dim=" << dimension() << ", r=" << radius_ << ")"; break;
    case SetKind::Box: os << "box(dim=" << dimension() << ")"; break;
    case SetKind::Simplex: os << "simplex(dim=" << dimension() << ")"; break;
  }
  return os.str();
}

}  // namespace oco
