#pragma once

#include <cstdint>
#include <string>

#include "oco/core_math.hpp"

namespace oco {

enum class SetKind { Ball, Box, Simplex };

/// A closed convex feasible set C with exact Euclidean projection.
///
/// All three kinds have closed-form projections, so projected iterates carry
/// no solver noise. Diameters are analytic.
class FeasibleSet {
 public:
  static FeasibleSet ball(Vec center, double radius);
  static FeasibleSet box(Vec lower, Vec upper);
  static FeasibleSet simplex(int dimension);

  SetKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(a_.size()); }

  /// Diameter in the set's native norm: 2r for the ball, ||upper - lower||_2
  /// for the box, 2 (in l1) for the simplex.
  double diameter() const;
  /// Diameter measured in the primal norm of `norm`.
  double diameter_in(NormKind norm) const;
  /// sup over C of ||x||_2.
  double max_euclidean_norm() const;

  /// Euclidean projection P_C(p).
  Vec project(const Vec& p) const;
  /// True iff the Euclidean distance from p to C is at most tol.
  bool contains(const Vec& p, double tol = kDefaultTol) const;
  /// Deterministic point of C for a given seed.
  Vec sample(std::uint64_t seed) const;
  /// Ball/box center, simplex barycenter.
  Vec center() const;

  const Vec& ball_center() const { return a_; }
  double ball_radius() const { return radius_; }
  const Vec& box_lower() const { return a_; }
  const Vec& box_upper() const { return b_; }

  std::string describe() const;

 private:
  FeasibleSet(SetKind kind, Vec a, Vec b, double radius)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), radius_(radius) {}

  SetKind kind_;
  Vec a_;  // ball center / box lower / simplex: zeros
  Vec b_;  // box upper
  double radius_ = 0.0;
};

/// Sort-then-threshold Euclidean projection onto the probability simplex.
/// Ties in the sort are broken by index.
Vec project_simplex(const Vec& p);

}  // namespace oco
