#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oco/feasible_set.hpp"

namespace oco {

/// A single-valued selection of a monotone operator M: C -> E*.
class MonotoneOperator {
 public:
  enum class Kind { Affine, Custom };

  /// M(x) = Q x + b, the gradient of x^T Q x / 2 + <b, x>; Q symmetric PSD.
  static MonotoneOperator gradient_quadratic(Mat q, Vec b);
  /// M(x) = A x with A + A^T PSD.
  static MonotoneOperator linear(Mat a);
  /// M(x) = A x + b with A + A^T PSD. Conservative iff A is symmetric.
  static MonotoneOperator affine(Mat a, Vec b);
  /// The planar rotation field A = [[0, 1], [-1, 0]].
  static MonotoneOperator skew_demo();
  /// M(x) = x.^3 + s * S x with S block-skew: monotone, and non-conservative
  /// for s != 0.
  static MonotoneOperator cubic_skew(int dimension, double s);
  static MonotoneOperator custom(int dimension, std::function<Vec(const Vec&)> field,
                                 std::function<double(const Vec&)> potential = {},
                                 std::string name = "custom");

  int dimension() const { return dimension_; }
  Kind kind() const { return kind_; }
  Vec evaluate(const Vec& x) const;
  bool has_potential() const { return static_cast<bool>(potential_); }
  /// Potential phi with grad phi = M, when known.
  std::optional<double> potential(const Vec& x) const;
  const Mat& matrix() const { return a_; }
  const Vec& offset() const { return b_; }
  std::string describe() const { return name_; }

  /// min over sampled pairs of <M x - M y, x - y>.
  double sampled_monotonicity(const FeasibleSet& set, int pairs, std::uint64_t seed) const;

 private:
  MonotoneOperator() = default;
  int dimension_ = 0;
  Kind kind_ = Kind::Affine;
  Mat a_;
  Vec b_;
  std::function<Vec(const Vec&)> field_;
  std::function<double(const Vec&)> potential_;
  std::string name_;
};

struct SegmentIntegral {
  double value = 0.0;  // composite trapezoid
  double lower = 0.0;  // left Riemann sum
  double upper = 0.0;  // right Riemann sum
};

inline constexpr int kDefaultQuadrature = 1024;

/// int_0^1 <M(x + t(y - x)), y - x> dt with k subintervals. The integrand is
/// non-decreasing in t, so the left/right sums bracket the integral.
SegmentIntegral segment_integral(const MonotoneOperator& m, const Vec& x, const Vec& y,
                                 int k = kDefaultQuadrature);

/// Vertices z = alpha_0, alpha_1, ..., alpha_{n+1} = x.
struct PolylinePath {
  std::vector<Vec> vertices;
  bool closed(double tol = 0.0) const;
  int segments() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

SegmentIntegral path_integral(const MonotoneOperator& m, const PolylinePath& path,
                              int k = kDefaultQuadrature);

/// Sum of segment integrals around a closed polyline. Throws for open paths.
double loop_integral(const MonotoneOperator& m, const PolylinePath& loop,
                     int k = kDefaultQuadrature);

/// sum_i <M(p_i), p_{i+1} - p_i> around the cycle in the given order.
double cycle_sum(const MonotoneOperator& m, const std::vector<Vec>& points);

/// Largest cycle sum over both traversal orientations; <= 0 for cyclically
/// monotone operators.
double cyclic_monotonicity_check(const MonotoneOperator& m, const std::vector<Vec>& points);

struct RegretEstimate {
  int n = 0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int budget_used = 0;
  PolylinePath path;
};

struct RegretSearch {
  int budget = 4000;  // path evaluations per level
  int restarts = 3;
  int quadrature = kDefaultQuadrature;
  double min_step = 1e-4;
};

/// Upper estimate of the infimum of the path integral from z to x over
/// polylines with n intermediate vertices in `set`. The (n-1) optimum with a
/// duplicated vertex is always a candidate, so the result never exceeds the
/// (n-1) estimate.
RegretEstimate regret_n_estimate(const MonotoneOperator& m, const Vec& z, const Vec& x, int n,
                                 const FeasibleSet& set, std::uint64_t seed,
                                 const RegretSearch& search = {});

struct MetaDecomposition {
  double lhs = 0.0;        // trapezoid value of z -> x(j) -> x_bar
  double lhs_upper = 0.0;  // right Riemann sums of the same path
  double rhs = 0.0;        // <l, w - 1_j> + <M(x(j)), x(j) - z>
  Vec x_bar;
};

MetaDecomposition meta_decomposition_check(const MonotoneOperator& m,
                                           const std::vector<Vec>& experts, const Vec& weights,
                                           int j, const Vec& z, int k = kDefaultQuadrature);

}  // namespace oco
