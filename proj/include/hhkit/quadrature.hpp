#pragma once

/**
 * @file quadrature.hpp
 * @brief Composite trapezoidal rule with a-priori error bounds, a search for
 *        the smallest uniform partition meeting a tolerance, and the adaptive
 *        Gauss-Kronrod integrator used as ground truth throughout the library.
 *
 * The two error bounds share the shape
 *
 *     |R(f, D)| <= C(s, p) * sum_k (x_{k+1} - x_k)^2 / 2 * (|f'(x_k)| + |f'(x_{k+1})|)
 *
 * and differ only in the constant:
 *
 *     P4: C = 2^{-1/p} * ((s 2^s + 1) / (2^s (s+1)(s+2)))^{1/q}
 *     P5: C = (2/3)^{1/p} * ((s^2 + 3s + 4) / ((s+1)(s+2)(s+3)))^{1/q}
 *
 * with q = p / (p - 1). Both hold when |f'| is s-convex on [a, b].
 */

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hhkit/expr.hpp"
#include "hhkit/function.hpp"
#include "hhkit/interval.hpp"

namespace hhkit::quadrature {

/// Strictly increasing points a = x_0 < x_1 < ... < x_n = b, n >= 1.
class Partition {
 public:
  explicit Partition(std::vector<double> points);
  static Partition uniform(const Interval& iv, std::size_t panels);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t panels() const noexcept { return points_.size() - 1; }
  Interval interval() const { return {points_.front(), points_.back()}; }

 private:
  std::vector<double> points_;
};

enum class BoundVariant { P4, P5 };

struct QuadratureResult {
  double value = 0.0;  ///< trapezoid sum S(f, D)
  double bound_p4 = 0.0;
  double bound_p5 = 0.0;
  std::size_t n = 0;  ///< panels of the uniform partition used
  double certified_tolerance = 0.0;
  /// Whether sampling failed to falsify s-convexity of |f'| on [a, b]. When
  /// false the bounds were still computed but carry no guarantee.
  bool hypothesis_certified = false;

  double best_bound() const noexcept { return bound_p4 < bound_p5 ? bound_p4 : bound_p5; }
};

double trapezoid_sum(const expr::FunctionSpec& f, const Partition& d);

/// Constant C(s, p) of the chosen bound. s in (0, 1], p > 1.
double bound_constant(BoundVariant variant, double s, double p);

/// The s-convex weight (s 2^s + 1) / (2^s (s+1)(s+2)).
double s_convex_weight(double s);

double trapezoid_error_bound(BoundVariant variant, const expr::FunctionSpec& f, const Partition& d, double s,
                             double p);

struct GuaranteeOptions {
  std::size_t max_panels = std::size_t{1} << 24;
  std::size_t certify_grid = 50;
  double certify_tolerance = 1e-9;
};

/// Smallest uniform n whose min(P4, P5) bound is <= tol, found by doubling
/// then bisecting. Throws ConvergenceError past `max_panels`.
QuadratureResult integrate_with_guarantee(const expr::FunctionSpec& f, const Interval& iv, double tol,
                                          double s = 1.0, double p = 2.0, const GuaranteeOptions& options = {});

// ---------------------------------------------------------------------------
// Reference integrator

struct Estimate {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  std::size_t max_intervals = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of `fn` over [a, b].
/// `breakpoints` strictly inside (a, b) start the subdivision, so kinks there
/// are never straddled. Never throws on non-convergence; inspect `converged`.
Estimate gauss_kronrod(const std::function<double(double)>& fn, double a, double b, double tol,
                       std::span<const double> breakpoints = {}, const AdaptiveOptions& options = {});

/// Integral of f over iv to absolute accuracy `tol` (or the roundoff floor of
/// the result, if that is larger). Throws ConvergenceError otherwise.
double reference_integrate(const ScalarFunction& f, const Interval& iv, double tol,
                           std::span<const double> breakpoints = {});
double reference_integrate(const expr::FunctionSpec& f, const Interval& iv, double tol,
                           std::span<const double> breakpoints = {});

}  // namespace hhkit::quadrature
