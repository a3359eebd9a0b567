#pragma once

/**
 * @file convexity.hpp
 * @brief s-(alpha, m)-convexity classes and sampling-based falsification.
 *
 * f is s-(alpha, m)-convex when, for all x, y in the interval and mu in [0, 1],
 *
 *     f(mu x + (1 - mu) y) <= mu^{alpha s} f(x) + m (1 - mu^{alpha s}) f(y / m)    (first sense)
 *     f(mu x + (1 - mu) y) <= mu^{alpha s} f(x) + m (1 - mu^alpha)^s   f(y / m)    (second sense)
 *
 * With m = 0 the second term is taken to be 0. The argument on the left has
 * no factor m, matching the class definitions these bounds are proved for.
 *
 * `certify` can only refute membership. A `not_falsified` verdict means no
 * sampled triple violated the inequality by more than the tolerance.
 */

#include <cstddef>
#include <optional>

#include "hhkit/expr.hpp"
#include "hhkit/function.hpp"
#include "hhkit/interval.hpp"

namespace hhkit::convexity {

enum class Sense { first, second };

struct ConvexityParams {
  double s = 1.0;
  double alpha = 1.0;
  double m = 1.0;
  Sense sense = Sense::first;

  /// Throws InvalidArgument unless 0 < s <= 1, 0 <= alpha <= 1, 0 <= m <= 1.
  void validate() const;
  double alpha_s() const noexcept { return alpha * s; }
};

inline constexpr double default_tolerance = 1e-9;
inline constexpr std::size_t default_grid = 50;

/// Right-hand side of the class inequality for given f(x), f(y/m) and mu.
double generalized_combination_rhs(const ConvexityParams& params, double f_at_x, double f_at_y_over_m, double mu);

struct Sample {
  double x = 0.0;
  double y = 0.0;
  double mu = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;

  double margin() const noexcept { return rhs - lhs; }
};

enum class Verdict { not_falsified, falsified };

struct CertificationReport {
  std::size_t samples_checked = 0;
  double worst_margin = 0.0;  ///< min over samples of rhs - lhs
  Sample worst_sample;
  std::optional<Sample> counterexample;  ///< the worst sample, when it violates
  Verdict verdict = Verdict::not_falsified;
};

/// Samples a grid_n^3 lattice of (x, y, mu) with x, y uniform over `interval`
/// (endpoints included) and mu uniform over [0, 1]. The reported counterexample
/// is the sample with the smallest margin; ties go to the lexicographically
/// first (x, y, mu) index.
///
/// Throws DomainError if `interval` leaves f's domain or, for m < 1, some y/m does.
CertificationReport certify(const ScalarFunction& f, const Interval& interval, const ConvexityParams& params,
                            std::size_t grid_n = default_grid, double tolerance = default_tolerance);

CertificationReport certify(const expr::FunctionSpec& f, const Interval& interval, const ConvexityParams& params,
                            std::size_t grid_n = default_grid, double tolerance = default_tolerance);

/// `certify` applied to f / max|f| (max over the x-lattice and the y/m
/// points). Class membership is unchanged by positive scaling, so this turns
/// the absolute tolerance into a relative one. Margins are in scaled units.
CertificationReport certify_scale_free(const ScalarFunction& f, const Interval& interval,
                                       const ConvexityParams& params, std::size_t grid_n = default_grid,
                                       double tolerance = default_tolerance);

}  // namespace hhkit::convexity
