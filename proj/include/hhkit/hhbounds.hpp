#pragma once

/**
 * @file hhbounds.hpp
 * @brief The trapezoid gap |(f(a)+f(b))/2 - (1/(b-a)) int_a^b f| and its six
 *        upper bounds in terms of d1 = |f'(a)| and d2 = |f'(b/m)|.
 *
 * With k = alpha*s, (v1, v2, u1, u2) from kernels and a Hoelder pair (p, q):
 *
 *     T1  (b-a)/2 * (v1 d1 + v2 d2)
 *     T2  (b-a) / (2 (p+1)^{1/p}) * ((d1^q + m k d2^q) / (k+1))^{1/q}
 *     T3  (b-a) / 2^{(p+1)/p} * (v1 d1^q + v2 d2^q)^{1/q}
 *     T4  (b-a)/2 * (u1 d1 + u2 d2)
 *     T5  (b-a) * (2/((p+1)(p+2)))^{1/p} * ((d1^q + m k d2^q) / (k+1))^{1/q}
 *     T6  (b-a) / 3^{1/p} * (u1 d1^q + u2 d2^q)^{1/q}
 *
 * T1 and T4 assume |f'| is s-(alpha, m)-convex on [a, b]; the others assume
 * |f'|^q is. `verify_theorem` samples that hypothesis before comparing.
 */

#include <optional>
#include <string>
#include <string_view>

#include "hhkit/convexity.hpp"
#include "hhkit/expr.hpp"
#include "hhkit/interval.hpp"
#include "hhkit/kernels.hpp"

namespace hhkit::hhbounds {

/// T1..T6 bound the trapezoid gap; P1..P3 are the special-mean inequalities
/// checked in `means`.
enum class Check { T1, T2, T3, T4, T5, T6, P1, P2, P3 };

std::string_view to_string(Check id);
std::optional<Check> parse_check(std::string_view text);
bool needs_holder(Check id);
bool is_theorem(Check id);

inline constexpr double verification_tolerance = 1e-9;
/// Accuracy requested from the reference integrator for gap evaluation.
inline constexpr double gap_quadrature_tolerance = 1e-12;

struct BoundInputs {
  std::string function;
  Interval interval{0.0, 1.0};
  convexity::ConvexityParams params;
  std::optional<kernels::HolderExponents> holder;
};

struct BoundReport {
  Check check = Check::T1;
  double lhs_gap = 0.0;
  double rhs_bound = 0.0;
  double margin = 0.0;  ///< rhs_bound - lhs_gap
  bool holds = false;   ///< margin >= -verification_tolerance
  bool hypothesis_certified = false;
  BoundInputs inputs;
};

/// (f(a)+f(b))/2 - (1/(b-a)) int_a^b f.
double signed_gap(const expr::FunctionSpec& f, const Interval& iv);
double hh_gap(const expr::FunctionSpec& f, const Interval& iv);

struct ClassicalCheck {
  bool left_ok = false;   ///< f((a+b)/2) <= mean value
  bool right_ok = false;  ///< mean value <= (f(a)+f(b))/2
  double midpoint_value = 0.0;
  double mean_value = 0.0;
  double endpoint_average = 0.0;
};

/// Classical two-sided inequality for convex f, with tolerance 1e-9.
ClassicalCheck classical_hh_check(const expr::FunctionSpec& f, const Interval& iv);

/// Right-hand side of the chosen theorem. Requires m > 0, b/m inside f's
/// domain, and `holder` for T2, T3, T5 and T6.
double theorem_bound(Check id, const expr::FunctionSpec& f, const Interval& iv,
                     const convexity::ConvexityParams& params,
                     const std::optional<kernels::HolderExponents>& holder = std::nullopt);

struct VerifyOptions {
  std::size_t certify_grid = convexity::default_grid;
  double certify_tolerance = convexity::default_tolerance;
};

/// Certifies the hypothesis (first sense only), then compares gap and bound.
BoundReport verify_theorem(Check id, const expr::FunctionSpec& f, const Interval& iv,
                           const convexity::ConvexityParams& params,
                           const std::optional<kernels::HolderExponents>& holder = std::nullopt,
                           const VerifyOptions& options = {});

/// Hypothesis test alone: |f'| (T1, T4) or |f'|^q (others) on [a, b], scale-free.
convexity::CertificationReport certify_hypothesis(Check id, const expr::FunctionSpec& f, const Interval& iv,
                                                  const convexity::ConvexityParams& params,
                                                  const std::optional<kernels::HolderExponents>& holder,
                                                  const VerifyOptions& options = {});

/// (b-a)/2 * int_0^1 (1-2t) f'(ta + (1-t)b) dt, by quadrature. Equals signed_gap.
double kernel_form_single(const expr::FunctionSpec& f, const Interval& iv);

/// (b-a)/2 * int int (f'(ta+(1-t)b) - f'(ua+(1-u)b)) (u-t) dt du, by iterated
/// quadrature. Equals signed_gap.
double kernel_form_double(const expr::FunctionSpec& f, const Interval& iv);

}  // namespace hhkit::hhbounds
