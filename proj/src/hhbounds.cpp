#include "hhkit/hhbounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hhkit/format.hpp"
#include "hhkit/quadrature.hpp"

namespace hhkit::hhbounds {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"T1", "T2", "T3", "T4", "T5", "T6", "P1", "P2", "P3"};

// Scales the absolute target of an integral of f over iv to the size of f.
double gap_tolerance(const expr::FunctionSpec& f, const Interval& iv) {
  const double scale = std::max({1.0, std::fabs(f(iv.a())), std::fabs(f(iv.b())), std::fabs(f(iv.midpoint()))});
  return gap_quadrature_tolerance * scale * std::max(1.0, iv.length());
}

}  // namespace

std::string_view to_string(Check id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<Check> parse_check(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<Check>(i);
  }
  return std::nullopt;
}

bool needs_holder(Check id) { return id != Check::T1 && id != Check::T4; }
bool is_theorem(Check id) { return static_cast<int>(id) <= static_cast<int>(Check::T6); }

double signed_gap(const expr::FunctionSpec& f, const Interval& iv) {
  const double integral = quadrature::reference_integrate(f, iv, gap_tolerance(f, iv));
  return (f(iv.a()) + f(iv.b())) / 2.0 - integral / iv.length();
}

double hh_gap(const expr::FunctionSpec& f, const Interval& iv) { return std::fabs(signed_gap(f, iv)); }

ClassicalCheck classical_hh_check(const expr::FunctionSpec& f, const Interval& iv) {
  ClassicalCheck c;
  c.midpoint_value = f(iv.midpoint());
  c.mean_value = quadrature::reference_integrate(f, iv, gap_tolerance(f, iv)) / iv.length();
  c.endpoint_average = (f(iv.a()) + f(iv.b())) / 2.0;
  c.left_ok = c.midpoint_value <= c.mean_value + verification_tolerance;
  c.right_ok = c.mean_value <= c.endpoint_average + verification_tolerance;
  return c;
}

double theorem_bound(Check id, const expr::FunctionSpec& f, const Interval& iv,
                     const convexity::ConvexityParams& params,
                     const std::optional<kernels::HolderExponents>& holder) {
  if (!is_theorem(id)) throw InvalidArgument(std::string(to_string(id)) + " is not a gap bound");
  params.validate();
  if (params.m == 0.0) throw InvalidArgument("m = 0 leaves f'(b/m) undefined");
  if (needs_holder(id) && !holder) {
    throw InvalidArgument(std::string(to_string(id)) + " needs a Hoelder exponent p");
  }
  if (!f.domain().contains(iv)) {
    throw DomainError("interval " + hhkit::to_string(iv) + " is not inside the domain " +
                      hhkit::to_string(f.domain()) + " of '" + f.text() + "'");
  }
  const double b_over_m = iv.b() / params.m;
  if (!f.domain().contains(b_over_m)) {
    throw DomainError("b/m = " + format_g17(b_over_m) + " lies outside the domain " + hhkit::to_string(f.domain()) +
                      " of '" + f.text() + "'");
  }

  const double k = params.alpha_s();
  const kernels::KernelConstants kc = kernels::kernel_constants(k, params.m);
  const double d1 = std::fabs(f.derivative(iv.a()));
  const double d2 = std::fabs(f.derivative(b_over_m));
  const double width = iv.length();
  const double m = params.m;

  switch (id) {
    case Check::T1:
      return width / 2.0 * (kc.v1 * d1 + kc.v2 * d2);
    case Check::T4:
      return width / 2.0 * (kc.u1 * d1 + kc.u2 * d2);
    default:
      break;
  }

  const double p = holder->p;
  const double q = holder->q;
  const double d1q = std::pow(d1, q);
  const double d2q = std::pow(d2, q);
  const double averaged = std::pow((d1q + m * k * d2q) / (k + 1.0), 1.0 / q);
  switch (id) {
    case Check::T2:
      return width / (2.0 * std::pow(p + 1.0, 1.0 / p)) * averaged;
    case Check::T3:
      return width / std::pow(2.0, (p + 1.0) / p) * std::pow(kc.v1 * d1q + kc.v2 * d2q, 1.0 / q);
    case Check::T5:
      return width * std::pow(2.0 / ((p + 1.0) * (p + 2.0)), 1.0 / p) * averaged;
    case Check::T6:
      return width / std::pow(3.0, 1.0 / p) * std::pow(kc.u1 * d1q + kc.u2 * d2q, 1.0 / q);
    default:
      break;
  }
  throw InvalidArgument("unknown bound");
}

convexity::CertificationReport certify_hypothesis(Check id, const expr::FunctionSpec& f, const Interval& iv,
                                                  const convexity::ConvexityParams& params,
                                                  const std::optional<kernels::HolderExponents>& holder,
                                                  const VerifyOptions& options) {
  if (params.sense != convexity::Sense::first) {
    throw InvalidArgument("gap bounds are stated for first-sense s-(alpha, m)-convexity");
  }
  const ScalarFunction g =
      needs_holder(id) ? f.abs_derivative_power_function(holder.value().q) : f.abs_derivative_function();
  return convexity::certify_scale_free(g, iv, params, options.certify_grid, options.certify_tolerance);
}

BoundReport verify_theorem(Check id, const expr::FunctionSpec& f, const Interval& iv,
                           const convexity::ConvexityParams& params,
                           const std::optional<kernels::HolderExponents>& holder, const VerifyOptions& options) {
  BoundReport report;
  report.check = id;
  report.inputs = {f.text(), iv, params, holder};
  report.rhs_bound = theorem_bound(id, f, iv, params, holder);
  report.lhs_gap = hh_gap(f, iv);
  report.margin = report.rhs_bound - report.lhs_gap;
  report.holds = report.margin >= -verification_tolerance;
  const auto cert = certify_hypothesis(id, f, iv, params, holder, options);
  report.hypothesis_certified = cert.verdict == convexity::Verdict::not_falsified;
  return report;
}

double kernel_form_single(const expr::FunctionSpec& f, const Interval& iv) {
  const double a = iv.a();
  const double b = iv.b();
  const ScalarFunction integrand{
      [&](double t) { return (1.0 - 2.0 * t) * f.derivative(std::clamp(t * a + (1.0 - t) * b, a, b)); },
      Interval(0.0, 1.0), "gap kernel"};
  const double scale = std::max(1.0, std::max(std::fabs(f.derivative(a)), std::fabs(f.derivative(b))));
  return iv.length() / 2.0 * quadrature::reference_integrate(integrand, Interval(0.0, 1.0), 1e-13 * scale);
}

double kernel_form_double(const expr::FunctionSpec& f, const Interval& iv) {
  const double a = iv.a();
  const double b = iv.b();
  auto fprime = [&](double t) { return f.derivative(std::clamp(t * a + (1.0 - t) * b, a, b)); };
  const double scale = std::max(1.0, std::max(std::fabs(f.derivative(a)), std::fabs(f.derivative(b))));
  const double tol = 1e-11 * scale;

  bool inner_ok = true;
  auto outer = [&](double u) {
    const double fu = fprime(u);
    const auto est = quadrature::gauss_kronrod([&](double t) { return (fprime(t) - fu) * (u - t); }, 0.0, 1.0,
                                               0.1 * tol);
    inner_ok = inner_ok && est.converged;
    return est.value;
  };
  const auto est = quadrature::gauss_kronrod(outer, 0.0, 1.0, 0.5 * tol);
  if (!est.converged || !inner_ok) throw ConvergenceError("double kernel integral did not converge");
  return iv.length() / 2.0 * est.value;
}

}  // namespace hhkit::hhbounds
