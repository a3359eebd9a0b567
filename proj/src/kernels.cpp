#include "hhkit/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hhkit/error.hpp"
#include "hhkit/format.hpp"
#include "hhkit/quadrature.hpp"

namespace hhkit::kernels {

namespace {

void require_alpha_s(double alpha_s) {
  if (!(alpha_s > 0.0 && alpha_s <= 1.0)) {
    throw InvalidArgument("alpha*s must lie in (0, 1], got " + format_g17(alpha_s));
  }
}

}  // namespace

double abs_weight(double alpha_s) {
  require_alpha_s(alpha_s);
  const double k = alpha_s;
  const double two_k = std::pow(2.0, k);
  return (1.0 + two_k * k) / (two_k * (k + 1.0) * (k + 2.0));
}

double pair_weight(double alpha_s) {
  require_alpha_s(alpha_s);
  const double k = alpha_s;
  return (k * k + 3.0 * k + 4.0) / (2.0 * (k + 1.0) * (k + 2.0) * (k + 3.0));
}

KernelConstants kernel_constants(double alpha_s, double m) {
  require_alpha_s(alpha_s);
  if (!(m >= 0.0 && m <= 1.0)) throw InvalidArgument("m must lie in [0, 1], got " + format_g17(m));
  KernelConstants k;
  k.alpha_s = alpha_s;
  k.m = m;
  k.v1 = abs_weight(alpha_s);
  k.v2 = m * (0.5 - k.v1);
  k.u1 = pair_weight(alpha_s);
  k.u2 = m * (1.0 / 3.0 - k.u1);
  return k;
}

HolderExponents HolderExponents::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("Hoelder exponent p must be finite and > 1");
  return {p, p / (p - 1.0)};
}

HolderConstants holder_constants(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("p must be finite and > 0");
  return {1.0 / (1.0 + p), 2.0 / ((p + 1.0) * (p + 2.0))};
}

bool IdentityReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityResidual& r) { return r.passed; });
}

double IdentityReport::max_residual(int dimension) const {
  double worst = 0.0;
  for (const auto& r : identities) {
    if (r.dimension == dimension) worst = std::max(worst, r.residual);
  }
  return worst;
}

namespace {

struct Numeric {
  double value;
  bool converged;
};

// int_0^1 w(t) dt, split at t = 1/2.
template <class W>
Numeric single(W w, double tol) {
  const std::array<double, 1> kink{0.5};
  const auto est = quadrature::gauss_kronrod(w, 0.0, 1.0, tol, kink);
  return {est.value, est.converged};
}

// int_0^1 weight(t) * (int_0^1 g(u, t) du) dt, inner split at u = t.
template <class Weight, class G>
Numeric iterated(Weight weight, G g, double tol) {
  bool inner_ok = true;
  const double inner_tol = 0.1 * tol;
  auto outer = [&](double t) {
    const std::array<double, 1> kink{t};
    const auto est = quadrature::gauss_kronrod([&](double u) { return g(u, t); }, 0.0, 1.0, inner_tol, kink);
    inner_ok = inner_ok && est.converged;
    return weight(t) * est.value;
  };
  const auto est = quadrature::gauss_kronrod(outer, 0.0, 1.0, 0.5 * tol);
  return {est.value, est.converged && inner_ok};
}

}  // namespace

IdentityReport verify_kernel_identities(double alpha_s, double p, double tol) {
  require_alpha_s(alpha_s);
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const HolderConstants hc = holder_constants(p);
  const double k = alpha_s;
  const double v1 = abs_weight(k);
  const double u1 = pair_weight(k);

  const double t_tol = 0.1 * tol;
  auto power_k = [k](double t) { return std::pow(t, k); };
  auto abs_diff = [](double u, double t) { return std::fabs(u - t); };

  IdentityReport report;
  report.alpha_s = alpha_s;
  report.p = p;
  report.tolerance = tol;
  auto add = [&](std::string name, int dim, Numeric numeric, double closed) {
    IdentityResidual r;
    r.name = std::move(name);
    r.dimension = dim;
    r.numeric = numeric.value;
    r.closed_form = closed;
    r.residual = std::fabs(numeric.value - closed);
    r.converged = numeric.converged;
    r.passed = numeric.converged && r.residual <= tol;
    report.identities.push_back(std::move(r));
  };

  add("int t^k |1-2t| dt = v1", 1, single([&](double t) { return power_k(t) * std::fabs(1.0 - 2.0 * t); }, t_tol),
      v1);
  add("int (1-t^k) |1-2t| dt = 1/2 - v1", 1,
      single([&](double t) { return (1.0 - power_k(t)) * std::fabs(1.0 - 2.0 * t); }, t_tol), 0.5 - v1);
  add("int |1-2t|^p dt = 1/(1+p)", 1, single([p](double t) { return std::pow(std::fabs(1.0 - 2.0 * t), p); }, t_tol),
      hc.c1);
  add("intint t^k |u-t| = u1", 2, iterated(power_k, abs_diff, tol), u1);
  add("intint (1-t^k) |u-t| = 1/3 - u1", 2, iterated([&](double t) { return 1.0 - power_k(t); }, abs_diff, tol),
      1.0 / 3.0 - u1);
  add("intint |u-t|^p = 2/((p+1)(p+2))", 2,
      iterated([](double) { return 1.0; }, [p](double u, double t) { return std::pow(std::fabs(u - t), p); }, tol),
      hc.c2);
  add("intint |u-t| = 1/3", 2, iterated([](double) { return 1.0; }, abs_diff, tol), 1.0 / 3.0);
  return report;
}

}  // namespace hhkit::kernels
