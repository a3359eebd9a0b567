#include "hhkit/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hhkit/format.hpp"

namespace hhkit::convexity {

void ConvexityParams::validate() const {
  if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in (0, 1], got " + format_g17(s));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in [0, 1], got " + format_g17(alpha));
  if (!(m >= 0.0 && m <= 1.0)) throw InvalidArgument("m must lie in [0, 1], got " + format_g17(m));
}

double generalized_combination_rhs(const ConvexityParams& params, double f_at_x, double f_at_y_over_m, double mu) {
  params.validate();
  if (std::isnan(f_at_x) || std::isnan(f_at_y_over_m) || std::isnan(mu)) {
    throw InvalidArgument("NaN passed to generalized_combination_rhs");
  }
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("mu must lie in [0, 1]");

  const double weight_x = std::pow(mu, params.alpha_s());
  if (params.m == 0.0) return weight_x * f_at_x;
  const double weight_y = params.sense == Sense::first ? 1.0 - weight_x
                                                       : std::pow(1.0 - std::pow(mu, params.alpha), params.s);
  return weight_x * f_at_x + params.m * weight_y * f_at_y_over_m;
}

namespace {

std::vector<double> lattice(double lo, double hi, std::size_t n) {
  std::vector<double> pts(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pts[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  pts[n - 1] = hi;
  return pts;
}

struct Prepared {
  std::vector<double> xs;
  std::vector<double> mus;
  std::vector<double> f_x;
  std::vector<double> f_y_over_m;
};

Prepared prepare(const ScalarFunction& f, const Interval& interval, const ConvexityParams& params,
                 std::size_t grid_n) {
  params.validate();
  if (grid_n < 2) throw InvalidArgument("certification grid needs at least 2 points per axis");
  if (!f.domain.contains(interval)) {
    throw DomainError("interval " + to_string(interval) + " is not inside the domain " + to_string(f.domain) +
                      " of '" + f.label + "'");
  }
  Prepared p;
  p.xs = lattice(interval.a(), interval.b(), grid_n);
  p.mus = lattice(0.0, 1.0, grid_n);
  p.f_x.reserve(grid_n);
  for (double x : p.xs) p.f_x.push_back(f(x));
  p.f_y_over_m.assign(grid_n, 0.0);
  if (params.m > 0.0) {
    for (std::size_t j = 0; j < grid_n; ++j) {
      const double y_over_m = p.xs[j] / params.m;
      if (!f.domain.contains(y_over_m)) {
        throw DomainError("y/m = " + format_g17(y_over_m) + " lies outside the domain " + to_string(f.domain) +
                          " of '" + f.label + "'");
      }
      p.f_y_over_m[j] = params.m == 1.0 ? p.f_x[j] : f(y_over_m);
    }
  }
  return p;
}

CertificationReport run(const ScalarFunction& f, const Prepared& p, const ConvexityParams& params,
                        double tolerance, double scale) {
  if (!(tolerance >= 0.0)) throw InvalidArgument("tolerance must be non-negative");
  const std::size_t n = p.xs.size();

  // Weights depend on mu only.
  std::vector<double> weight_x(n);
  std::vector<double> weight_y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double mu = p.mus[k];
    weight_x[k] = std::pow(mu, params.alpha_s());
    weight_y[k] = params.sense == Sense::first ? 1.0 - weight_x[k]
                                               : std::pow(1.0 - std::pow(mu, params.alpha), params.s);
  }

  CertificationReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = p.xs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double y = p.xs[j];
      const double lo = std::min(x, y);
      const double hi = std::max(x, y);
      for (std::size_t k = 0; k < n; ++k) {
        const double mu = p.mus[k];
        const double arg = std::clamp(mu * x + (1.0 - mu) * y, lo, hi);
        const double lhs = f(arg) / scale;
        double rhs = weight_x[k] * p.f_x[i] / scale;
        if (params.m > 0.0) rhs += params.m * weight_y[k] * p.f_y_over_m[j] / scale;
        const double margin = rhs - lhs;
        ++report.samples_checked;
        if (margin < report.worst_margin) {
          report.worst_margin = margin;
          report.worst_sample = {x, y, mu, lhs, rhs};
        }
      }
    }
  }
  if (report.worst_margin < -tolerance) {
    report.verdict = Verdict::falsified;
    report.counterexample = report.worst_sample;
  }
  return report;
}

}  // namespace

CertificationReport certify(const ScalarFunction& f, const Interval& interval, const ConvexityParams& params,
                            std::size_t grid_n, double tolerance) {
  const Prepared p = prepare(f, interval, params, grid_n);
  return run(f, p, params, tolerance, 1.0);
}

CertificationReport certify(const expr::FunctionSpec& f, const Interval& interval, const ConvexityParams& params,
                            std::size_t grid_n, double tolerance) {
  return certify(f.value_function(), interval, params, grid_n, tolerance);
}

CertificationReport certify_scale_free(const ScalarFunction& f, const Interval& interval,
                                       const ConvexityParams& params, std::size_t grid_n, double tolerance) {
  const Prepared p = prepare(f, interval, params, grid_n);
  double scale = 0.0;
  for (double v : p.f_x) scale = std::max(scale, std::fabs(v));
  for (double v : p.f_y_over_m) scale = std::max(scale, std::fabs(v));
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
  return run(f, p, params, tolerance, scale);
}

}  // namespace hhkit::convexity
