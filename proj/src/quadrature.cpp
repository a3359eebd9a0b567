#include "hhkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "hhkit/convexity.hpp"
#include "hhkit/format.hpp"

namespace hhkit::quadrature {

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidArgument("a partition needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw InvalidArgument("partition points must be finite");
    if (i > 0 && !(points_[i - 1] < points_[i])) throw InvalidArgument("partition points must be strictly increasing");
  }
}

Partition Partition::uniform(const Interval& iv, std::size_t panels) {
  if (panels == 0) throw InvalidArgument("a partition needs at least one panel");
  std::vector<double> pts(panels + 1);
  const double width = iv.length();
  for (std::size_t k = 0; k < panels; ++k) {
    pts[k] = iv.a() + width * (static_cast<double>(k) / static_cast<double>(panels));
  }
  pts[panels] = iv.b();
  return Partition(std::move(pts));
}

namespace {

void require_inside(const expr::FunctionSpec& f, const Interval& iv) {
  if (!f.domain().contains(iv)) {
    throw DomainError("interval " + to_string(iv) + " is not inside the domain " + to_string(f.domain()) + " of '" +
                      f.text() + "'");
  }
}

void require_bound_params(double s, double p) {
  if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in (0, 1]");
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must be finite and > 1");
}

// sum_k (x_{k+1} - x_k)^2 / 2 * (|f'(x_k)| + |f'(x_{k+1})|)
double panel_derivative_sum(const expr::FunctionSpec& f, std::span<const double> pts) {
  double sum = 0.0;
  double left = std::fabs(f.derivative(pts[0]));
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double right = std::fabs(f.derivative(pts[k + 1]));
    const double h = pts[k + 1] - pts[k];
    sum += h * h / 2.0 * (left + right);
    left = right;
  }
  return sum;
}

}  // namespace

double trapezoid_sum(const expr::FunctionSpec& f, const Partition& d) {
  require_inside(f, d.interval());
  const auto pts = d.points();
  double sum = 0.0;
  double left = f(pts[0]);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double right = f(pts[k + 1]);
    sum += (left + right) / 2.0 * (pts[k + 1] - pts[k]);
    left = right;
  }
  return sum;
}

double s_convex_weight(double s) {
  const double two_s = std::pow(2.0, s);
  return (s * two_s + 1.0) / (two_s * (s + 1.0) * (s + 2.0));
}

double bound_constant(BoundVariant variant, double s, double p) {
  require_bound_params(s, p);
  const double q = p / (p - 1.0);
  switch (variant) {
    case BoundVariant::P4:
      return 1.0 / std::pow(2.0, 1.0 / p) * std::pow(s_convex_weight(s), 1.0 / q);
    case BoundVariant::P5:
      return std::pow(2.0 / 3.0, 1.0 / p) *
             std::pow((s * s + 3.0 * s + 4.0) / ((s + 1.0) * (s + 2.0) * (s + 3.0)), 1.0 / q);
  }
  throw InvalidArgument("unknown bound variant");
}

double trapezoid_error_bound(BoundVariant variant, const expr::FunctionSpec& f, const Partition& d, double s,
                             double p) {
  const double c = bound_constant(variant, s, p);
  require_inside(f, d.interval());
  return c * panel_derivative_sum(f, d.points());
}

QuadratureResult integrate_with_guarantee(const expr::FunctionSpec& f, const Interval& iv, double tol, double s,
                                          double p, const GuaranteeOptions& options) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  require_inside(f, iv);
  const double c4 = bound_constant(BoundVariant::P4, s, p);
  const double c5 = bound_constant(BoundVariant::P5, s, p);
  const double c_min = std::min(c4, c5);

  auto bound_at = [&](std::size_t n) {
    return c_min * panel_derivative_sum(f, Partition::uniform(iv, n).points());
  };

  std::size_t hi = 1;
  while (bound_at(hi) > tol) {
    if (hi >= options.max_panels) {
      throw ConvergenceError("no uniform partition with at most " + std::to_string(options.max_panels) +
                             " panels meets tolerance " + format_g17(tol));
    }
    hi = std::min(hi * 2, options.max_panels);
  }
  // Invariant: bound(hi) <= tol, bound(lo) > tol.
  std::size_t lo = hi / 2;
  if (lo >= 1) {
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (bound_at(mid) <= tol) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }

  const Partition d = Partition::uniform(iv, hi);
  const double panel_sum = panel_derivative_sum(f, d.points());
  QuadratureResult result;
  result.value = trapezoid_sum(f, d);
  result.bound_p4 = c4 * panel_sum;
  result.bound_p5 = c5 * panel_sum;
  result.n = hi;
  result.certified_tolerance = tol;
  try {
    const convexity::ConvexityParams params{s, 1.0, 1.0, convexity::Sense::first};
    const auto report = convexity::certify_scale_free(f.abs_derivative_function(), iv, params,
                                                      options.certify_grid, options.certify_tolerance);
    result.hypothesis_certified = report.verdict == convexity::Verdict::not_falsified;
  } catch (const Error&) {
    result.hypothesis_certified = false;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod

namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the odd
// entries and the centre are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

Segment gk15(const std::function<double(double)>& fn, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = fn(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = fn(centre - dx) + fn(centre + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double value = kronrod * half;
  if (!std::isfinite(value)) throw DomainError("integrand is not finite on [" + format_g17(a) + ", " + format_g17(b) + "]");
  return {a, b, value, std::fabs((kronrod - gauss) * half)};
}

}  // namespace

Estimate gauss_kronrod(const std::function<double(double)>& fn, double a, double b, double tol,
                       std::span<const double> breakpoints, const AdaptiveOptions& options) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integration needs finite a < b");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");

  std::vector<double> edges{a};
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  Estimate est;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    heap.push(gk15(fn, edges[i], edges[i + 1]));
    est.evaluations += 15;
  }

  auto totals = [&heap] {
    auto copy = heap;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  double value = 0.0;
  double error = 0.0;
  std::tie(value, error) = totals();

  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool stuck = false;
  while (true) {
    const double target = std::max(tol, 50.0 * eps * std::fabs(value));
    if (error <= target) break;
    if (heap.size() >= options.max_intervals) break;
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a < 8.0 * eps * std::max({1.0, std::fabs(worst.a), std::fabs(worst.b)})) {
      stuck = true;
      break;
    }
    heap.pop();
    const Segment left = gk15(fn, worst.a, mid);
    const Segment right = gk15(fn, mid, worst.b);
    est.evaluations += 30;
    heap.push(left);
    heap.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    if (heap.size() % 64 == 0) std::tie(value, error) = totals();
  }
  std::tie(value, error) = totals();

  est.value = value;
  est.error = error;
  est.intervals = heap.size();
  est.converged = !stuck && error <= std::max(tol, 50.0 * eps * std::fabs(value));
  return est;
}

double reference_integrate(const ScalarFunction& f, const Interval& iv, double tol,
                           std::span<const double> breakpoints) {
  if (!f.domain.contains(iv)) {
    throw DomainError("interval " + to_string(iv) + " is not inside the domain " + to_string(f.domain) + " of '" +
                      f.label + "'");
  }
  const Estimate est = gauss_kronrod(f.eval, iv.a(), iv.b(), tol, breakpoints);
  if (!est.converged) {
    throw ConvergenceError("reference integration of '" + f.label + "' over " + to_string(iv) +
                           " did not converge: error estimate " + format_g17(est.error) + " > " + format_g17(tol));
  }
  return est.value;
}

double reference_integrate(const expr::FunctionSpec& f, const Interval& iv, double tol,
                           std::span<const double> breakpoints) {
  return reference_integrate(f.value_function(), iv, tol, breakpoints);
}

}  // namespace hhkit::quadrature
