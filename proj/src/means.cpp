#include "hhkit/means.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

#include "hhkit/error.hpp"
#include "hhkit/format.hpp"

namespace hhkit::means {

namespace {

constexpr double kDiagonal = 1e-12;

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("means need finite positive arguments, got a = " + format_g17(a) + ", b = " + format_g17(b));
  }
}

struct Ordered {
  double lo;
  double hi;
  double r;  // (hi - lo) / lo
  bool diagonal;
};

Ordered order(double a, double b) {
  require_positive(a, b);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  return {lo, hi, (hi - lo) / lo, hi - lo < kDiagonal * lo};
}

}  // namespace

double arithmetic(double a, double b) {
  require_positive(a, b);
  return (a + b) / 2.0;
}

double geometric(double a, double b) {
  require_positive(a, b);
  const double product = a * b;
  if (std::isfinite(product) && product >= std::numeric_limits<double>::min()) return std::sqrt(product);
  return std::sqrt(a) * std::sqrt(b);
}

double harmonic(double a, double b) {
  require_positive(a, b);
  return 2.0 * a * b / (a + b);
}

double logarithmic(double a, double b) {
  const Ordered o = order(a, b);
  if (o.diagonal) return o.lo;
  return o.lo * o.r / std::log1p(o.r);
}

double identric(double a, double b) {
  const Ordered o = order(a, b);
  if (o.diagonal) return o.lo;
  // log I = log lo + (1 + r) log1p(r) / r - 1
  return o.lo * std::exp((1.0 + o.r) * std::log1p(o.r) / o.r - 1.0);
}

double p_logarithmic(double a, double b, double p) {
  if (!std::isfinite(p)) throw InvalidArgument("p must be finite");
  if (p == 0.0) throw InvalidArgument("L_p is undefined at p = 0; use the identric mean");
  if (p == -1.0) throw InvalidArgument("L_p is undefined at p = -1; use the logarithmic mean");
  const Ordered o = order(a, b);
  if (o.diagonal) return o.lo;
  // (hi^{p+1} - lo^{p+1}) / ((p+1)(hi-lo)) = lo^p * expm1((p+1) log1p r) / ((p+1) r)
  const double ratio = std::expm1((p + 1.0) * std::log1p(o.r)) / ((p + 1.0) * o.r);
  return o.lo * std::pow(ratio, 1.0 / p);
}

double p_logarithmic_extended(double a, double b, double p) {
  if (p == 0.0) return identric(a, b);
  if (p == -1.0) return logarithmic(a, b);
  return p_logarithmic(a, b, p);
}

double mean(const MeanRequest& req) {
  switch (req.kind) {
    case MeanKind::arithmetic: return arithmetic(req.a, req.b);
    case MeanKind::geometric: return geometric(req.a, req.b);
    case MeanKind::harmonic: return harmonic(req.a, req.b);
    case MeanKind::logarithmic: return logarithmic(req.a, req.b);
    case MeanKind::identric: return identric(req.a, req.b);
    case MeanKind::p_logarithmic:
      if (!req.p) throw InvalidArgument("p-logarithmic mean needs p");
      return p_logarithmic(req.a, req.b, *req.p);
  }
  throw InvalidArgument("unknown mean kind");
}

ChainReport mean_chain(double a, double b) {
  ChainReport c;
  c.h = harmonic(a, b);
  c.g = geometric(a, b);
  c.l = logarithmic(a, b);
  c.i = identric(a, b);
  c.a = arithmetic(a, b);
  const double members[] = {c.h, c.g, c.l, c.i, c.a};
  c.worst_step = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < std::size(members); ++k) {
    const double step = (members[k + 1] - members[k]) / std::max(1.0, std::fabs(members[k + 1]));
    c.worst_step = std::min(c.worst_step, step);
  }
  c.holds = c.worst_step >= -chain_tolerance;
  return c;
}

bool mean_chain_check(double a, double b) { return mean_chain(a, b).holds; }

hhbounds::BoundReport proposition_check(hhbounds::Check id, double a, double b,
                                        const kernels::HolderExponents& holder, std::optional<int> n) {
  require_positive(a, b);
  if (!(a < b)) throw InvalidArgument("propositions need 0 < a < b");
  const double p = holder.p;
  const double q = holder.q;

  hhbounds::BoundReport r;
  r.check = id;
  r.inputs.interval = Interval(a, b);
  r.inputs.holder = holder;
  r.hypothesis_certified = true;

  switch (id) {
    case hhbounds::Check::P1:
      r.inputs.function = "exp(x)";
      r.lhs_gap = std::fabs(arithmetic(a, b) - logarithmic(a, b));
      r.rhs_bound = (std::log(b) - std::log(a)) / (2.0 * std::pow(p + 1.0, 1.0 / p)) *
                    std::pow(arithmetic(std::pow(a, q), std::pow(b, q)), 1.0 / q);
      break;
    case hhbounds::Check::P2:
      r.inputs.function = "-log(1-x)";
      r.lhs_gap = std::log(identric(a, b) / geometric(a, b));
      r.rhs_bound = (b - a) / 2.0 * std::pow(harmonic(std::pow(a, q), std::pow(b, q)), -1.0 / q);
      break;
    case hhbounds::Check::P3: {
      if (!n || std::abs(*n) < 2) throw InvalidArgument("P3 needs an integer n with |n| >= 2");
      const double nn = *n;
      r.inputs.function = "(1-x)^" + std::to_string(*n);
      r.lhs_gap = std::fabs(arithmetic(std::pow(a, nn), std::pow(b, nn)) - std::pow(p_logarithmic(a, b, nn), nn));
      r.rhs_bound = std::pow(std::fabs(nn), q) * (b - a) / 3.0 *
                    arithmetic(std::pow(a, q * (nn - 1.0)), std::pow(b, q * (nn - 1.0)));
      break;
    }
    default:
      throw InvalidArgument(std::string(hhbounds::to_string(id)) + " is not a special-mean inequality");
  }
  r.margin = r.rhs_bound - r.lhs_gap;
  r.holds = r.margin >= -hhbounds::verification_tolerance;
  return r;
}

}  // namespace hhkit::means
