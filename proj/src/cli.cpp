#include "hhkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "hhkit/corpus.hpp"
#include "hhkit/expr.hpp"
#include "hhkit/format.hpp"
#include "hhkit/kernels.hpp"
#include "hhkit/means.hpp"
#include "hhkit/quadrature.hpp"

namespace hhkit::cli {

using report::ReportRecord;
namespace verdict = report::verdict;

namespace {

double parse_decimal(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw InvalidArgument("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

template <class F>
ReportRecord timed(F&& make) {
  const auto start = std::chrono::steady_clock::now();
  ReportRecord rec = make();
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

const std::string& require_function(const Command& cmd) {
  if (!cmd.function) throw InvalidArgument(cmd.subcommand + " needs --function");
  return *cmd.function;
}

const Interval& require_interval(const Command& cmd) {
  if (!cmd.interval) throw InvalidArgument(cmd.subcommand + " needs --interval a:b");
  return *cmd.interval;
}

Interval default_domain(const Command& cmd) {
  if (cmd.domain) return *cmd.domain;
  const Interval& iv = require_interval(cmd);
  if (cmd.params.m > 0.0 && cmd.params.m < 1.0) return {iv.a(), std::max(iv.b(), iv.b() / cmd.params.m)};
  return iv;
}

std::vector<hhbounds::Check> requested_theorems(const Command& cmd) {
  if (cmd.theorem) {
    if (!hhbounds::is_theorem(*cmd.theorem)) throw InvalidArgument("--theorem must be one of T1..T6");
    return {*cmd.theorem};
  }
  using hhbounds::Check;
  return {Check::T1, Check::T2, Check::T3, Check::T4, Check::T5, Check::T6};
}

std::optional<kernels::HolderExponents> holder_for(hhbounds::Check id, const Command& cmd) {
  if (!hhbounds::needs_holder(id)) return std::nullopt;
  return kernels::HolderExponents::from_p(cmd.p.value_or(2.0));
}

std::vector<ReportRecord> run_certify(const Command& cmd) {
  const expr::FunctionSpec f(require_function(cmd), default_domain(cmd));
  const Interval iv = require_interval(cmd);
  return {timed([&] {
    const auto r = convexity::certify(f, iv, cmd.params, cmd.grid, cmd.tol);
    return report::from_certification(r, f.text(), iv, cmd.params, cmd.grid, cmd.tol);
  })};
}

std::vector<ReportRecord> run_bound(const Command& cmd) {
  const expr::FunctionSpec f(require_function(cmd), default_domain(cmd));
  const Interval iv = require_interval(cmd);
  std::vector<ReportRecord> out;
  for (const auto id : requested_theorems(cmd)) {
    out.push_back(timed([&] {
      hhbounds::BoundReport r;
      r.check = id;
      r.inputs = {f.text(), iv, cmd.params, holder_for(id, cmd)};
      r.rhs_bound = hhbounds::theorem_bound(id, f, iv, cmd.params, r.inputs.holder);
      r.lhs_gap = hhbounds::hh_gap(f, iv);
      r.margin = r.rhs_bound - r.lhs_gap;
      r.holds = r.margin >= -hhbounds::verification_tolerance;
      r.hypothesis_certified = true;
      ReportRecord rec = report::from_bound(r);
      rec.inputs.pop_back();  // no hypothesis check was made
      // Without a hypothesis check a negative margin refutes nothing.
      if (!r.holds) rec.verdict = verdict::unverified;
      return rec;
    }));
  }
  return out;
}

std::vector<ReportRecord> run_verify(const Command& cmd) {
  const expr::FunctionSpec f(require_function(cmd), default_domain(cmd));
  const Interval iv = require_interval(cmd);
  const hhbounds::VerifyOptions options{cmd.grid, convexity::default_tolerance};
  std::vector<ReportRecord> out;
  for (const auto id : requested_theorems(cmd)) {
    out.push_back(timed([&] {
      return report::from_bound(hhbounds::verify_theorem(id, f, iv, cmd.params, holder_for(id, cmd), options));
    }));
  }
  return out;
}

std::vector<ReportRecord> run_integrate(const Command& cmd) {
  const expr::FunctionSpec f(require_function(cmd), default_domain(cmd));
  const Interval iv = require_interval(cmd);
  const double s = cmd.params.s;
  const double p = cmd.p.value_or(2.0);
  quadrature::GuaranteeOptions options;
  options.certify_grid = cmd.grid;
  return {timed([&] {
    const auto r = quadrature::integrate_with_guarantee(f, iv, cmd.tol, s, p, options);
    return report::from_quadrature(r, f.text(), iv, s, p);
  })};
}

ReportRecord mean_record(const char* name, double a, double b, double value) {
  ReportRecord rec;
  rec.kind = std::string("mean:") + name;
  rec.add("a", a).add("b", b);
  rec.lhs = value;
  rec.rhs = value;
  rec.margin = 0.0;
  rec.verdict = verdict::ok;
  return rec;
}

ReportRecord chain_record(double a, double b) {
  const auto c = means::mean_chain(a, b);
  ReportRecord rec;
  rec.kind = "mean_chain";
  rec.add("a", a).add("b", b).add("H", c.h).add("G", c.g).add("L", c.l).add("I", c.i).add("A", c.a);
  rec.lhs = c.h;
  rec.rhs = c.a;
  rec.margin = c.worst_step;
  rec.verdict = c.holds ? verdict::holds : verdict::violation;
  return rec;
}

// P2 and P3 are checked as stated; a failure there is reported as a finding.
ReportRecord proposition_record(hhbounds::Check id, double a, double b, double p, std::optional<int> n) {
  ReportRecord rec = report::from_bound(means::proposition_check(id, a, b, kernels::HolderExponents::from_p(p), n));
  if (n) rec.add("n", static_cast<long long>(*n));
  if (id != hhbounds::Check::P1 && rec.verdict == verdict::violation) rec.verdict = verdict::finding;
  return rec;
}

std::vector<ReportRecord> run_means(const Command& cmd) {
  const Interval iv = require_interval(cmd);
  const double a = iv.a();
  const double b = iv.b();
  const double p = cmd.p.value_or(2.0);
  std::vector<ReportRecord> out;
  out.push_back(timed([&] { return mean_record("A", a, b, means::arithmetic(a, b)); }));
  out.push_back(timed([&] { return mean_record("G", a, b, means::geometric(a, b)); }));
  out.push_back(timed([&] { return mean_record("H", a, b, means::harmonic(a, b)); }));
  out.push_back(timed([&] { return mean_record("L", a, b, means::logarithmic(a, b)); }));
  out.push_back(timed([&] { return mean_record("I", a, b, means::identric(a, b)); }));
  out.push_back(timed([&] {
    ReportRecord rec = mean_record("L_p", a, b, means::p_logarithmic_extended(a, b, p));
    rec.add("p", p);
    return rec;
  }));
  out.push_back(timed([&] { return chain_record(a, b); }));
  using hhbounds::Check;
  out.push_back(timed([&] { return proposition_record(Check::P1, a, b, p, std::nullopt); }));
  out.push_back(timed([&] { return proposition_record(Check::P2, a, b, p, std::nullopt); }));
  out.push_back(timed([&] { return proposition_record(Check::P3, a, b, p, cmd.n); }));
  return out;
}

// ---------------------------------------------------------------------------
// Suite

constexpr double kIdentityTol1d = 1e-8;
constexpr double kIdentityTol2d = 1e-6;
constexpr double kAnchorTol = 1e-14;
constexpr double kKernelFormSingleTol = 1e-8;
constexpr double kKernelFormDoubleTol = 1e-6;
constexpr double kConsistencyTol = 1e-10;
constexpr std::size_t kTrapezoidPanels[] = {1, 2, 4, 8, 16, 64};
constexpr double kGuaranteeTols[] = {1e-2, 1e-4};

ReportRecord compare_record(std::string kind, double lhs, double rhs, double tol) {
  ReportRecord rec;
  rec.kind = std::move(kind);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.margin = tol - std::fabs(lhs - rhs);
  rec.verdict = rec.margin >= 0.0 ? verdict::holds : verdict::violation;
  rec.add("tolerance", tol);
  return rec;
}

void suite_kernels(std::vector<ReportRecord>& out) {
  const auto k1 = kernels::kernel_constants(1.0, 1.0);
  const auto h1 = kernels::holder_constants(1.0);
  out.push_back(timed([&] { return compare_record("kernel_anchor", k1.v1, 0.25, kAnchorTol).add("name", "v1(1)"); }));
  out.push_back(
      timed([&] { return compare_record("kernel_anchor", k1.u1, 1.0 / 6.0, kAnchorTol).add("name", "u1(1)"); }));
  out.push_back(timed([&] { return compare_record("kernel_anchor", h1.c1, 0.5, kAnchorTol).add("name", "c1(1)"); }));
  out.push_back(
      timed([&] { return compare_record("kernel_anchor", h1.c2, 1.0 / 3.0, kAnchorTol).add("name", "c2(1)"); }));

  for (const double k : corpus::alpha_s_grid()) {
    for (const double p : corpus::holder_ps()) {
      const auto start = std::chrono::steady_clock::now();
      const auto report = kernels::verify_kernel_identities(k, p, 1e-10);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() /
          static_cast<double>(report.identities.size());
      for (const auto& id : report.identities) {
        const double tol = id.dimension == 1 ? kIdentityTol1d : kIdentityTol2d;
        ReportRecord rec = compare_record("kernel_identity", id.numeric, id.closed_form, tol);
        rec.add("name", id.name).add("alpha_s", k).add("p", p).add("dimension", static_cast<long long>(id.dimension));
        rec.add("converged", id.converged);
        if (!id.converged) rec.verdict = verdict::violation;
        rec.elapsed_ms = ms;
        out.push_back(std::move(rec));
      }
    }
  }
}

void suite_gap_identities(std::vector<ReportRecord>& out) {
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      out.push_back(timed([&] {
        const auto c = hhbounds::classical_hh_check(f, iv);
        ReportRecord rec;
        rec.kind = "classical_hh";
        rec.add("function", text).add("a", iv.a()).add("b", iv.b()).add("midpoint_value", c.midpoint_value);
        rec.lhs = c.mean_value;
        rec.rhs = c.endpoint_average;
        rec.margin = std::min(c.mean_value - c.midpoint_value, c.endpoint_average - c.mean_value);
        rec.verdict = c.left_ok && c.right_ok ? verdict::holds : verdict::violation;
        return rec;
      }));
      const double gap = hhbounds::signed_gap(f, iv);
      out.push_back(timed([&] {
        return compare_record("kernel_form_single", hhbounds::kernel_form_single(f, iv), gap, kKernelFormSingleTol)
            .add("function", text)
            .add("a", iv.a())
            .add("b", iv.b());
      }));
      out.push_back(timed([&] {
        return compare_record("kernel_form_double", hhbounds::kernel_form_double(f, iv), gap, kKernelFormDoubleTol)
            .add("function", text)
            .add("a", iv.a())
            .add("b", iv.b());
      }));
    }
  }
}

void suite_theorems(std::vector<ReportRecord>& out) {
  using hhbounds::Check;
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      for (const auto& params : corpus::theorem_params()) {
        for (const Check id : {Check::T1, Check::T2, Check::T3, Check::T4, Check::T5, Check::T6}) {
          if (!hhbounds::needs_holder(id)) {
            out.push_back(timed([&] { return report::from_bound(hhbounds::verify_theorem(id, f, iv, params)); }));
            continue;
          }
          for (const double p : corpus::holder_ps()) {
            out.push_back(timed([&] {
              return report::from_bound(
                  hhbounds::verify_theorem(id, f, iv, params, kernels::HolderExponents::from_p(p)));
            }));
          }
        }
      }
    }
  }
}

void suite_means(std::vector<ReportRecord>& out, std::uint64_t seed, std::size_t pairs) {
  out.push_back(timed([&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 100.0);
    double worst = std::numeric_limits<double>::infinity();
    double worst_a = 0.0;
    double worst_b = 0.0;
    std::size_t checked = 0;
    while (checked < pairs) {
      double a = dist(rng);
      double b = dist(rng);
      if (a > b) std::swap(a, b);
      if (!(a > 0.0) || !(a < b)) continue;
      const auto c = means::mean_chain(a, b);
      if (c.worst_step < worst) {
        worst = c.worst_step;
        worst_a = a;
        worst_b = b;
      }
      ++checked;
    }
    ReportRecord rec;
    rec.kind = "mean_chain_random";
    rec.add("pairs", static_cast<long long>(pairs)).add("seed", static_cast<long long>(seed));
    rec.add("worst_a", worst_a).add("worst_b", worst_b);
    rec.lhs = worst;
    rec.rhs = -means::chain_tolerance;
    rec.margin = worst + means::chain_tolerance;
    rec.verdict = rec.margin >= 0.0 ? verdict::holds : verdict::violation;
    return rec;
  }));

  static constexpr double kPGrid[] = {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};
  for (const auto& pr : corpus::proposition_pairs()) {
    out.push_back(timed([&] {
      double worst = std::numeric_limits<double>::infinity();
      double prev = means::p_logarithmic_extended(pr.a, pr.b, kPGrid[0]);
      for (std::size_t i = 1; i < std::size(kPGrid); ++i) {
        const double cur = means::p_logarithmic_extended(pr.a, pr.b, kPGrid[i]);
        worst = std::min(worst, (cur - prev) / std::max(1.0, std::fabs(cur)));
        prev = cur;
      }
      ReportRecord rec;
      rec.kind = "lp_monotone";
      rec.add("a", pr.a).add("b", pr.b);
      rec.lhs = means::p_logarithmic_extended(pr.a, pr.b, kPGrid[0]);
      rec.rhs = prev;
      rec.margin = worst + means::chain_tolerance;
      rec.verdict = rec.margin >= 0.0 ? verdict::holds : verdict::violation;
      return rec;
    }));
    out.push_back(timed([&] {
      return compare_record("lp_branch", means::p_logarithmic(pr.a, pr.b, 1.0), means::arithmetic(pr.a, pr.b),
                            means::chain_tolerance)
          .add("a", pr.a)
          .add("b", pr.b)
          .add("p", 1.0);
    }));
    out.push_back(timed([&] {
      return compare_record("lp_branch", means::p_logarithmic_extended(pr.a, pr.b, 0.0), means::identric(pr.a, pr.b),
                            means::chain_tolerance)
          .add("a", pr.a)
          .add("b", pr.b)
          .add("p", 0.0);
    }));
    out.push_back(timed([&] {
      return compare_record("lp_branch", means::p_logarithmic_extended(pr.a, pr.b, -1.0),
                            means::logarithmic(pr.a, pr.b), means::chain_tolerance)
          .add("a", pr.a)
          .add("b", pr.b)
          .add("p", -1.0);
    }));
  }

  using hhbounds::Check;
  for (const auto& pr : corpus::proposition_pairs()) {
    for (const double p : corpus::holder_ps()) {
      out.push_back(timed([&] { return proposition_record(Check::P1, pr.a, pr.b, p, std::nullopt); }));
      out.push_back(timed([&] {
        const auto hp = kernels::HolderExponents::from_p(p);
        const auto p1 = means::proposition_check(Check::P1, pr.a, pr.b, hp);
        const Interval logs(std::log(pr.a), std::log(pr.b));
        const expr::FunctionSpec f("exp(x)", logs);
        const auto t2 = hhbounds::verify_theorem(Check::T2, f, logs, {1.0, 1.0, 1.0, convexity::Sense::first}, hp);
        ReportRecord rec;
        rec.kind = "P1_vs_T2";
        rec.add("a", pr.a).add("b", pr.b).add("p", p);
        rec.add("t2_lhs", t2.lhs_gap).add("t2_rhs", t2.rhs_bound);
        rec.lhs = p1.lhs_gap;
        rec.rhs = p1.rhs_bound;
        rec.margin =
            kConsistencyTol - std::max(std::fabs(p1.lhs_gap - t2.lhs_gap), std::fabs(p1.rhs_bound - t2.rhs_bound));
        rec.verdict = rec.margin >= 0.0 ? verdict::holds : verdict::violation;
        return rec;
      }));
    }
  }
  for (const auto& pr : corpus::proposition_pairs()) {
    for (const double p : corpus::holder_ps()) {
      out.push_back(timed([&] { return proposition_record(Check::P2, pr.a, pr.b, p, std::nullopt); }));
      for (const int n : {2, 3, -2}) {
        out.push_back(timed([&] { return proposition_record(Check::P3, pr.a, pr.b, p, n); }));
      }
    }
  }
}

void suite_quadrature(std::vector<ReportRecord>& out) {
  const convexity::ConvexityParams convex{1.0, 1.0, 1.0, convexity::Sense::first};
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      const auto cert = convexity::certify_scale_free(f.abs_derivative_function(), iv, convex);
      if (cert.verdict != convexity::Verdict::not_falsified) {
        ReportRecord rec;
        rec.kind = "trapezoid";
        rec.add("function", text).add("a", iv.a()).add("b", iv.b());
        rec.margin = cert.worst_margin;
        rec.verdict = verdict::skipped;
        rec.detail = "(|f'| convexity falsified)";
        out.push_back(std::move(rec));
        continue;
      }
      const double exact = quadrature::reference_integrate(f, iv, 1e-13 * std::max(1.0, std::fabs(f(iv.b()))));
      for (const std::size_t n : kTrapezoidPanels) {
        const auto d = quadrature::Partition::uniform(iv, n);
        const double actual = std::fabs(exact - quadrature::trapezoid_sum(f, d));
        for (const double p : corpus::holder_ps()) {
          for (const auto variant : {quadrature::BoundVariant::P4, quadrature::BoundVariant::P5}) {
            out.push_back(timed([&] {
              ReportRecord rec;
              rec.kind = variant == quadrature::BoundVariant::P4 ? "trapezoid_p4" : "trapezoid_p5";
              rec.add("function", text).add("a", iv.a()).add("b", iv.b());
              rec.add("n", static_cast<long long>(n)).add("s", 1.0).add("p", p);
              rec.lhs = actual;
              rec.rhs = quadrature::trapezoid_error_bound(variant, f, d, 1.0, p);
              rec.margin = rec.rhs - rec.lhs;
              rec.verdict = rec.margin >= -hhbounds::verification_tolerance ? verdict::holds : verdict::violation;
              return rec;
            }));
          }
        }
      }
      for (const double tol : kGuaranteeTols) {
        out.push_back(timed([&] {
          const auto r = quadrature::integrate_with_guarantee(f, iv, tol);
          ReportRecord rec;
          rec.kind = "guarantee";
          rec.add("function", text).add("a", iv.a()).add("b", iv.b()).add("tol", tol);
          rec.add("n", static_cast<long long>(r.n)).add("value", r.value).add("bound", r.best_bound());
          rec.lhs = std::fabs(r.value - exact);
          rec.rhs = tol;
          rec.margin = tol - rec.lhs;
          rec.verdict = rec.margin >= 0.0 && r.best_bound() <= tol ? verdict::holds : verdict::violation;
          return rec;
        }));
      }
    }
  }
}

}  // namespace

Interval parse_interval(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
    throw InvalidArgument("interval must look like a:b, got '" + std::string(text) + "'");
  }
  return {parse_decimal(text.substr(0, colon), "interval endpoint"),
          parse_decimal(text.substr(colon + 1), "interval endpoint")};
}

std::vector<ReportRecord> run_suite(std::uint64_t seed, std::size_t mean_pairs) {
  std::vector<ReportRecord> out;
  suite_kernels(out);
  suite_gap_identities(out);
  suite_theorems(out);
  suite_means(out, seed, mean_pairs);
  suite_quadrature(out);
  return out;
}

std::vector<ReportRecord> execute(const Command& cmd) {
  cmd.params.validate();
  if (!(cmd.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (cmd.grid < 2) throw InvalidArgument("--grid must be at least 2");
  if (cmd.subcommand == "certify") return run_certify(cmd);
  if (cmd.subcommand == "bound") return run_bound(cmd);
  if (cmd.subcommand == "verify") return run_verify(cmd);
  if (cmd.subcommand == "integrate") return run_integrate(cmd);
  if (cmd.subcommand == "means") return run_means(cmd);
  if (cmd.subcommand == "suite") return run_suite(cmd.seed, cmd.mean_pairs);
  throw InvalidArgument("unknown subcommand '" + cmd.subcommand + "'");
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
  std::vector<ReportRecord> records;
  try {
    records = execute(cmd);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  report::write(out, records, cmd.format);
  const bool failed =
      std::any_of(records.begin(), records.end(), [](const ReportRecord& r) { return report::is_failure(r.verdict); });
  return failed ? exit_failed_check : exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-Hadamard gap bounds, convexity certification and guaranteed trapezoid integration"};
  app.set_config("--config", "", "Read option defaults from a TOML/INI file (flags take precedence)");
  app.require_subcommand(1);

  Command cmd;
  std::string function;
  std::string interval;
  std::string domain;
  std::string theorem;
  std::string sense = "first";
  std::string format = "text";
  double p = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--function,-f", function, "Expression in x, e.g. \"x^2 + 3*x\"");
    sub->add_option("--interval,-i", interval, "Interval a:b (use --interval=-1:1 for negative a)");
    sub->add_option("--domain", domain, "Function domain lo:hi (default: the interval, stretched to b/m)");
    sub->add_option("--s", cmd.params.s, "s in (0, 1]")->capture_default_str();
    sub->add_option("--alpha", cmd.params.alpha, "alpha in [0, 1]")->capture_default_str();
    sub->add_option("--m", cmd.params.m, "m in [0, 1]")->capture_default_str();
    sub->add_option("--sense", sense, "Convexity sense")->check(CLI::IsMember({"first", "second"}))->capture_default_str();
    sub->add_option("--p", p, "Hoelder exponent p > 1 (default 2)");
    sub->add_option("--theorem,-t", theorem, "T1..T6 (default: all six)");
    sub->add_option("--tol", cmd.tol, "Tolerance")->envname("HHKIT_TOL")->capture_default_str();
    sub->add_option("--grid", cmd.grid, "Certification lattice points per axis")->capture_default_str();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--seed", cmd.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_option("--n", cmd.n, "Integer exponent for P3")->capture_default_str();
    sub->add_option("--pairs", cmd.mean_pairs, "Random pairs for the mean-chain check")->capture_default_str();
  };

  std::vector<CLI::App*> subs = {
      app.add_subcommand("certify", "Search for counterexamples to s-(alpha,m)-convexity of f"),
      app.add_subcommand("bound", "Evaluate gap and theorem bounds, without checking hypotheses"),
      app.add_subcommand("verify", "Certify hypotheses and check theorem bounds against the gap"),
      app.add_subcommand("integrate", "Trapezoid rule with an a-priori error guarantee"),
      app.add_subcommand("means", "Special means, their chain, and the special-mean inequalities"),
      app.add_subcommand("suite", "Run the built-in verification corpus"),
  };
  for (auto* sub : subs) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cmd.subcommand = chosen->get_name();
  cmd.params.sense = sense == "second" ? convexity::Sense::second : convexity::Sense::first;
  cmd.format = format == "json" ? report::Format::json : format == "csv" ? report::Format::csv : report::Format::text;
  try {
    if (!function.empty()) cmd.function = function;
    if (!interval.empty()) cmd.interval = parse_interval(interval);
    if (!domain.empty()) cmd.domain = parse_interval(domain);
    if (chosen->count("--p") > 0) cmd.p = p;
    if (!theorem.empty()) {
      cmd.theorem = hhbounds::parse_check(theorem);
      if (!cmd.theorem) throw InvalidArgument("unknown theorem '" + theorem + "'");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return dispatch(cmd, out, err);
}

}  // namespace hhkit::cli
