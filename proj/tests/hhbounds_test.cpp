#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "generators.hpp"
#include "hhkit/corpus.hpp"
#include "hhkit/error.hpp"
#include "hhkit/hhbounds.hpp"

using namespace hhkit;
using hhbounds::Check;

namespace {

constexpr Check kTheorems[] = {Check::T1, Check::T2, Check::T3, Check::T4, Check::T5, Check::T6};

std::optional<kernels::HolderExponents> holder_for(Check id, double p) {
  if (!hhbounds::needs_holder(id)) return std::nullopt;
  return kernels::HolderExponents::from_p(p);
}

}  // namespace

TEST_CASE("gap examples") {
  const Interval unit(0, 1);
  CHECK(hhbounds::hh_gap(expr::FunctionSpec("x^2", unit), unit) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(hhbounds::hh_gap(expr::FunctionSpec("x", Interval(-4, 9)), Interval(-4, 9)) <= 1e-12);
  const double e = std::exp(1.0);
  CHECK(hhbounds::hh_gap(expr::FunctionSpec("exp(x)", unit), unit) ==
        doctest::Approx((1 + e) / 2 - (e - 1)).epsilon(1e-13));
}

TEST_CASE("classical check examples") {
  const auto sq = hhbounds::classical_hh_check(expr::FunctionSpec("x^2", Interval(0, 1)), Interval(0, 1));
  CHECK(sq.left_ok);
  CHECK(sq.right_ok);
  CHECK(sq.midpoint_value == 0.25);
  CHECK(sq.mean_value == doctest::Approx(1.0 / 3.0));
  CHECK(sq.endpoint_average == 0.5);
  const auto lin = hhbounds::classical_hh_check(expr::FunctionSpec("x", Interval(2, 5)), Interval(2, 5));
  CHECK((lin.left_ok && lin.right_ok));
  const auto ex = hhbounds::classical_hh_check(expr::FunctionSpec("exp(x)", Interval(0, 2)), Interval(0, 2));
  CHECK((ex.left_ok && ex.right_ok));
  const auto concave = hhbounds::classical_hh_check(expr::FunctionSpec("-(x^2)", Interval(0, 1)), Interval(0, 1));
  CHECK_FALSE(concave.left_ok);
}

TEST_CASE("theorem bound examples") {
  const expr::FunctionSpec sq("x^2", Interval(0, 1));
  const Interval unit(0, 1);
  CHECK(hhbounds::theorem_bound(Check::T1, sq, unit, {}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hhbounds::theorem_bound(Check::T4, sq, unit, {}) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const expr::FunctionSpec ex("exp(x)", unit);
  const double e2 = std::exp(2.0);
  CHECK(hhbounds::theorem_bound(Check::T2, ex, unit, {}, kernels::HolderExponents::from_p(2)) ==
        doctest::Approx(std::sqrt((1 + e2) / 2) / (2 * std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("theorem bound input errors") {
  const expr::FunctionSpec sq("x^2", Interval(0, 1));
  const Interval unit(0, 1);
  CHECK_THROWS_AS(hhbounds::theorem_bound(Check::T2, sq, unit, {}), InvalidArgument);
  CHECK_THROWS_AS(hhbounds::theorem_bound(Check::T1, sq, unit, {1, 1, 0, convexity::Sense::first}), InvalidArgument);
  CHECK_THROWS_AS(hhbounds::theorem_bound(Check::T1, sq, unit, {1, 1, 0.5, convexity::Sense::first}), DomainError);
  CHECK_THROWS_AS(hhbounds::theorem_bound(Check::P1, sq, unit, {}), InvalidArgument);
  CHECK_THROWS_AS(hhbounds::verify_theorem(Check::T1, sq, unit, {1, 1, 1, convexity::Sense::second}),
                  InvalidArgument);
}

TEST_CASE("verify examples") {
  const expr::FunctionSpec sq("x^2", Interval(0, 1));
  const Interval unit(0, 1);
  const auto t1 = hhbounds::verify_theorem(Check::T1, sq, unit, {});
  CHECK(t1.holds);
  CHECK(t1.hypothesis_certified);
  CHECK(t1.margin == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  const auto t4 = hhbounds::verify_theorem(Check::T4, sq, unit, {});
  CHECK(t4.holds);
  CHECK(std::fabs(t4.margin) <= 1e-12);
  const auto t6 = hhbounds::verify_theorem(Check::T6, expr::FunctionSpec("exp(x)", unit), unit, {},
                                           kernels::HolderExponents::from_p(2));
  CHECK(t6.holds);
}

TEST_CASE("check names round trip") {
  for (int i = 0; i < 9; ++i) {
    const auto id = static_cast<Check>(i);
    CHECK(hhbounds::parse_check(hhbounds::to_string(id)) == id);
  }
  CHECK_FALSE(hhbounds::parse_check("T7"));
}

TEST_CASE("bounds and gap scale with f") {
  testing::Gen gen(21);
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    const double c = gen.uniform(0.1, 10);
    const auto g = f.scaled(c);
    for (const auto& iv : corpus::theorem_intervals()) {
      CHECK(hhbounds::hh_gap(g, iv) == doctest::Approx(c * hhbounds::hh_gap(f, iv)).epsilon(1e-10));
      for (const Check id : kTheorems) {
        const auto hp = holder_for(id, gen.uniform(1.2, 4));
        const double base = hhbounds::theorem_bound(id, f, iv, {}, hp);
        CHECK(hhbounds::theorem_bound(id, g, iv, {}, hp) == doctest::Approx(c * base).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("kernel forms reproduce the gap on the corpus") {
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      CAPTURE(text);
      const double gap = hhbounds::signed_gap(f, iv);
      CHECK(std::fabs(hhbounds::kernel_form_single(f, iv) - gap) <= 1e-8);
      CHECK(std::fabs(hhbounds::kernel_form_double(f, iv) - gap) <= 1e-6);
    }
  }
}

TEST_CASE("certified bounds are sound on random convex polynomials") {
  // Nonnegative coefficients keep |f'| and |f'|^q convex on [0, 3] at (1, 1, 1).
  testing::Gen gen(22);
  for (int i = 0; i < 40; ++i) {
    char text[160];
    std::snprintf(text, sizeof text, "%.3f + %.3f*x + %.3f*x^2 + %.3f*x^3 + %.3f*exp(x)", gen.uniform(-2, 2),
                  gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(0, 1), gen.uniform(0, 1));
    const expr::FunctionSpec f(text, Interval(0, 3));
    const double a = gen.uniform(0, 2.5);
    const Interval iv(a, gen.uniform(a + 0.05, 3));
    for (const Check id : kTheorems) {
      const auto r = hhbounds::verify_theorem(id, f, iv, {}, holder_for(id, gen.uniform(1.1, 5)));
      CAPTURE(text);
      CAPTURE(hhbounds::to_string(id));
      if (r.hypothesis_certified) CHECK(r.margin >= -hhbounds::verification_tolerance);
    }
  }
}
