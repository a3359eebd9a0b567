#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "hhkit/convexity.hpp"
#include "hhkit/corpus.hpp"
#include "hhkit/error.hpp"
#include "hhkit/kernels.hpp"
#include "hhkit/quadrature.hpp"

using namespace hhkit;
using quadrature::BoundVariant;
using quadrature::Partition;

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({0.0}), InvalidArgument);
  CHECK_THROWS_AS(Partition({0.0, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(Partition({1.0, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(Partition::uniform(Interval(0, 1), 0), InvalidArgument);
  const auto u = Partition::uniform(Interval(0, 3), 7);
  CHECK(u.panels() == 7);
  CHECK(u.points().front() == 0.0);
  CHECK(u.points().back() == 3.0);
}

TEST_CASE("trapezoid sum examples") {
  const Interval unit(0, 1);
  CHECK(quadrature::trapezoid_sum(expr::FunctionSpec("x", unit), Partition({0, 1})) == 0.5);
  CHECK(quadrature::trapezoid_sum(expr::FunctionSpec("x^2", unit), Partition({0, 0.5, 1})) == 0.375);
  CHECK(quadrature::trapezoid_sum(expr::FunctionSpec("x^2", unit), Partition({0, 1})) == 0.5);
}

TEST_CASE("error bound examples") {
  const expr::FunctionSpec sq("x^2", Interval(0, 1));
  const Partition two({0, 0.5, 1});
  CHECK(quadrature::trapezoid_error_bound(BoundVariant::P4, sq, two, 1, 2) ==
        doctest::Approx(0.25 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(quadrature::trapezoid_error_bound(BoundVariant::P4, sq, Partition({0, 1}), 1, 2) ==
        doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(quadrature::trapezoid_error_bound(BoundVariant::P5, sq, two, 1, 2) ==
        doctest::Approx(std::sqrt(2.0 / 9.0) * 0.5).epsilon(1e-14));
}

TEST_CASE("s-convex weight at s = 1 is v1(1)") {
  CHECK(quadrature::s_convex_weight(1.0) == kernels::abs_weight(1.0));
  CHECK(quadrature::s_convex_weight(1.0) == 0.25);
}

TEST_CASE("reference integrator examples") {
  CHECK(std::fabs(quadrature::reference_integrate(expr::FunctionSpec("x^2", Interval(0, 1)), Interval(0, 1), 1e-12) -
                  1.0 / 3.0) <= 1e-12);
  CHECK(std::fabs(quadrature::reference_integrate(expr::FunctionSpec("exp(x)", Interval(0, 1)), Interval(0, 1),
                                                  1e-12) -
                  (std::numbers::e - 1)) <= 1e-12);
  const double kink[] = {0.0};
  CHECK(std::fabs(quadrature::reference_integrate(expr::FunctionSpec("abs(x)", Interval(-1, 1)), Interval(-1, 1),
                                                  1e-10, kink) -
                  1.0) <= 1e-10);
}

TEST_CASE("reference integrator reports failure") {
  quadrature::AdaptiveOptions tight;
  tight.max_intervals = 3;
  const auto est = quadrature::gauss_kronrod([](double x) { return std::sin(200 * x); }, 0, 10, 1e-14, {}, tight);
  CHECK_FALSE(est.converged);
  const ScalarFunction wild{[](double x) { return std::sin(1e6 * x); }, Interval(0, 1), "wild"};
  CHECK_THROWS_AS(quadrature::reference_integrate(wild, Interval(0, 1), 1e-12), ConvergenceError);
}

TEST_CASE("reference integrator agrees with antiderivatives") {
  testing::Gen gen(41);
  for (int i = 0; i < 50; ++i) {
    const double c = gen.uniform(-3, 3);
    const double a = gen.uniform(-2, 1);
    const double b = a + gen.uniform(0.01, 3);
    const ScalarFunction f{[c](double x) { return std::exp(c * x); }, Interval(a, b), "exp"};
    const double exact = (std::exp(c * b) - std::exp(c * a)) / c;
    CHECK(std::fabs(quadrature::reference_integrate(f, Interval(a, b), 1e-12 * std::max(1.0, std::fabs(exact))) -
                    exact) <= 1e-11 * std::max(1.0, std::fabs(exact)));
  }
}

TEST_CASE("error bounds hold on the corpus") {
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      if (convexity::certify_scale_free(f.abs_derivative_function(), iv, {}).verdict !=
          convexity::Verdict::not_falsified) {
        continue;
      }
      const double exact = quadrature::reference_integrate(f, iv, 1e-13);
      for (const std::size_t n : {1u, 2u, 4u, 8u, 16u, 64u}) {
        const auto d = Partition::uniform(iv, n);
        const double actual = std::fabs(exact - quadrature::trapezoid_sum(f, d));
        for (const double p : corpus::holder_ps()) {
          CAPTURE(text);
          CHECK(quadrature::trapezoid_error_bound(BoundVariant::P4, f, d, 1, p) - actual >= -1e-9);
          CHECK(quadrature::trapezoid_error_bound(BoundVariant::P5, f, d, 1, p) - actual >= -1e-9);
        }
      }
    }
  }
}

TEST_CASE("bounds shrink under refinement") {
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      for (const auto variant : {BoundVariant::P4, BoundVariant::P5}) {
        double prev = quadrature::trapezoid_error_bound(variant, f, Partition::uniform(iv, 1), 1, 2);
        for (std::size_t n = 2; n <= 256; n *= 2) {
          const double cur = quadrature::trapezoid_error_bound(variant, f, Partition::uniform(iv, n), 1, 2);
          CHECK(cur <= prev);
          prev = cur;
        }
      }
    }
  }
}

TEST_CASE("guarantee examples") {
  const auto sq = quadrature::integrate_with_guarantee(expr::FunctionSpec("x^2", Interval(0, 1)), Interval(0, 1),
                                                       0.05);
  CHECK(sq.n == 8);
  CHECK(sq.hypothesis_certified);
  CHECK(sq.bound_p4 == doctest::Approx(std::sqrt(0.5) / 16).epsilon(1e-12));

  const auto lin = quadrature::integrate_with_guarantee(expr::FunctionSpec("x", Interval(0, 3)), Interval(0, 3), 1e-6);
  CHECK(lin.n == 3181981);
  CHECK(lin.best_bound() <= 1e-6);

  const expr::FunctionSpec ex("exp(x)", Interval(0, 1));
  const auto r = quadrature::integrate_with_guarantee(ex, Interval(0, 1), 1e-3);
  CHECK(r.hypothesis_certified);
  CHECK(std::fabs(r.value - (std::numbers::e - 1)) <= 1e-3);
}

TEST_CASE("guarantee picks the smallest n") {
  testing::Gen gen(42);
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    const double tol = std::pow(10.0, gen.uniform(-4, -1));
    const Interval iv(0, 2);
    const auto r = quadrature::integrate_with_guarantee(f, iv, tol);
    CHECK(r.best_bound() <= tol);
    if (r.n > 1) {
      const auto d = Partition::uniform(iv, r.n - 1);
      const double c = std::min(quadrature::trapezoid_error_bound(BoundVariant::P4, f, d, 1, 2),
                                quadrature::trapezoid_error_bound(BoundVariant::P5, f, d, 1, 2));
      CHECK(c > tol);
    }
    const double exact = quadrature::reference_integrate(f, iv, tol / 100);
    CHECK(std::fabs(r.value - exact) <= tol);
  }
}

TEST_CASE("guarantee cap") {
  quadrature::GuaranteeOptions small;
  small.max_panels = 64;
  CHECK_THROWS_AS(quadrature::integrate_with_guarantee(expr::FunctionSpec("x^2", Interval(0, 1)), Interval(0, 1),
                                                       1e-9, 1, 2, small),
                  ConvergenceError);
}
