#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "hhkit/convexity.hpp"
#include "hhkit/corpus.hpp"
#include "hhkit/error.hpp"

using namespace hhkit;
using convexity::ConvexityParams;
using convexity::Sense;
using convexity::Verdict;

TEST_CASE("generalized_combination_rhs examples") {
  CHECK(convexity::generalized_combination_rhs({1, 1, 1, Sense::first}, 2.0, 4.0, 0.5) == 3.0);
  CHECK(convexity::generalized_combination_rhs({0.5, 1, 1, Sense::first}, 1.0, 0.0, 0.25) == doctest::Approx(0.5));
  testing::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const ConvexityParams p{gen.uniform(0.05, 1), gen.uniform(0, 1), gen.uniform(0, 1),
                            gen.coin() ? Sense::first : Sense::second};
    const double fx = gen.uniform(-5, 5);
    CHECK(convexity::generalized_combination_rhs(p, fx, gen.uniform(-5, 5), 1.0) == doctest::Approx(fx));
  }
}

TEST_CASE("generalized_combination_rhs rejects bad input") {
  const ConvexityParams p;
  CHECK_THROWS_AS(convexity::generalized_combination_rhs(p, NAN, 0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(convexity::generalized_combination_rhs(p, 0, 0, 1.5), InvalidArgument);
  CHECK_THROWS_AS(convexity::generalized_combination_rhs(p, 0, 0, -0.1), InvalidArgument);
  CHECK_THROWS_AS((ConvexityParams{0.0, 1, 1, Sense::first}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ConvexityParams{1, 1.5, 1, Sense::first}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ConvexityParams{1, 1, -0.5, Sense::first}.validate()), InvalidArgument);
}

TEST_CASE("senses coincide at s = 1") {
  testing::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const double alpha = gen.uniform(0, 1);
    const double m = gen.uniform(0.1, 1);
    const double fx = gen.uniform(-3, 3);
    const double fy = gen.uniform(-3, 3);
    const double mu = i / 199.0;
    const double first = convexity::generalized_combination_rhs({1, alpha, m, Sense::first}, fx, fy, mu);
    const double second = convexity::generalized_combination_rhs({1, alpha, m, Sense::second}, fx, fy, mu);
    CHECK(std::fabs(first - second) <= 1e-12);
  }
}

TEST_CASE("classical reduction at (1, 1, 1)") {
  testing::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    const double fx = gen.uniform(-3, 3);
    const double fy = gen.uniform(-3, 3);
    const double mu = gen.uniform(0, 1);
    const double rhs = convexity::generalized_combination_rhs({1, 1, 1, Sense::first}, fx, fy, mu);
    CHECK(std::fabs(rhs - (mu * fx + (1 - mu) * fy)) <= 1e-12);
  }
}

TEST_CASE("certify examples") {
  const ConvexityParams classical;
  const auto affine = convexity::certify(expr::FunctionSpec("x", Interval(0, 1)), Interval(0, 1), classical, 20);
  CHECK(affine.verdict == Verdict::not_falsified);
  CHECK(std::fabs(affine.worst_margin) <= 1e-15);
  CHECK(affine.samples_checked == 8000);
  CHECK_FALSE(affine.counterexample);

  const auto square = convexity::certify(expr::FunctionSpec("x^2", Interval(0, 2)), Interval(0, 2), classical, 50);
  CHECK(square.verdict == Verdict::not_falsified);

  const auto concave =
      convexity::certify(expr::FunctionSpec("-(x^2)", Interval(0, 1)), Interval(0, 1), classical, 20);
  REQUIRE(concave.verdict == Verdict::falsified);
  REQUIRE(concave.counterexample);
  CHECK(concave.counterexample->x == 0.0);
  CHECK(concave.counterexample->y == 1.0);
  CHECK(concave.counterexample->mu == doctest::Approx(0.5).epsilon(0.06));
  CHECK(concave.counterexample->lhs > concave.counterexample->rhs);
}

TEST_CASE("certify domain handling") {
  const expr::FunctionSpec f("x^2", Interval(0, 1));
  CHECK_THROWS_AS(convexity::certify(f, Interval(0, 2), {}), DomainError);
  CHECK_THROWS_AS(convexity::certify(f, Interval(0, 1), {1, 1, 0.5, Sense::first}), DomainError);
  const expr::FunctionSpec wide("x^2", Interval(0, 2));
  CHECK_NOTHROW(convexity::certify(wide, Interval(0, 1), {1, 1, 0.5, Sense::first}));
  CHECK_NOTHROW(convexity::certify(wide, Interval(0, 1), {1, 1, 0.0, Sense::first}));
}

TEST_CASE("verdict matches margin and counterexample") {
  testing::Gen gen(14);
  const char* texts[] = {"x^2", "exp(x)", "-(x^2)", "x^3 - x", "abs(x - 0.5)", "1 - x^4"};
  for (const char* text : texts) {
    const expr::FunctionSpec f(text, Interval(0, 1));
    for (int i = 0; i < 4; ++i) {
      const ConvexityParams p{gen.uniform(0.2, 1), gen.uniform(0.2, 1), 1.0, Sense::first};
      const auto r = convexity::certify(f, Interval(0, 1), p, 15, 1e-9);
      CHECK((r.verdict == Verdict::falsified) == (r.worst_margin < -1e-9));
      CHECK((r.verdict == Verdict::falsified) == r.counterexample.has_value());
    }
  }
}

TEST_CASE("refining the lattice never un-falsifies") {
  // n -> 2n - 1 keeps every old lattice point.
  testing::Gen gen(15);
  const char* texts[] = {"-(x^2)", "x^3 - x", "exp(-x)", "abs(x - 0.3)", "x^2", "1 - x"};
  for (const char* text : texts) {
    const expr::FunctionSpec f(text, Interval(0, 1));
    const ConvexityParams p{gen.uniform(0.3, 1), gen.uniform(0.3, 1), 1.0, Sense::first};
    for (std::size_t n : {5u, 9u, 17u}) {
      const auto coarse = convexity::certify(f, Interval(0, 1), p, n);
      const auto fine = convexity::certify(f, Interval(0, 1), p, 2 * n - 1);
      CAPTURE(text);
      CHECK(fine.worst_margin <= coarse.worst_margin);
      if (coarse.verdict == Verdict::falsified) CHECK(fine.verdict == Verdict::falsified);
    }
  }
}

TEST_CASE("classically convex corpus functions pass at (1, 1, 1)") {
  for (const auto& text : corpus::theorem_functions()) {
    const expr::FunctionSpec f(text, corpus::theorem_domain());
    for (const auto& iv : corpus::theorem_intervals()) {
      CAPTURE(text);
      CHECK(convexity::certify(f, iv, {}, 50, 1e-9).verdict == Verdict::not_falsified);
    }
  }
}

TEST_CASE("certify_scale_free ignores positive scaling") {
  const expr::FunctionSpec f("exp(2*x)", Interval(0, 3));
  const auto base = convexity::certify_scale_free(f.abs_derivative_function(), Interval(1, 3), {});
  const auto big = convexity::certify_scale_free(f.scaled(1e6).abs_derivative_function(), Interval(1, 3), {});
  CHECK(base.verdict == big.verdict);
  CHECK(base.worst_margin == doctest::Approx(big.worst_margin).epsilon(1e-9));
}
