#include <cmath>

#include "doctest.h"
#include "hhkit/corpus.hpp"
#include "hhkit/error.hpp"
#include "hhkit/kernels.hpp"
#include "hhkit/quadrature.hpp"

using namespace hhkit;

TEST_CASE("kernel constants at the anchors") {
  const auto k = kernels::kernel_constants(1.0, 1.0);
  CHECK(std::fabs(k.v1 - 0.25) <= 1e-14);
  CHECK(std::fabs(k.v2 - 0.25) <= 1e-14);
  CHECK(std::fabs(k.u1 - 1.0 / 6.0) <= 1e-14);
  CHECK(std::fabs(k.u2 - 1.0 / 6.0) <= 1e-14);

  const auto half = kernels::kernel_constants(0.5, 1.0);
  const ScalarFunction weight{[](double t) { return std::sqrt(t) * std::fabs(1 - 2 * t); }, Interval(0, 1), "w"};
  const double half_point[] = {0.5};
  CHECK(std::fabs(half.v1 - quadrature::reference_integrate(weight, Interval(0, 1), 1e-13, half_point)) <= 1e-12);
  CHECK(half.v1 == doctest::Approx(0.32190).epsilon(2e-5));
  CHECK(half.u1 == doctest::Approx(0.219048).epsilon(1e-6));

  const auto zero_m = kernels::kernel_constants(1.0, 0.0);
  CHECK(zero_m.v2 == 0.0);
  CHECK(zero_m.u2 == 0.0);
}

TEST_CASE("kernel constants reject out-of-range input") {
  CHECK_THROWS_AS(kernels::kernel_constants(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(kernels::kernel_constants(1.5, 1.0), InvalidArgument);
  CHECK_THROWS_AS(kernels::kernel_constants(0.5, 1.5), InvalidArgument);
  CHECK_THROWS_AS(kernels::holder_constants(0.0), InvalidArgument);
  CHECK_THROWS_AS(kernels::HolderExponents::from_p(1.0), InvalidArgument);
}

TEST_CASE("holder constants") {
  const auto h1 = kernels::holder_constants(1.0);
  CHECK(h1.c1 == 0.5);
  CHECK(std::fabs(h1.c2 - 1.0 / 3.0) <= 1e-15);
  const auto h2 = kernels::holder_constants(2.0);
  CHECK(h2.c1 == doctest::Approx(1.0 / 3.0));
  CHECK(h2.c2 == doctest::Approx(1.0 / 6.0));
  const auto h3 = kernels::holder_constants(3.0);
  CHECK(h3.c1 == doctest::Approx(0.25));
  CHECK(h3.c2 == doctest::Approx(0.1));
  const auto q = kernels::HolderExponents::from_p(3.0);
  CHECK(1.0 / q.p + 1.0 / q.q == doctest::Approx(1.0));
}

TEST_CASE("identity report examples") {
  CHECK(kernels::verify_kernel_identities(1.0, 2.0, 1e-10).all_passed());
  CHECK(kernels::verify_kernel_identities(0.3, 1.5, 1e-9).all_passed());
  const auto r = kernels::verify_kernel_identities(1.0, 1.0, 1e-12);
  for (const auto& id : r.identities) {
    if (id.name == "c2") CHECK(id.closed_form == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("complement identities across the alpha*s grid") {
  for (const double k : corpus::alpha_s_grid()) {
    const auto r = kernels::verify_kernel_identities(k, 2.0, 1e-10);
    CAPTURE(k);
    for (const auto& id : r.identities) {
      CAPTURE(id.name);
      CHECK(id.converged);
      CHECK(id.residual <= (id.dimension == 1 ? 1e-10 : 1e-8));
    }
  }
}

TEST_CASE("v1 is continuous and decreasing in alpha*s") {
  double prev = kernels::abs_weight(0.001);
  for (int i = 2; i <= 1000; ++i) {
    const double cur = kernels::abs_weight(i / 1000.0);
    CHECK(cur <= prev);
    CHECK(prev - cur < 1e-3);
    prev = cur;
  }
}

TEST_CASE("v1 at alpha = 1 is the s-convex trapezoid weight") {
  for (const double s : corpus::alpha_s_grid()) {
    CHECK(kernels::abs_weight(s) == quadrature::s_convex_weight(s));
  }
}
