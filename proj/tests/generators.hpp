#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hhkit/expr.hpp"

namespace hhkit::testing {

// Small seeded generators for property checks. Every test builds its own so
// failures reproduce from the seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // Random expression tree of bounded depth. Constants are short decimals so
  // printing and re-parsing is exact. The parser never yields a negative
  // constant, so none are generated.
  expr::Expr expression(int depth) {
    using expr::Expr;
    using expr::Op;
    if (depth <= 0 || integer(0, 3) == 0) {
      return coin() ? Expr::variable() : Expr::constant(integer(0, 40) / 8.0);
    }
    switch (integer(0, 8)) {
      case 0: return Expr::unary(Op::neg, expression(depth - 1));
      case 1: return Expr::unary(Op::exp, expression(depth - 1));
      case 2: return Expr::unary(Op::log, expression(depth - 1));
      case 3: return Expr::unary(Op::abs, expression(depth - 1));
      case 4: return Expr::binary(Op::add, expression(depth - 1), expression(depth - 1));
      case 5: return Expr::binary(Op::sub, expression(depth - 1), expression(depth - 1));
      case 6: return Expr::binary(Op::mul, expression(depth - 1), expression(depth - 1));
      case 7: return Expr::binary(Op::div, expression(depth - 1), expression(depth - 1));
      default: return Expr::binary(Op::pow, expression(depth - 1), Expr::constant(integer(1, 4)));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hhkit::testing
