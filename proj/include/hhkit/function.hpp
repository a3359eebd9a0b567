#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hhkit/interval.hpp"

namespace hhkit {

/// A real function of one variable together with the interval it is defined on.
///
/// This is the type consumed by the sampling and quadrature routines; parsed
/// expressions, derivatives and compositions such as |f'|^q all reduce to it.
struct ScalarFunction {
  std::function<double(double)> eval;
  Interval domain;
  std::string label;

  double operator()(double x) const { return eval(x); }
};

}  // namespace hhkit
