#pragma once

/// Built-in test functions, intervals and parameter sets shared by the `suite`
/// command, the unit tests and the acceptance run.

#include <string>
#include <vector>

#include "hhkit/convexity.hpp"
#include "hhkit/expr.hpp"
#include "hhkit/interval.hpp"

namespace hhkit::corpus {

/// Functions for the gap bounds, each defined on [0, 3].
const std::vector<std::string>& theorem_functions();
Interval theorem_domain();
const std::vector<Interval>& theorem_intervals();
const std::vector<convexity::ConvexityParams>& theorem_params();
const std::vector<double>& holder_ps();

/// alpha*s in {0.05, 0.10, ..., 1.00}.
std::vector<double> alpha_s_grid();

/// Expressions exercising every grammar production, for round-trip checks.
const std::vector<std::string>& parser_expressions();

/// Differentiable functions with domains, for derivative checks.
std::vector<expr::FunctionSpec> derivative_functions();

/// Special-mean endpoint pairs.
struct MeanPair {
  double a;
  double b;
};
const std::vector<MeanPair>& proposition_pairs();

}  // namespace hhkit::corpus
