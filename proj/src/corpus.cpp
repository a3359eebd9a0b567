#include "hhkit/corpus.hpp"

#include <cmath>
#include <numbers>

namespace hhkit::corpus {

const std::vector<std::string>& theorem_functions() {
  static const std::vector<std::string> fs = {"x^2", "x^4", "exp(x)", "exp(2*x)", "x^2 + 3*x"};
  return fs;
}

Interval theorem_domain() { return {0.0, 3.0}; }

const std::vector<Interval>& theorem_intervals() {
  static const std::vector<Interval> ivs = {{0.0, 1.0}, {0.0, 2.0}, {1.0, 3.0}};
  return ivs;
}

const std::vector<convexity::ConvexityParams>& theorem_params() {
  using convexity::Sense;
  static const std::vector<convexity::ConvexityParams> ps = {
      {1.0, 1.0, 1.0, Sense::first},
      {0.5, 1.0, 1.0, Sense::first},
      {1.0, 0.5, 1.0, Sense::first},
      {0.75, 0.5, 1.0, Sense::first},
  };
  return ps;
}

const std::vector<double>& holder_ps() {
  static const std::vector<double> ps = {1.5, 2.0, 3.0};
  return ps;
}

std::vector<double> alpha_s_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

const std::vector<std::string>& parser_expressions() {
  static const std::vector<std::string> es = {
      "x^2",
      "x^4",
      "exp(x)",
      "exp(2*x)",
      "x^2 + 3*x",
      "exp(x) - 1",
      "(1-x)^4",
      "-log(1-x)",
      "-(x^2)",
      "-x^2",
      "abs(x)",
      "abs(x - 0.5) * 2",
      "2^x",
      "x^x",
      "2^-x",
      "x^3^0.5",
      "1/(1+x^2)",
      "log(1 + x^2) / (1 + x)",
      "exp(-x) * x^3",
      "1.5e-3*x - .25",
      "((x))",
      "--x",
      "x - x - x",
      "x / 2 / 3",
      "3.25E+2 * exp(log(x + 1))",
  };
  return es;
}

std::vector<expr::FunctionSpec> derivative_functions() {
  std::vector<expr::FunctionSpec> fs;
  for (const auto& f : theorem_functions()) fs.emplace_back(f, theorem_domain());
  fs.emplace_back("exp(x) - 1", Interval(-1.0, 2.0));
  fs.emplace_back("(1-x)^4", Interval(-1.0, 2.0));
  fs.emplace_back("-log(1-x)", Interval(-1.0, 0.9));
  fs.emplace_back("-log(x)", Interval(0.1, 3.0));
  fs.emplace_back("2^x", Interval(-2.0, 2.0));
  fs.emplace_back("x^x", Interval(0.1, 2.0));
  fs.emplace_back("x^0.5", Interval(0.01, 4.0));
  fs.emplace_back("1/(1+x^2)", Interval(-3.0, 3.0));
  fs.emplace_back("log(1 + x^2) / (1 + x)", Interval(0.0, 3.0));
  fs.emplace_back("exp(-x) * x^3", Interval(-1.0, 4.0));
  fs.emplace_back("abs(x - 0.5) * 2", Interval(0.6, 2.0));
  return fs;
}

const std::vector<MeanPair>& proposition_pairs() {
  static const std::vector<MeanPair> pairs = {{1.0, std::numbers::e}, {2.0, 8.0}, {0.5, 1.5}};
  return pairs;
}

}  // namespace hhkit::corpus
