#pragma once

/**
 * @file expr.hpp
 * @brief Expression trees in one variable `x`, their parser, and
 *        forward-mode (dual number) evaluation of value and first derivative.
 *
 * Grammar, loosest binding first:
 *
 *     expr  := term (('+' | '-') term)*
 *     term  := unary (('*' | '/') unary)*
 *     unary := '-' unary | power
 *     power := atom ('^' unary)?
 *     atom  := NUMBER | 'x' | ('exp' | 'log' | 'abs') '(' expr ')' | '(' expr ')'
 *
 * `^` is right-associative and binds tighter than unary minus, so `-x^2`
 * means -(x^2) and `2^-x` means 2^(-x).
 */

#include <memory>
#include <string>
#include <string_view>

#include "hhkit/function.hpp"
#include "hhkit/interval.hpp"

namespace hhkit::expr {

enum class Op { constant, variable, neg, add, sub, mul, div, pow, exp, log, abs };

struct Node;

/// Immutable, shared expression tree. Copies are cheap and share structure.
class Expr {
 public:
  static Expr constant(double value);
  static Expr variable();
  static Expr unary(Op op, Expr child);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  Op op() const noexcept;
  /// Constant payload; 0 for every other node kind.
  double value() const noexcept;
  /// Left operand, or the only operand of neg/exp/log/abs.
  const Expr& lhs() const;
  const Expr& rhs() const;
  bool depends_on_x() const noexcept;
  std::size_t size() const noexcept;

  /// Structural equality (constants compare by value).
  friend bool operator==(const Expr& l, const Expr& r);

 private:
  friend struct Node;
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op = Op::constant;
  double value = 0.0;
  Expr lhs;
  Expr rhs;
  bool depends_on_x = false;
  std::size_t size = 1;
};

/// Parse `text`. Throws ParseError carrying the offending byte offset for
/// syntax errors, unknown identifiers and wrong argument counts.
Expr parse(std::string_view text);

/// Fully parenthesized text form; `parse(to_string(e)) == e` for every tree
/// produced by `parse`.
std::string to_string(const Expr& e);

struct DualValue {
  double value = 0.0;
  double derivative = 0.0;
};

/// f(x). Throws DomainError where the expression is undefined or not finite.
double evaluate(const Expr& e, double x);

/// (f(x), f'(x)) by dual-number arithmetic. In addition to the DomainError
/// cases of `evaluate`, throws DerivativeUndefined at points where f is defined
/// but not differentiable (abs at 0, x^c at 0 for 0 < c < 1).
DualValue evaluate_dual(const Expr& e, double x);

/// A parsed expression restricted to a closed domain.
///
/// Construction checks that the body is finite on a sample grid of the domain.
class FunctionSpec {
 public:
  FunctionSpec(std::string_view text, Interval domain);
  FunctionSpec(Expr body, Interval domain);

  const Expr& body() const noexcept { return body_; }
  const Interval& domain() const noexcept { return domain_; }
  /// Source text when built from text, otherwise the printed body.
  const std::string& text() const noexcept { return text_; }

  double operator()(double x) const;
  DualValue eval_with_derivative(double x) const;
  double derivative(double x) const { return eval_with_derivative(x).derivative; }

  /// x -> f(x) on the domain.
  ScalarFunction value_function() const;
  /// x -> |f'(x)| on the domain.
  ScalarFunction abs_derivative_function() const;
  /// x -> |f'(x)|^q on the domain.
  ScalarFunction abs_derivative_power_function(double q) const;

  /// c * f, with text "c*(text)".
  FunctionSpec scaled(double c) const;
  FunctionSpec with_domain(Interval domain) const;

 private:
  void validate() const;
  void check_in_domain(double x) const;

  Expr body_;
  Interval domain_;
  std::string text_;
};

inline DualValue eval_with_derivative(const FunctionSpec& f, double x) { return f.eval_with_derivative(x); }

}  // namespace hhkit::expr
