#include "hhkit/expr.hpp"

#include "hhkit/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace hhkit::expr {

Expr Expr::constant(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("expression constants must be finite");
  auto node = std::make_shared<Node>();
  node->op = Op::constant;
  node->value = value;
  return Expr(std::move(node));
}

Expr Expr::variable() {
  auto node = std::make_shared<Node>();
  node->op = Op::variable;
  node->depends_on_x = true;
  return Expr(std::move(node));
}

Expr Expr::unary(Op op, Expr child) {
  if (op != Op::neg && op != Op::exp && op != Op::log && op != Op::abs) {
    throw InvalidArgument("not a unary operator");
  }
  auto node = std::make_shared<Node>();
  node->op = op;
  node->depends_on_x = child.depends_on_x();
  node->size = 1 + child.size();
  node->lhs = std::move(child);
  return Expr(std::move(node));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (op != Op::add && op != Op::sub && op != Op::mul && op != Op::div && op != Op::pow) {
    throw InvalidArgument("not a binary operator");
  }
  auto node = std::make_shared<Node>();
  node->op = op;
  node->depends_on_x = lhs.depends_on_x() || rhs.depends_on_x();
  node->size = 1 + lhs.size() + rhs.size();
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Expr(std::move(node));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
bool Expr::depends_on_x() const noexcept { return node_->depends_on_x; }
std::size_t Expr::size() const noexcept { return node_->size; }

const Expr& Expr::lhs() const {
  if (!node_->lhs.node_) throw std::logic_error("expression node has no operand");
  return node_->lhs;
}

const Expr& Expr::rhs() const {
  if (!node_->rhs.node_) throw std::logic_error("expression node has no right operand");
  return node_->rhs;
}

namespace {

bool is_unary(Op op) { return op == Op::neg || op == Op::exp || op == Op::log || op == Op::abs; }

}  // namespace

bool operator==(const Expr& l, const Expr& r) {
  if (l.node_ == r.node_) return true;
  if (l.op() != r.op()) return false;
  if (l.op() == Op::constant) return l.value() == r.value();
  if (l.op() == Op::variable) return true;
  if (is_unary(l.op())) return l.lhs() == r.lhs();
  return l.lhs() == r.lhs() && l.rhs() == r.rhs();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Op::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(Op::sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Op::mul, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Op::div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(Op::neg, parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (accept('^')) return Expr::binary(Op::pow, std::move(base), parse_unary());
    return base;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept('(')) {
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark;
        fail("malformed exponent");
      }
    }
    double value = 0.0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      pos_ = start;
      fail("number out of range");
    }
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expr::variable();

    Op op;
    if (name == "exp") {
      op = Op::exp;
    } else if (name == "log") {
      op = Op::log;
    } else if (name == "abs") {
      op = Op::abs;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    expect('(');
    std::vector<Expr> args;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] != ')') {
      args.push_back(parse_expr());
      while (accept(',')) args.push_back(parse_expr());
    }
    expect(')');
    if (args.size() != 1) {
      throw ParseError(std::string(name) + " takes 1 argument, got " + std::to_string(args.size()), start);
    }
    return Expr::unary(op, std::move(args.front()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_constant(double v) { return format_g17(v); }

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::add: return "+";
    case Op::sub: return "-";
    case Op::mul: return "*";
    case Op::div: return "/";
    case Op::pow: return "^";
    default: return "?";
  }
}

const char* function_name(Op op) {
  switch (op) {
    case Op::exp: return "exp";
    case Op::log: return "log";
    case Op::abs: return "abs";
    default: return "?";
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::constant: {
      const double v = e.value();
      if (v < 0 || (v == 0 && std::signbit(v))) {
        out += "(-";
        out += format_constant(-v);
        out += ')';
      } else {
        out += format_constant(v);
      }
      return;
    }
    case Op::variable:
      out += 'x';
      return;
    case Op::neg:
      out += "(-";
      print(e.lhs(), out);
      out += ')';
      return;
    case Op::exp:
    case Op::log:
    case Op::abs:
      out += function_name(e.op());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
    default:
      out += '(';
      print(e.lhs(), out);
      out += ' ';
      out += binary_symbol(e.op());
      out += ' ';
      print(e.rhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool is_integer(double c) { return std::nearbyint(c) == c; }

double eval_value(const Expr& e, double x) {
  switch (e.op()) {
    case Op::constant: return e.value();
    case Op::variable: return x;
    case Op::neg: return -eval_value(e.lhs(), x);
    case Op::add: return eval_value(e.lhs(), x) + eval_value(e.rhs(), x);
    case Op::sub: return eval_value(e.lhs(), x) - eval_value(e.rhs(), x);
    case Op::mul: return eval_value(e.lhs(), x) * eval_value(e.rhs(), x);
    case Op::div: {
      const double num = eval_value(e.lhs(), x);
      const double den = eval_value(e.rhs(), x);
      if (den == 0.0) throw DomainError("division by zero");
      return num / den;
    }
    case Op::pow: {
      const double base = eval_value(e.lhs(), x);
      const double expo = eval_value(e.rhs(), x);
      if (base < 0.0 && !is_integer(expo)) throw DomainError("negative base with non-integer exponent");
      if (base == 0.0 && expo < 0.0) throw DomainError("zero raised to a negative power");
      return std::pow(base, expo);
    }
    case Op::exp: return std::exp(eval_value(e.lhs(), x));
    case Op::log: {
      const double arg = eval_value(e.lhs(), x);
      if (!(arg > 0.0)) throw DomainError("log of a non-positive argument");
      return std::log(arg);
    }
    case Op::abs: return std::fabs(eval_value(e.lhs(), x));
  }
  throw std::logic_error("unhandled expression node");
}

DualValue eval_dual(const Expr& e, double x) {
  switch (e.op()) {
    case Op::constant: return {e.value(), 0.0};
    case Op::variable: return {x, 1.0};
    case Op::neg: {
      const DualValue u = eval_dual(e.lhs(), x);
      return {-u.value, -u.derivative};
    }
    case Op::add: {
      const DualValue u = eval_dual(e.lhs(), x);
      const DualValue v = eval_dual(e.rhs(), x);
      return {u.value + v.value, u.derivative + v.derivative};
    }
    case Op::sub: {
      const DualValue u = eval_dual(e.lhs(), x);
      const DualValue v = eval_dual(e.rhs(), x);
      return {u.value - v.value, u.derivative - v.derivative};
    }
    case Op::mul: {
      const DualValue u = eval_dual(e.lhs(), x);
      const DualValue v = eval_dual(e.rhs(), x);
      return {u.value * v.value, u.derivative * v.value + u.value * v.derivative};
    }
    case Op::div: {
      const DualValue u = eval_dual(e.lhs(), x);
      const DualValue v = eval_dual(e.rhs(), x);
      if (v.value == 0.0) throw DomainError("division by zero");
      const double q = u.value / v.value;
      return {q, (u.derivative - q * v.derivative) / v.value};
    }
    case Op::pow: {
      const DualValue u = eval_dual(e.lhs(), x);
      if (!e.rhs().depends_on_x()) {
        const double c = eval_value(e.rhs(), x);
        if (u.value < 0.0 && !is_integer(c)) throw DomainError("negative base with non-integer exponent");
        if (u.value == 0.0) {
          if (c < 0.0) throw DomainError("zero raised to a negative power");
          if (c == 0.0) return {1.0, 0.0};
          if (c == 1.0) return {0.0, u.derivative};
          if (c < 1.0) {
            if (u.derivative != 0.0) throw DerivativeUndefined("derivative of u^c at u = 0 with 0 < c < 1");
            return {0.0, 0.0};
          }
          return {0.0, 0.0};
        }
        return {std::pow(u.value, c), c * std::pow(u.value, c - 1.0) * u.derivative};
      }
      const DualValue v = eval_dual(e.rhs(), x);
      if (!(u.value > 0.0)) throw DomainError("variable exponent requires a positive base");
      const double p = std::pow(u.value, v.value);
      return {p, p * (v.derivative * std::log(u.value) + v.value * u.derivative / u.value)};
    }
    case Op::exp: {
      const DualValue u = eval_dual(e.lhs(), x);
      const double v = std::exp(u.value);
      return {v, v * u.derivative};
    }
    case Op::log: {
      const DualValue u = eval_dual(e.lhs(), x);
      if (!(u.value > 0.0)) throw DomainError("log of a non-positive argument");
      return {std::log(u.value), u.derivative / u.value};
    }
    case Op::abs: {
      const DualValue u = eval_dual(e.lhs(), x);
      if (u.value == 0.0) throw DerivativeUndefined("abs is not differentiable at 0");
      return u.value > 0.0 ? u : DualValue{-u.value, -u.derivative};
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

double evaluate(const Expr& e, double x) {
  const double v = eval_value(e, x);
  if (!std::isfinite(v)) throw DomainError("expression is not finite at x = " + format_constant(x));
  return v;
}

DualValue evaluate_dual(const Expr& e, double x) {
  const DualValue d = eval_dual(e, x);
  if (!std::isfinite(d.value)) throw DomainError("expression is not finite at x = " + format_constant(x));
  if (!std::isfinite(d.derivative)) {
    throw DerivativeUndefined("derivative is not finite at x = " + format_constant(x));
  }
  return d;
}

// ---------------------------------------------------------------------------
// FunctionSpec

namespace {

constexpr int kConstructionSamples = 64;

}  // namespace

FunctionSpec::FunctionSpec(std::string_view text, Interval domain)
    : body_(parse(text)), domain_(domain), text_(text) {
  validate();
}

FunctionSpec::FunctionSpec(Expr body, Interval domain)
    : body_(std::move(body)), domain_(domain), text_(to_string(body_)) {
  validate();
}

void FunctionSpec::validate() const {
  for (int i = 0; i <= kConstructionSamples; ++i) {
    const double x = i == kConstructionSamples
                         ? domain_.b()
                         : domain_.a() + domain_.length() * (static_cast<double>(i) / kConstructionSamples);
    try {
      evaluate(body_, x);
    } catch (const DomainError& err) {
      throw DomainError("function '" + text_ + "' is undefined on its domain: " + err.what());
    }
  }
}

void FunctionSpec::check_in_domain(double x) const {
  if (!domain_.contains(x)) {
    throw DomainError("x = " + format_constant(x) + " lies outside the domain " + hhkit::to_string(domain_) +
                      " of '" + text_ + "'");
  }
}

double FunctionSpec::operator()(double x) const {
  check_in_domain(x);
  return evaluate(body_, x);
}

DualValue FunctionSpec::eval_with_derivative(double x) const {
  check_in_domain(x);
  return evaluate_dual(body_, x);
}

ScalarFunction FunctionSpec::value_function() const {
  return {[self = *this](double x) { return self(x); }, domain_, text_};
}

ScalarFunction FunctionSpec::abs_derivative_function() const {
  return {[self = *this](double x) { return std::fabs(self.derivative(x)); }, domain_, "|(" + text_ + ")'|"};
}

ScalarFunction FunctionSpec::abs_derivative_power_function(double q) const {
  if (!(q > 0.0) || !std::isfinite(q)) throw InvalidArgument("exponent q must be positive and finite");
  return {[self = *this, q](double x) { return std::pow(std::fabs(self.derivative(x)), q); }, domain_,
          "|(" + text_ + ")'|^" + format_constant(q)};
}

FunctionSpec FunctionSpec::scaled(double c) const {
  FunctionSpec out(Expr::binary(Op::mul, Expr::constant(c), body_), domain_);
  out.text_ = format_constant(c) + "*(" + text_ + ")";
  return out;
}

FunctionSpec FunctionSpec::with_domain(Interval domain) const {
  FunctionSpec out(body_, domain);
  out.text_ = text_;
  return out;
}

}  // namespace hhkit::expr
