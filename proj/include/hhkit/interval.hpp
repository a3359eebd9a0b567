#pragma once

#include <cmath>
#include <string>

#include "hhkit/error.hpp"

namespace hhkit {

/// Closed interval [a, b] with finite a < b.
class Interval {
 public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("interval endpoints must be finite");
    if (!(a < b)) throw InvalidArgument("interval requires a < b");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return a_ + 0.5 * (b_ - a_); }

  bool contains(double x) const noexcept { return x >= a_ && x <= b_; }
  bool contains(const Interval& other) const noexcept { return other.a_ >= a_ && other.b_ <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

std::string to_string(const Interval& iv);

}  // namespace hhkit
