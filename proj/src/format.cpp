#include "hhkit/format.hpp"

#include <cstdio>

#include "hhkit/interval.hpp"

namespace hhkit {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string to_string(const Interval& iv) { return "[" + format_g17(iv.a()) + ", " + format_g17(iv.b()) + "]"; }

}  // namespace hhkit
