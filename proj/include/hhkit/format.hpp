#pragma once

#include <string>

namespace hhkit {

/// 17 significant digits ("%.17g"); reads back to the same double.
std::string format_g17(double v);

/// Fixed-point with `digits` decimals ("%.*f").
std::string format_fixed(double v, int digits);

}  // namespace hhkit
