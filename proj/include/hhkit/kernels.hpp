#pragma once

/**
 * @file kernels.hpp
 * @brief Closed-form weight integrals behind the six gap bounds, and their
 *        numerical verification.
 *
 * With k = alpha * s:
 *
 *     v1 = int_0^1 t^k |1 - 2t| dt          = (1 + 2^k k) / (2^k (k+1)(k+2))
 *     u1 = int int_[0,1]^2 t^k |u - t|      = (k^2 + 3k + 4) / (2 (k+1)(k+2)(k+3))
 *     v2 = m (1/2 - v1),  u2 = m (1/3 - u1)
 *
 * and for a Hoelder exponent p,
 *
 *     c1 = int_0^1 |1 - 2t|^p dt            = 1 / (p + 1)
 *     c2 = int int_[0,1]^2 |u - t|^p        = 2 / ((p + 1)(p + 2))
 */

#include <string>
#include <vector>

namespace hhkit::kernels {

struct KernelConstants {
  double v1 = 0.0;
  double v2 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double alpha_s = 0.0;
  double m = 0.0;
};

/// Requires 0 < alpha_s <= 1 and 0 <= m <= 1.
KernelConstants kernel_constants(double alpha_s, double m);

/// v1 closed form.
double abs_weight(double alpha_s);
/// u1 closed form.
double pair_weight(double alpha_s);

/// Conjugate exponents: q = p / (p - 1).
struct HolderExponents {
  double p = 2.0;
  double q = 2.0;

  /// Requires finite p > 1.
  static HolderExponents from_p(double p);
};

struct HolderConstants {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Requires p > 0 (p = 1 is allowed for cross-checks).
HolderConstants holder_constants(double p);

struct IdentityResidual {
  std::string name;
  int dimension = 1;  ///< 1 for single integrals, 2 for double integrals
  double numeric = 0.0;
  double closed_form = 0.0;
  double residual = 0.0;
  bool converged = false;
  bool passed = false;
};

struct IdentityReport {
  double alpha_s = 0.0;
  double p = 0.0;
  double tolerance = 0.0;
  std::vector<IdentityResidual> identities;

  bool all_passed() const;
  double max_residual(int dimension) const;
};

/// Integrates every weight integral numerically (adaptive Gauss-Kronrod,
/// iterated for the double integrals, splitting at the kinks t = 1/2 and
/// u = t) and compares with its closed form. Seven distinct integrals:
/// v1, its complement 1/2 - v1, c1, u1, its complement 1/3 - u1, c2, and
/// int int |u - t| = 1/3. Non-converged integrals are reported as failed.
IdentityReport verify_kernel_identities(double alpha_s, double p, double tol);

}  // namespace hhkit::kernels
