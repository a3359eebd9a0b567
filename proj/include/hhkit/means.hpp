#pragma once

/**
 * @file means.hpp
 * @brief Two-variable means A, G, H, L, I, L_p, the chain H <= G <= L <= I <= A,
 *        and the special-mean inequalities P1..P3.
 *
 * L, I and L_p are evaluated in a cancellation-free form built on log1p/expm1;
 * when b - a < 1e-12 * a the diagonal value a is returned.
 */

#include <optional>

#include "hhkit/hhbounds.hpp"
#include "hhkit/kernels.hpp"

namespace hhkit::means {

enum class MeanKind { arithmetic, geometric, harmonic, logarithmic, identric, p_logarithmic };

struct MeanRequest {
  MeanKind kind = MeanKind::arithmetic;
  double a = 1.0;
  double b = 1.0;
  std::optional<double> p;  ///< required for p_logarithmic; p not in {-1, 0}
};

double mean(const MeanRequest& req);

double arithmetic(double a, double b);
double geometric(double a, double b);
double harmonic(double a, double b);
double logarithmic(double a, double b);
double identric(double a, double b);
double p_logarithmic(double a, double b, double p);
/// L_p over all real p, with L_0 = I and L_{-1} = L.
double p_logarithmic_extended(double a, double b, double p);

inline constexpr double chain_tolerance = 1e-12;

struct ChainReport {
  double h = 0.0, g = 0.0, l = 0.0, i = 0.0, a = 0.0;
  /// Smallest gap between consecutive members, each relative to max(1, member).
  double worst_step = 0.0;
  bool holds = false;
};

ChainReport mean_chain(double a, double b);
bool mean_chain_check(double a, double b);

/// Evaluates P1, P2 or P3 exactly as stated:
///
///     P1  |A(a,b) - L(a,b)|          <= (log b - log a) / (2 (p+1)^{1/p}) * A(a^q, b^q)^{1/q}
///     P2  log(I(a,b) / G(a,b))       <= (b - a)/2 * H(a^q, b^q)^{-1/q}
///     P3  |A(a^n, b^n) - L_n(a,b)^n| <= |n|^q (b - a)/3 * A(a^{q(n-1)}, b^{q(n-1)})
///
/// Requires 0 < a < b, and an integer n with |n| >= 2 for P3.
hhbounds::BoundReport proposition_check(hhbounds::Check id, double a, double b,
                                        const kernels::HolderExponents& holder, std::optional<int> n = std::nullopt);

}  // namespace hhkit::means
