#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhkit/convexity.hpp"
#include "hhkit/hhbounds.hpp"
#include "hhkit/interval.hpp"
#include "hhkit/report.hpp"

namespace hhkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_usage = 2;

struct Command {
  std::string subcommand;  ///< certify | bound | verify | integrate | means | suite
  std::optional<std::string> function;
  std::optional<Interval> interval;
  /// Domain of the function; defaults to the interval, stretched to b/m when m < 1.
  std::optional<Interval> domain;
  convexity::ConvexityParams params;
  std::optional<double> p;
  std::optional<hhbounds::Check> theorem;
  double tol = 1e-6;
  std::size_t grid = convexity::default_grid;
  report::Format format = report::Format::text;
  std::uint64_t seed = 0;
  int n = 2;                       ///< exponent for P3
  std::size_t mean_pairs = 1000;   ///< random pairs in the suite's mean-chain check
};

/// "a:b" with decimal literals.
Interval parse_interval(std::string_view text);

/// Runs a validated command. Throws hhkit::Error on bad input.
std::vector<report::ReportRecord> execute(const Command& cmd);

/// The full verification corpus, in canonical order.
std::vector<report::ReportRecord> run_suite(std::uint64_t seed, std::size_t mean_pairs = 1000);

/// Executes and writes the report. Returns 0 when every check passed, 1 when
/// some inequality was violated or falsified, 2 on input errors.
int dispatch(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv (flags, HHKIT_TOL, optional --config file) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhkit::cli
