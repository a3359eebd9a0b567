#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable check records and their json / csv / text encodings.
 *
 * Every number is written with 17 significant digits in json and csv, so the
 * two formats carry identical values. Non-finite numbers become `null` in json
 * and an empty field in csv.
 */

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hhkit/convexity.hpp"
#include "hhkit/hhbounds.hpp"
#include "hhkit/quadrature.hpp"

namespace hhkit::report {

using InputValue = std::variant<std::string, double, long long, bool>;

struct ReportRecord {
  std::string kind;
  std::vector<std::pair<std::string, InputValue>> inputs;  ///< insertion order is output order
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string verdict;
  double elapsed_ms = 0.0;
  /// Appended to the text line only; everything in it is also in `inputs`.
  std::string detail;

  ReportRecord& add(std::string key, InputValue value) {
    inputs.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

namespace verdict {
inline constexpr const char* holds = "holds";
inline constexpr const char* violation = "violation";
inline constexpr const char* skipped = "skipped";
inline constexpr const char* finding = "finding";
inline constexpr const char* unverified = "unverified";
inline constexpr const char* falsified = "falsified";
inline constexpr const char* not_falsified = "not_falsified";
inline constexpr const char* ok = "ok";
}  // namespace verdict

/// True for verdicts that make the command exit with status 1.
bool is_failure(const std::string& verdict);

enum class Format { json, csv, text };

void write(std::ostream& out, const std::vector<ReportRecord>& records, Format format);
void write_json(std::ostream& out, const std::vector<ReportRecord>& records);
void write_csv(std::ostream& out, const std::vector<ReportRecord>& records);
void write_text(std::ostream& out, const std::vector<ReportRecord>& records);

std::string format_input(const InputValue& v);

ReportRecord from_certification(const convexity::CertificationReport& r, const std::string& function,
                                const Interval& iv, const convexity::ConvexityParams& params, std::size_t grid,
                                double tolerance);

/// Theorem records: "skipped" when the hypothesis was falsified.
ReportRecord from_bound(const hhbounds::BoundReport& r);

ReportRecord from_quadrature(const quadrature::QuadratureResult& r, const std::string& function, const Interval& iv,
                             double s, double p);

void add_params(ReportRecord& rec, const convexity::ConvexityParams& params);

}  // namespace hhkit::report
