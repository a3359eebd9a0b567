#include "hhkit/report.hpp"

#include <cmath>
#include <ostream>

#include "hhkit/format.hpp"
#include "json.hpp"

namespace hhkit::report {

bool is_failure(const std::string& verdict) {
  return verdict == verdict::violation || verdict == verdict::falsified;
}

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_g17(v) : "null"; }
std::string csv_number(double v) { return std::isfinite(v) ? format_g17(v) : ""; }

std::string json_value(const InputValue& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
    std::string operator()(double d) const { return json_number(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, v);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* sense_name(convexity::Sense s) { return s == convexity::Sense::first ? "first" : "second"; }

}  // namespace

std::string format_input(const InputValue& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return csv_number(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, v);
}

void write_json(std::ostream& out, const std::vector<ReportRecord>& records) {
  out << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "  {\"kind\": " << nlohmann::json(r.kind).dump() << ", \"inputs\": {";
    for (std::size_t k = 0; k < r.inputs.size(); ++k) {
      if (k > 0) out << ", ";
      out << nlohmann::json(r.inputs[k].first).dump() << ": " << json_value(r.inputs[k].second);
    }
    out << "}, \"lhs\": " << json_number(r.lhs) << ", \"rhs\": " << json_number(r.rhs)
        << ", \"margin\": " << json_number(r.margin) << ", \"verdict\": " << nlohmann::json(r.verdict).dump()
        << ", \"elapsed_ms\": " << json_number(r.elapsed_ms) << "}";
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

void write_csv(std::ostream& out, const std::vector<ReportRecord>& records) {
  out << "kind,lhs,rhs,margin,verdict,inputs,elapsed_ms\n";
  for (const auto& r : records) {
    std::string inputs;
    for (std::size_t k = 0; k < r.inputs.size(); ++k) {
      if (k > 0) inputs += ';';
      inputs += r.inputs[k].first + "=" + format_input(r.inputs[k].second);
    }
    out << csv_escape(r.kind) << ',' << csv_number(r.lhs) << ',' << csv_number(r.rhs) << ','
        << csv_number(r.margin) << ',' << csv_escape(r.verdict) << ',' << csv_escape(inputs) << ','
        << csv_number(r.elapsed_ms) << '\n';
  }
}

void write_text(std::ostream& out, const std::vector<ReportRecord>& records) {
  for (const auto& r : records) {
    out << r.kind << ' ' << r.verdict << ", lhs=" << format_fixed(r.lhs, 6) << " rhs=" << format_fixed(r.rhs, 6)
        << " margin=" << format_fixed(r.margin, 6);
    if (!r.detail.empty()) out << ' ' << r.detail;
    out << '\n';
  }
}

void write(std::ostream& out, const std::vector<ReportRecord>& records, Format format) {
  switch (format) {
    case Format::json: write_json(out, records); return;
    case Format::csv: write_csv(out, records); return;
    case Format::text: write_text(out, records); return;
  }
}

void add_params(ReportRecord& rec, const convexity::ConvexityParams& params) {
  rec.add("s", params.s).add("alpha", params.alpha).add("m", params.m).add("sense", sense_name(params.sense));
}

ReportRecord from_certification(const convexity::CertificationReport& r, const std::string& function,
                                const Interval& iv, const convexity::ConvexityParams& params, std::size_t grid,
                                double tolerance) {
  ReportRecord rec;
  rec.kind = "certify";
  rec.add("function", function).add("a", iv.a()).add("b", iv.b());
  add_params(rec, params);
  rec.add("grid", static_cast<long long>(grid))
      .add("tolerance", tolerance)
      .add("samples", static_cast<long long>(r.samples_checked));
  const auto& w = r.worst_sample;
  rec.add("x", w.x).add("y", w.y).add("mu", w.mu);
  rec.lhs = w.lhs;
  rec.rhs = w.rhs;
  rec.margin = r.worst_margin;
  if (r.verdict == convexity::Verdict::falsified) {
    rec.verdict = verdict::falsified;
    rec.detail = "counterexample x=" + format_g17(w.x) + " y=" + format_g17(w.y) + " mu=" + format_g17(w.mu);
  } else {
    rec.verdict = verdict::not_falsified;
  }
  return rec;
}

ReportRecord from_bound(const hhbounds::BoundReport& r) {
  ReportRecord rec;
  rec.kind = std::string(hhbounds::to_string(r.check));
  rec.add("function", r.inputs.function).add("a", r.inputs.interval.a()).add("b", r.inputs.interval.b());
  if (hhbounds::is_theorem(r.check)) add_params(rec, r.inputs.params);
  if (r.inputs.holder) rec.add("p", r.inputs.holder->p).add("q", r.inputs.holder->q);
  rec.add("hypothesis_certified", r.hypothesis_certified);
  rec.lhs = r.lhs_gap;
  rec.rhs = r.rhs_bound;
  rec.margin = r.margin;
  if (!r.hypothesis_certified) {
    rec.verdict = verdict::skipped;
    rec.detail = "(hypothesis falsified)";
  } else {
    rec.verdict = r.holds ? verdict::holds : verdict::violation;
  }
  return rec;
}

ReportRecord from_quadrature(const quadrature::QuadratureResult& r, const std::string& function, const Interval& iv,
                             double s, double p) {
  ReportRecord rec;
  rec.kind = "integrate";
  rec.add("function", function)
      .add("a", iv.a())
      .add("b", iv.b())
      .add("tol", r.certified_tolerance)
      .add("s", s)
      .add("p", p)
      .add("value", r.value)
      .add("n", static_cast<long long>(r.n))
      .add("bound_p4", r.bound_p4)
      .add("bound_p5", r.bound_p5)
      .add("hypothesis_certified", r.hypothesis_certified);
  rec.lhs = r.best_bound();
  rec.rhs = r.certified_tolerance;
  rec.margin = rec.rhs - rec.lhs;
  rec.verdict = rec.margin >= 0.0 ? verdict::holds : verdict::violation;
  rec.detail = "value=" + format_g17(r.value) + " n=" + std::to_string(r.n) +
               (r.hypothesis_certified ? "" : " (hypothesis falsified: bound not guaranteed)");
  return rec;
}

}  // namespace hhkit::report
