#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperbergman/verify.hpp"

#ifndef HB_BUILD_ID
#define HB_BUILD_ID "unknown"
#endif

namespace hb::verify {

using json = nlohmann::ordered_json;

std::string_view build_id() noexcept { return HB_BUILD_ID; }

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::size_t VerificationReport::passed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; }));
}

json to_json(const Element& x) {
  json out = json::array();
  for (double c : x.coeffs()) out.push_back(c);
  return out;
}

ReportEntry numeric_entry(std::string name, json inputs, const Element& expected, const Element& observed,
                          double std_error, double tolerance) {
  ReportEntry e;
  e.name = std::move(name);
  e.inputs = std::move(inputs);
  e.expected = to_json(expected);
  e.observed = to_json(observed);
  e.std_error = std_error;
  e.tolerance = tolerance;
  e.pass = observed.is_finite() && max_abs_diff(expected, observed) <= tolerance;
  return e;
}

ReportEntry numeric_entry(std::string name, json inputs, double expected, double observed,
                          double std_error, double tolerance) {
  ReportEntry e;
  e.name = std::move(name);
  e.inputs = std::move(inputs);
  e.expected = expected;
  e.observed = std::isfinite(observed) ? json(observed) : json(nullptr);
  e.std_error = std_error;
  e.tolerance = tolerance;
  e.pass = std::isfinite(observed) && std::abs(expected - observed) <= tolerance;
  return e;
}

ReportEntry check_entry(std::string name, json inputs, bool observed) {
  ReportEntry e;
  e.name = std::move(name);
  e.inputs = std::move(inputs);
  e.expected = true;
  e.observed = observed;
  e.pass = observed;
  return e;
}

namespace {

json entry_json(const ReportEntry& e) {
  json j;
  j["name"] = e.name;
  j["inputs"] = e.inputs;
  j["expected"] = e.expected;
  j["observed"] = e.observed;
  j["std_error"] = e.std_error;
  j["tolerance"] = e.tolerance;
  j["pass"] = e.pass;
  j["wall_time_ms"] = e.wall_time_ms;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_value(const json& j) {
  if (j.is_string()) return csv_field(j.get<std::string>());
  return csv_field(j.dump());
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    json root;
    root["entries"] = json::array();
    for (const auto& e : report.entries) root["entries"].push_back(entry_json(e));
    json summary;
    summary["total"] = report.total();
    summary["passed"] = report.passed();
    if (!report.build_id.empty()) summary["build"] = report.build_id;
    root["summary"] = summary;
    return root.dump();
  }

  std::ostringstream os;
  os << "name,inputs,expected,observed,std_error,tolerance,pass,wall_time_ms\n";
  for (const auto& e : report.entries) {
    const json j = entry_json(e);
    os << csv_field(e.name) << ',' << csv_value(j["inputs"]) << ',' << csv_value(j["expected"]) << ','
       << csv_value(j["observed"]) << ',' << j["std_error"].dump() << ',' << j["tolerance"].dump() << ','
       << (e.pass ? "true" : "false") << ',' << j["wall_time_ms"].dump() << '\n';
  }
  return os.str();
}

void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
  std::string text = render_report(report, format);
  if (format == ReportFormat::json) text += '\n';
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::io_failure, "failed writing report to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_failure, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::io_failure, "failed writing '" + path + "'");
}

}  // namespace hb::verify
