#pragma once

// Scenario runner and report writer behind the `verify` command.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperbergman/algebra.hpp"

namespace hb::verify {

enum class Scenario {
  algebra,
  analyticity,
  kernel_consistency,
  cauchy_formula,
  reproduce_halfspace,
  reproduce_ball,
  limit_lemma,
  density,
  complex_oracle,
  all,
};

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);
const std::vector<Scenario>& individual_scenarios();

enum class ReportFormat { json, csv };

std::optional<ReportFormat> parse_format(std::string_view name);

struct ScenarioConfig {
  Scenario scenario = Scenario::all;
  /// Restricts dimension-generic scenarios to one dimension.
  std::optional<int> dim;
  std::uint64_t seed = 42;
  /// Overrides the scenario's quadrature sample count.
  std::optional<std::uint64_t> samples;
  /// Overrides the half-space truncation radius.
  std::optional<double> radius;
  /// Overrides the scenario's default tolerance.
  std::optional<double> tolerance;
  std::string output_path;
  ReportFormat format = ReportFormat::json;
  unsigned threads = 0;
};

/// Throws invalid_parameter on an inconsistent configuration.
void validate(const ScenarioConfig& cfg);

struct ReportEntry {
  std::string name;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  double std_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_ms = 0.0;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  /// Emitted in the summary only when non-empty.
  std::string build_id;

  std::size_t total() const noexcept { return entries.size(); }
  std::size_t passed() const noexcept;
  bool all_passed() const noexcept { return passed() == total(); }
};

/// Elements serialize as arrays of dim() reals, index 0 the real part.
nlohmann::ordered_json to_json(const Element& x);

/// Entry whose verdict is max |expected - observed| <= tolerance.
ReportEntry numeric_entry(std::string name, nlohmann::ordered_json inputs, const Element& expected,
                          const Element& observed, double std_error, double tolerance);
ReportEntry numeric_entry(std::string name, nlohmann::ordered_json inputs, double expected,
                          double observed, double std_error, double tolerance);
/// Entry whose verdict is observed == expected == true.
ReportEntry check_entry(std::string name, nlohmann::ordered_json inputs, bool observed);

VerificationReport run_scenario(const ScenarioConfig& cfg);

std::string render_report(const VerificationReport& report, ReportFormat format);

/// Writes the rendered report to `path` ("-" or empty: stdout). Throws io_failure.
void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path);

/// Build identifier compiled into the library.
std::string_view build_id() noexcept;

}  // namespace hb::verify
