#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "hyperbergman/verify.hpp"

using namespace hb::verify;

namespace {

std::string strip_wall_times(std::string s) {
  static const std::regex wall(R"("wall_time_ms":[-0-9.eE+]+)");
  return std::regex_replace(s, wall, "\"wall_time_ms\":0");
}

}  // namespace

TEST_CASE("empty report renders to the minimal document") {
  const VerificationReport r;
  CHECK(render_report(r, ReportFormat::json) == R"({"entries":[],"summary":{"total":0,"passed":0}})");
  CHECK(r.all_passed());
}

TEST_CASE("build id is carried in the summary when set") {
  VerificationReport r;
  r.build_id = "v1-abc";
  const auto j = nlohmann::json::parse(render_report(r, ReportFormat::json));
  CHECK(j["summary"]["build"] == "v1-abc");
}

TEST_CASE("csv has a header and one row per entry") {
  VerificationReport r;
  r.entries.push_back(numeric_entry("x", {{"n", 1}}, 1.0, 1.0 + 1e-13, 0.0, 1e-12));
  const std::string csv = render_report(r, ReportFormat::csv);
  std::istringstream is(csv);
  std::string header, row, extra;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(header == "name,inputs,expected,observed,std_error,tolerance,pass,wall_time_ms");
  CHECK(row.rfind("x,\"{\"\"n\"\":1}\",1.0,", 0) == 0);
  CHECK(row.find(",true,") != std::string::npos);
  CHECK_FALSE(std::getline(is, extra));
}

TEST_CASE("numeric verdicts") {
  const hb::Element a{1.0, 2.0};
  const hb::Element b{1.0, 2.0 + 5e-3};
  CHECK(numeric_entry("p", {}, a, b, 0.0, 1e-2).pass);
  CHECK_FALSE(numeric_entry("f", {}, a, b, 0.0, 1e-3).pass);
  CHECK_FALSE(numeric_entry("nan", {}, 1.0, NAN, 0.0, 1.0).pass);
  CHECK(check_entry("c", {}, true).pass);
  CHECK_FALSE(check_entry("c", {}, false).pass);
}

TEST_CASE("elements serialize as arrays of m reals") {
  const auto j = to_json(hb::Element{0.5, -1.0, 0.0, 2.0});
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[0] == 0.5);
  CHECK(j[3] == 2.0);
}

TEST_CASE("scenario names round-trip") {
  for (Scenario s : individual_scenarios()) CHECK(parse_scenario(scenario_name(s)) == s);
  CHECK(parse_scenario("all") == Scenario::all);
  CHECK_FALSE(parse_scenario("bogus"));
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("writing to an unwritable path fails with io_failure") {
  try {
    emit_report(VerificationReport{}, ReportFormat::json, "/nonexistent-dir/report.json");
    FAIL("expected io_failure");
  } catch (const hb::Error& e) {
    CHECK(e.code() == hb::ErrorCode::io_failure);
  }
}

TEST_CASE("report file round-trips through the JSON parser") {
  ScenarioConfig cfg;
  cfg.scenario = Scenario::limit_lemma;
  const auto report = run_scenario(cfg);
  const auto path = std::filesystem::temp_directory_path() / "hb_report_roundtrip.json";
  emit_report(report, ReportFormat::json, path.string());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  std::filesystem::remove(path);
  REQUIRE(j["entries"].size() == report.total());
  for (const auto& e : j["entries"]) {
    for (const char* key : {"name", "inputs", "expected", "observed", "std_error", "tolerance", "pass", "wall_time_ms"})
      CHECK(e.contains(key));
  }
  CHECK(j["summary"]["total"] == report.total());
  CHECK(j["summary"]["passed"] == report.passed());
}

TEST_CASE("identical configs give identical reports apart from timings") {
  for (Scenario s : {Scenario::algebra, Scenario::kernel_consistency, Scenario::cauchy_formula}) {
    ScenarioConfig cfg;
    cfg.scenario = s;
    cfg.seed = 1;
    cfg.samples = 5000;
    cfg.dim = 4;
    const auto a = render_report(run_scenario(cfg), ReportFormat::json);
    const auto b = render_report(run_scenario(cfg), ReportFormat::json);
    CHECK(strip_wall_times(a) == strip_wall_times(b));
  }
}

TEST_CASE("algebra scenario passes for seed 1") {
  ScenarioConfig cfg;
  cfg.scenario = Scenario::algebra;
  cfg.seed = 1;
  const auto r = run_scenario(cfg);
  CHECK(r.total() > 0);
  CHECK(r.all_passed());
}

TEST_CASE("module errors become failed entries") {
  ScenarioConfig cfg;
  cfg.scenario = Scenario::reproduce_halfspace;
  cfg.dim = 8;
  cfg.samples = 5000;
  cfg.radius = 1.5;  // below the tail-bound offset of the catalog functions
  const auto r = run_scenario(cfg);
  REQUIRE(r.total() > 0);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("invalid configuration is rejected") {
  ScenarioConfig cfg;
  cfg.dim = 3;
  CHECK_THROWS_AS(validate(cfg), hb::Error);
  cfg.dim = 8;
  cfg.samples = 10;
  CHECK_THROWS_AS(validate(cfg), hb::Error);
}
