// verify: runs a verification scenario and writes a JSON or CSV report.
//
// Exit status: 0 when every entry passes, 1 when any entry fails,
// 2 on a configuration or I/O error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperbergman/hyperbergman.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

constexpr const char* kSeedEnv = "HYPERBERGMAN_SEED";

struct ConfigDeleter {
  void operator()(hb_config* c) const { hb_config_free(c); }
};
struct ReportDeleter {
  void operator()(hb_report* r) const { hb_report_free(r); }
};

int config_error(const std::string& what) {
  std::cerr << "verify: " << what << '\n';
  return kExitConfig;
}

int status_error(hb_status s) {
  std::string msg = hb_status_string(s);
  const std::string detail = hb_last_error();
  if (!detail.empty()) msg += ": " + detail;
  return config_error(msg);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv(kSeedEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used, 0);
    if (used != std::string(raw).size()) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run a hyperbergman verification scenario"};
  app.set_version_flag("--version", std::string(hb_build_id()));

  std::string scenario;
  std::optional<int> dim;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius;
  std::optional<double> tol;
  std::string out = "-";
  std::string format = "json";
  unsigned threads = 0;

  app.add_option("scenario", scenario,
                 "algebra, analyticity, kernel-consistency, cauchy-formula, reproduce-halfspace, "
                 "reproduce-ball, limit-lemma, density, complex-oracle or all")
      ->required();
  app.add_option("--dim", dim, "Restrict to one dimension")->check(CLI::IsMember({2, 4, 8}));
  app.add_option("--samples", samples, "Quadrature samples per integral");
  app.add_option("--seed", seed, std::string("Random seed (default 42, or $") + kSeedEnv + ")");
  app.add_option("--radius", radius, "Half-space truncation radius");
  app.add_option("--tol", tol, "Override the scenario tolerance");
  app.add_option("--out", out, "Report path, '-' for stdout")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--threads", threads, "Worker threads, 0 for hardware concurrency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitConfig;
  }

  if (!seed) {
    seed = seed_from_env();
    if (!seed && std::getenv(kSeedEnv) != nullptr && *std::getenv(kSeedEnv) != '\0') {
      return config_error(std::string("invalid ") + kSeedEnv);
    }
  }

  hb_config* raw_cfg = nullptr;
  if (hb_status s = hb_config_create(scenario.c_str(), &raw_cfg); s != HB_OK) return status_error(s);
  std::unique_ptr<hb_config, ConfigDeleter> cfg(raw_cfg);

  hb_status s = HB_OK;
  if (dim && (s = hb_config_set_dim(cfg.get(), *dim)) != HB_OK) return status_error(s);
  if (seed && (s = hb_config_set_seed(cfg.get(), *seed)) != HB_OK) return status_error(s);
  if (samples && (s = hb_config_set_samples(cfg.get(), *samples)) != HB_OK) return status_error(s);
  if (radius && (s = hb_config_set_radius(cfg.get(), *radius)) != HB_OK) return status_error(s);
  if (tol && (s = hb_config_set_tolerance(cfg.get(), *tol)) != HB_OK) return status_error(s);
  if ((s = hb_config_set_threads(cfg.get(), threads)) != HB_OK) return status_error(s);

  hb_report* raw_report = nullptr;
  if ((s = hb_run_scenario(cfg.get(), &raw_report)) != HB_OK) return status_error(s);
  std::unique_ptr<hb_report, ReportDeleter> report(raw_report);

  const hb_format fmt = format == "csv" ? HB_FORMAT_CSV : HB_FORMAT_JSON;
  if ((s = hb_report_write(report.get(), fmt, out.c_str())) != HB_OK) return status_error(s);

  const std::size_t total = hb_report_total(report.get());
  const std::size_t passed = hb_report_passed(report.get());
  std::cerr << "verify: " << scenario << ": " << passed << "/" << total << " passed\n";
  return passed == total ? kExitPass : kExitFail;
}
