// Acceptance suite: one PASS/FAIL line per criterion, each checked against
// its runtime budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbergman/verify.hpp"

using namespace hb::verify;

namespace {

struct Criterion {
  int id;
  std::string title;
  Scenario scenario;
  double budget_s;
  // Entries that count toward this criterion; the rest are reported but ignored.
  std::function<bool(std::string_view)> selects;
};

bool any(std::string_view) { return true; }

bool contains(std::string_view name, std::string_view part) { return name.find(part) != std::string_view::npos; }

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string_view(argv[i]) == "-v") verbose = true;
  }

  const std::vector<Criterion> criteria = {
      {1, "algebra identities and octonion table", Scenario::algebra, 5.0, any},
      {2, "kernel closed form equals -2 d0 E(x + conj a)", Scenario::kernel_consistency, 1.0,
       [](std::string_view n) { return contains(n, "form_equivalence"); }},
      {3, "analyticity and harmonicity residuals", Scenario::analyticity, 10.0,
       [](std::string_view n) { return contains(n, "left_D_") || contains(n, "laplacian_"); }},
      {4, "Cauchy integral formula on the unit sphere", Scenario::cauchy_formula, 120.0, any},
      {5, "half-space reproducing formula", Scenario::reproduce_halfspace, 900.0, any},
      {6, "ball reproducing formula", Scenario::reproduce_ball, 300.0,
       [](std::string_view n) { return contains(n, "one_with_"); }},
      {7, "ball kernel tends to the half-space kernel", Scenario::limit_lemma, 1.0, any},
      {8, "shifted functions converge in L2", Scenario::density, 300.0, any},
      {9, "complex case matches the classical kernel", Scenario::complex_oracle, 120.0, any},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    ScenarioConfig cfg;
    cfg.scenario = c.scenario;
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport report = run_scenario(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t counted = 0, passed = 0;
    std::vector<const ReportEntry*> bad;
    for (const auto& e : report.entries) {
      if (!c.selects(e.name)) continue;
      ++counted;
      if (e.pass) {
        ++passed;
      } else {
        bad.push_back(&e);
      }
    }
    const bool in_time = secs < c.budget_s;
    const bool ok = counted > 0 && passed == counted && in_time;
    if (!ok) ++failed;

    std::printf("[%s] criterion %d: %s (%zu/%zu checks, %.2f s of %.0f s budget)\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), passed, counted, secs, c.budget_s);
    if (!in_time) std::printf("       over time budget\n");
    for (const ReportEntry* e : bad) {
      std::printf("       %s: expected %s observed %s tolerance %.3g\n", e->name.c_str(), e->expected.dump().c_str(),
                  e->observed.dump().c_str(), e->tolerance);
    }
    if (verbose) {
      for (const auto& e : report.entries) {
        std::printf("       %-60s %s %.1f ms\n", e.name.c_str(), e.pass ? "pass" : "FAIL", e.wall_time_ms);
      }
    }
    std::fflush(stdout);
  }

  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
