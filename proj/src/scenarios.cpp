#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "hyperbergman/analysis.hpp"
#include "hyperbergman/integrate.hpp"
#include "hyperbergman/kernels.hpp"
#include "hyperbergman/sampling.hpp"
#include "hyperbergman/verify.hpp"

namespace hb::verify {

using json = nlohmann::ordered_json;

namespace {

struct ScenarioInfo {
  Scenario id;
  std::string_view name;
};

constexpr std::array<ScenarioInfo, 10> kScenarios{{
    {Scenario::algebra, "algebra"},
    {Scenario::analyticity, "analyticity"},
    {Scenario::kernel_consistency, "kernel-consistency"},
    {Scenario::cauchy_formula, "cauchy-formula"},
    {Scenario::reproduce_halfspace, "reproduce-halfspace"},
    {Scenario::reproduce_ball, "reproduce-ball"},
    {Scenario::limit_lemma, "limit-lemma"},
    {Scenario::density, "density"},
    {Scenario::complex_oracle, "complex-oracle"},
    {Scenario::all, "all"},
}};

// Default sample counts and tolerances per scenario.
constexpr int kAlgebraTrials = 10'000;
constexpr int kKernelTrials = 1'000;
constexpr int kAnalyticityPoints = 100;
constexpr double kRoundoffTol = 1e-12;
constexpr double kAnalyticTol = 1e-5;
constexpr double kHarmonicTol = 1e-6;
constexpr double kStochasticRel = 0.02;
constexpr double kLimitTol = 1e-5;
constexpr std::uint64_t kHalfspaceSamples = 10'000'000;
constexpr std::uint64_t kCauchySamples = 1'000'000;
constexpr std::uint64_t kBallSamples = 10'000'000;
constexpr std::uint64_t kDensitySamples = 2'000'000;
constexpr std::uint64_t kComplexSamples = 1'000'000;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : stream_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * stream_.next(); }

  Element element(int m, double lo, double hi) {
    Element x(m);
    for (int i = 0; i < m; ++i) x[i] = uniform(lo, hi);
    return x;
  }

  /// Real part in [re_lo, re_hi], vector part in [-vec, vec].
  Element split(int m, double re_lo, double re_hi, double vec) {
    Element x = element(m, -vec, vec);
    x[0] = uniform(re_lo, re_hi);
    return x;
  }

 private:
  sampling::UniformStream stream_;
};

class Runner {
 public:
  Runner(const ScenarioConfig& cfg, VerificationReport& report) : cfg_(cfg), report_(report) {}

  const ScenarioConfig& cfg() const { return cfg_; }

  std::vector<int> dims(std::vector<int> fallback = {2, 4, 8}) const {
    if (cfg_.dim) return {*cfg_.dim};
    return fallback;
  }

  Draw draw(Scenario s, int m) const {
    return Draw(sampling::derive_seed(cfg_.seed, static_cast<std::uint64_t>(s) + 1, static_cast<std::uint64_t>(m)));
  }

  QuadratureSpec quadrature(std::uint64_t default_samples) const {
    QuadratureSpec q;
    q.samples = cfg_.samples.value_or(default_samples);
    q.seed = cfg_.seed;
    q.radius = cfg_.radius;
    q.threads = cfg_.threads;
    return q;
  }

  double tol(double fallback) const { return cfg_.tolerance.value_or(fallback); }

  /// max(rel * |expected|, 3 std_error)
  double stochastic_tol(const Element& expected, double std_error, double rel = kStochasticRel) const {
    return std::max(cfg_.tolerance.value_or(rel) * norm(expected), 3.0 * std_error);
  }

  /// Runs `make`, stamps wall time and appends the entry. Library errors
  /// become a failed entry named `name`.
  void add(const std::string& name, const std::function<ReportEntry()>& make) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportEntry e;
    try {
      e = make();
    } catch (const std::exception& ex) {
      e = ReportEntry{};
      e.name = name;
      e.observed = json{{"error", ex.what()}};
      e.pass = false;
    }
    if (e.name.empty()) e.name = name;
    e.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.entries.push_back(std::move(e));
  }

 private:
  const ScenarioConfig& cfg_;
  VerificationReport& report_;
};

std::string tag(int m) { return "/m=" + std::to_string(m); }

json spec_inputs(const QuadratureSpec& q, int m) {
  return json{{"samples", q.samples}, {"seed", q.seed},
              {"radius", q.radius.value_or(default_truncation_radius(m))}};
}

// ---------------------------------------------------------------- algebra

/// e_i e_j straight from the seven triples.
std::pair<int, int> triple_product(int i, int j) {
  if (i == 0) return {1, j};
  if (j == 0) return {1, i};
  if (i == j) return {-1, 0};
  for (const auto& t : kOctonionTriples) {
    for (int s = 0; s < 3; ++s) {
      const int a = t[s], b = t[(s + 1) % 3], c = t[(s + 2) % 3];
      if (i == a && j == b) return {1, c};
      if (i == b && j == a) return {-1, c};
    }
  }
  return {0, 0};
}

void run_algebra(Runner& run) {
  const double tol = run.tol(kRoundoffTol);
  for (int m : run.dims()) {
    Draw d = run.draw(Scenario::algebra, m);
    std::vector<std::array<Element, 3>> triples;
    triples.reserve(kAlgebraTrials);
    for (int t = 0; t < kAlgebraTrials; ++t) {
      triples.push_back({d.element(m, -1, 1), d.element(m, -1, 1), d.element(m, -1, 1)});
    }
    const json inputs{{"dim", m}, {"trials", kAlgebraTrials}, {"coefficient_range", json::array({-1, 1})}};

    auto max_over = [&](const std::function<double(const Element&, const Element&, const Element&)>& err) {
      double worst = 0.0;
      for (const auto& [x, y, z] : triples) worst = std::max(worst, err(x, y, z));
      return worst;
    };

    run.add("algebra/norm_multiplicative" + tag(m), [&] {
      const double e = max_over([](const Element& x, const Element& y, const Element&) {
        const double ref = norm(x) * norm(y);
        return std::abs(norm(mul(x, y)) - ref) / ref;
      });
      return numeric_entry("algebra/norm_multiplicative" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    run.add("algebra/conj_antihomomorphism" + tag(m), [&] {
      const double e = max_over([](const Element& x, const Element& y, const Element&) {
        return max_abs_diff(conj(mul(x, y)), mul(conj(y), conj(x)));
      });
      return numeric_entry("algebra/conj_antihomomorphism" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    run.add("algebra/conj_product_is_norm" + tag(m), [&] {
      const double e = max_over([m](const Element& x, const Element&, const Element&) {
        const Element n2 = Element::real(m, x.norm_squared());
        return std::max(max_abs_diff(mul(x, conj(x)), n2), max_abs_diff(mul(conj(x), x), n2));
      });
      return numeric_entry("algebra/conj_product_is_norm" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    run.add("algebra/inverse" + tag(m), [&] {
      const double e = max_over([m](const Element& x, const Element&, const Element&) {
        return max_abs_diff(mul(x, inverse(x)), Element::real(m, 1.0));
      });
      return numeric_entry("algebra/inverse" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    run.add("algebra/associator_alternating" + tag(m), [&] {
      const double e = max_over([](const Element& x, const Element& y, const Element& z) {
        const Element a = associator(x, y, z);
        return std::max(max_abs_diff(a, associator(y, z, x)), max_abs_diff(a, -associator(y, x, z)));
      });
      return numeric_entry("algebra/associator_alternating" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    run.add("algebra/associator_alternative" + tag(m), [&] {
      const double e = max_over([](const Element& x, const Element& y, const Element&) {
        return std::max(max_abs(associator(x, x, y)), max_abs(associator(conj(x), x, y)));
      });
      return numeric_entry("algebra/associator_alternative" + tag(m), inputs, 0.0, e, 0.0, tol);
    });
    if (m == 8) {
      run.add("algebra/basis_table" + tag(m), [&] {
        int mismatches = 0;
        for (int i = 0; i < 8; ++i) {
          for (int j = 0; j < 8; ++j) {
            const auto [sign, k] = triple_product(i, j);
            const Element expect = static_cast<double>(sign) * Element::basis(8, k);
            if (!(mul(Element::basis(8, i), Element::basis(8, j)) == expect)) ++mismatches;
          }
        }
        return numeric_entry("algebra/basis_table" + tag(m), json{{"products", 64}}, 0.0, mismatches, 0.0, 0.0);
      });
    }
  }
}

// ---------------------------------------------------------- analyticity

void run_analyticity(Runner& run) {
  const StencilSpec stencil{};
  for (int m : run.dims()) {
    Draw d = run.draw(Scenario::analyticity, m);
    const Element a = d.split(m, 0.5, 3.0, 1.0);
    const Element q = d.split(m, -3.0, -0.5, 1.0);
    std::vector<Element> points;
    for (int i = 0; i < kAnalyticityPoints; ++i) points.push_back(d.split(m, 0.5, 5.0, 2.0));

    json pts = json::array();
    for (const auto& p : points) pts.push_back(to_json(p));
    const json base{{"dim", m}, {"step", stencil.step}, {"order", stencil.order}, {"points", pts}};

    const FieldFunction kernel = make_test_function(TestFunctionKind::halfspace_kernel, a);
    const FieldFunction cauchy = make_test_function(TestFunctionKind::shifted_cauchy, q);

    auto worst = [&](const std::function<Element(const Element&)>& op) {
      double w = 0.0;
      for (const auto& p : points) w = std::max(w, max_abs(op(p)));
      return w;
    };

    const double tol = run.tol(kAnalyticTol);
    run.add("analyticity/left_D_kernel" + tag(m), [&] {
      json in = base;
      in["a"] = to_json(a);
      const double r = worst([&](const Element& p) { return apply_left_D(kernel, p, stencil); });
      return numeric_entry("analyticity/left_D_kernel" + tag(m), in, 0.0, r, 0.0, tol);
    });
    run.add("analyticity/left_D_shifted_cauchy" + tag(m), [&] {
      json in = base;
      in["q"] = to_json(q);
      const double r = worst([&](const Element& p) { return apply_left_D(cauchy, p, stencil); });
      return numeric_entry("analyticity/left_D_shifted_cauchy" + tag(m), in, 0.0, r, 0.0, tol);
    });
    run.add("analyticity/right_D_shifted_cauchy" + tag(m), [&] {
      json in = base;
      in["q"] = to_json(q);
      const double r = worst([&](const Element& p) { return apply_right_D(cauchy, p, stencil); });
      return numeric_entry("analyticity/right_D_shifted_cauchy" + tag(m), in, 0.0, r, 0.0, tol);
    });
    run.add("analyticity/laplacian_shifted_cauchy" + tag(m), [&] {
      json in = base;
      in["q"] = to_json(q);
      const double r = worst([&](const Element& p) { return laplacian(cauchy, p, stencil); });
      return numeric_entry("analyticity/laplacian_shifted_cauchy" + tag(m), in, 0.0, r, 0.0,
                           run.tol(kHarmonicTol));
    });
    run.add("analyticity/identity_control" + tag(m), [&] {
      // D x = sum_i e_i e_i = (2 - m) e0, so the identity is analytic only for m = 2.
      const FieldFunction id = make_entire(m, [](const Element& x) { return x; });
      const Element r = apply_left_D(id, points.front(), stencil);
      return numeric_entry("analyticity/identity_control" + tag(m), json{{"dim", m}, {"point", to_json(points.front())}},
                           Element::real(m, 2.0 - m), r, 0.0, tol);
    });
    run.add("analyticity/stencil_order2_convergence" + tag(m), [&] {
      const FieldFunction e = make_entire(m, [](const Element& x) { return cauchy_E(x); });
      FieldFunction ec = e;
      ec.clearance = [](const Element& x) { return norm(x); };
      Element x = Element::real(m, 1.0);
      x[1] = 0.5;
      std::array<double, 3> res{};
      const std::array<double, 3> steps{1e-2, 5e-3, 2.5e-3};
      for (int i = 0; i < 3; ++i) res[i] = max_abs(apply_left_D(ec, x, StencilSpec{steps[i], 2}));
      const double r1 = res[0] / res[1];
      const double r2 = res[1] / res[2];
      const bool ok = r1 >= 3.5 && r1 <= 4.5 && r2 >= 3.5 && r2 <= 4.5;
      return check_entry("analyticity/stencil_order2_convergence" + tag(m),
                         json{{"dim", m}, {"point", to_json(x)}, {"steps", steps}, {"residuals", res},
                              {"ratios", json::array({r1, r2})}, {"window", json::array({3.5, 4.5})}},
                         ok);
    });
  }
}

// --------------------------------------------------- kernel-consistency

void run_kernel_consistency(Runner& run) {
  const double tol = run.tol(kRoundoffTol);
  for (int m : run.dims()) {
    Draw d = run.draw(Scenario::kernel_consistency, m);
    std::vector<std::pair<Element, Element>> pairs;
    for (int i = 0; i < kKernelTrials; ++i) pairs.emplace_back(d.split(m, 0.1, 3.0, 2.0), d.split(m, 0.1, 3.0, 2.0));
    const json inputs{{"dim", m}, {"trials", kKernelTrials}, {"re_range", json::array({0.1, 3.0})},
                      {"vector_range", json::array({-2.0, 2.0})}};

    run.add("kernel-consistency/form_equivalence" + tag(m), [&] {
      double worst = 0.0;
      for (const auto& [x, a] : pairs) {
        const Element b = bergman_halfspace(x, a);
        const Element deriv = -2.0 * dE_dx0(x + conj(a));
        worst = std::max(worst, max_abs_diff(b, deriv) / max_abs(b));
      }
      return numeric_entry("kernel-consistency/form_equivalence" + tag(m), inputs, 0.0, worst, 0.0, tol);
    });
    run.add("kernel-consistency/hermitian_symmetry" + tag(m), [&] {
      double worst = 0.0;
      for (const auto& [x, a] : pairs) {
        const Element b = bergman_halfspace(x, a);
        worst = std::max(worst, max_abs_diff(bergman_halfspace(a, x), conj(b)) / max_abs(b));
      }
      return numeric_entry("kernel-consistency/hermitian_symmetry" + tag(m), inputs, 0.0, worst, 0.0, tol);
    });
    run.add("kernel-consistency/diagonal_positive_real" + tag(m), [&] {
      bool ok = true;
      for (const auto& [x, a] : pairs) {
        const Element b = bergman_halfspace(a, a);
        Element vec = b;
        vec[0] = 0.0;
        ok = ok && b.re() > 0.0 && max_abs(vec) <= tol * b.re();
      }
      return check_entry("kernel-consistency/diagonal_positive_real" + tag(m), inputs, ok);
    });
    run.add("kernel-consistency/dE_dx0_vs_stencil" + tag(m), [&] {
      FieldFunction e = make_entire(m, [](const Element& x) { return cauchy_E(x); });
      e.clearance = [](const Element& x) { return norm(x); };
      const StencilSpec stencil{1e-4, 4};
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const Element x = pairs[static_cast<std::size_t>(i)].first + conj(pairs[static_cast<std::size_t>(i)].second);
        worst = std::max(worst, max_abs_diff(partial(e, x, 0, stencil), dE_dx0(x)));
      }
      return numeric_entry("kernel-consistency/dE_dx0_vs_stencil" + tag(m),
                           json{{"dim", m}, {"points", 50}, {"step", stencil.step}}, 0.0, worst, 0.0,
                           run.tol(1e-6));
    });
    if (m == 8) {
      run.add("kernel-consistency/ball_hermitian_symmetry" + tag(m), [&] {
        double worst = 0.0;
        for (int i = 0; i < kKernelTrials; ++i) {
          Element x = d.element(8, -1, 1);
          Element a = d.element(8, -1, 1);
          x *= d.uniform(0.0, 0.95) / norm(x);
          a *= d.uniform(0.0, 0.95) / norm(a);
          const Element b = bergman_ball_unit(x, a);
          worst = std::max(worst, max_abs_diff(bergman_ball_unit(a, x), conj(b)) / max_abs(b));
        }
        return numeric_entry("kernel-consistency/ball_hermitian_symmetry" + tag(m),
                             json{{"trials", kKernelTrials}, {"max_radius", 0.95}}, 0.0, worst, 0.0, tol);
      });
    }
  }
}

// -------------------------------------------------------- cauchy-formula

void run_cauchy_formula(Runner& run) {
  for (int m : run.dims()) {
    Draw d = run.draw(Scenario::cauchy_formula, m);
    const Element center = Element::real(m, 2.0);
    const double radius = 1.0;
    const Element q = Element::real(m, -1.0);
    const FieldFunction f = make_test_function(TestFunctionKind::shifted_cauchy, q);
    const QuadratureSpec spec = run.quadrature(kCauchySamples);

    std::vector<Element> interior;
    for (int i = 0; i < 3; ++i) {
      Element dir = d.element(m, -1, 1);
      interior.push_back(center + (0.3 * d.uniform(0.0, 1.0) / norm(dir)) * dir);
    }
    for (std::size_t i = 0; i < interior.size(); ++i) {
      const Element x = interior[i];
      const std::string name = "cauchy-formula/interior" + tag(m) + "/point=" + std::to_string(i);
      run.add(name, [&] {
        const Estimate est = cauchy_integral(f, center, radius, x, spec);
        const Element expect = f(x);
        json in = spec_inputs(spec, m);
        in.erase("radius");
        in["center"] = to_json(center);
        in["sphere_radius"] = radius;
        in["q"] = to_json(q);
        in["x"] = to_json(x);
        return numeric_entry(name, in, expect, est.value, est.std_error, run.stochastic_tol(expect, est.std_error));
      });
    }
    const std::string name = "cauchy-formula/exterior" + tag(m);
    run.add(name, [&] {
      const Element x = center + 1.8 * Element::basis(m, 1);
      const Estimate est = cauchy_integral(f, center, radius, x, spec);
      json in = spec_inputs(spec, m);
      in.erase("radius");
      in["center"] = to_json(center);
      in["sphere_radius"] = radius;
      in["q"] = to_json(q);
      in["x"] = to_json(x);
      return numeric_entry(name, in, Element(m), est.value, est.std_error, 3.0 * est.std_error);
    });
  }
}

// --------------------------------------------------- reproduce-halfspace

void reproduce_halfspace_entries(Runner& run, Scenario sid, const std::string& prefix, int m,
                                 std::uint64_t default_samples, double rel, int random_points,
                                 bool include_unit_point) {
  Draw d = run.draw(sid, m);
  const QuadratureSpec spec = run.quadrature(default_samples);
  const Element q = Element::real(m, -1.0);
  Element b = Element::real(m, 1.5);
  b[m - 1] = -0.5;

  std::vector<Element> points;
  if (include_unit_point) points.push_back(Element::real(m, 1.0));
  for (int i = 0; i < random_points; ++i) points.push_back(d.split(m, 0.5, 3.0, 1.0));

  const std::array<std::pair<std::string, FieldFunction>, 2> catalog{{
      {"shifted_cauchy", make_test_function(TestFunctionKind::shifted_cauchy, q)},
      {"halfspace_kernel", make_test_function(TestFunctionKind::halfspace_kernel, b)},
  }};
  const std::array<Element, 2> params{q, b};

  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const auto& [fname, f] = catalog[k];
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Element a = points[i];
      const std::string name = prefix + tag(m) + "/f=" + fname + "/point=" + std::to_string(i);
      run.add(name, [&] {
        const FieldFunction kernel = make_test_function(TestFunctionKind::halfspace_kernel, a);
        const Estimate est = inner_product_halfspace(f, kernel, spec, m);
        const Element expect = f(a);
        json in = spec_inputs(spec, m);
        in["f"] = fname;
        in["param"] = to_json(params[k]);
        in["a"] = to_json(a);
        return numeric_entry(name, in, expect, est.value, est.std_error,
                             run.stochastic_tol(expect, est.std_error, rel));
      });
    }
  }
}

void run_reproduce_halfspace(Runner& run) {
  for (int m : run.dims()) {
    reproduce_halfspace_entries(run, Scenario::reproduce_halfspace, "reproduce-halfspace", m, kHalfspaceSamples,
                                kStochasticRel, 5, true);
  }
}

// --------------------------------------------------------- reproduce-ball

void run_reproduce_ball(Runner& run) {
  Draw d = run.draw(Scenario::reproduce_ball, 8);
  const QuadratureSpec spec = run.quadrature(kBallSamples);
  const Element origin(8);
  const FieldFunction one = make_entire(8, [](const Element&) { return Element::real(8, 1.0); });
  json base{{"samples", spec.samples}, {"seed", spec.seed}};

  run.add("reproduce-ball/one_with_kernel_at_center", [&] {
    const FieldFunction k = make_ball_kernel_function(origin, 1.0, origin);
    const Estimate est = inner_product_ball(one, k, origin, 1.0, spec);
    const Element expect = Element::real(8, 1.0);
    json in = base;
    in["center"] = to_json(origin);
    in["radius"] = 1.0;
    in["b"] = to_json(origin);
    return numeric_entry("reproduce-ball/one_with_kernel_at_center", in, expect, est.value, est.std_error,
                         run.stochastic_tol(expect, est.std_error, 0.02));
  });
  run.add("reproduce-ball/one_with_one", [&] {
    const Estimate est = inner_product_ball(one, one, origin, 1.0, spec);
    const Element expect = Element::real(8, 0.125);
    json in = base;
    in["center"] = to_json(origin);
    in["radius"] = 1.0;
    return numeric_entry("reproduce-ball/one_with_one", in, expect, est.value, est.std_error,
                         run.stochastic_tol(expect, est.std_error, 0.01));
  });

  // Non-trivial reproductions on the unit ball and on a translated, scaled ball.
  struct Case {
    std::string name;
    Element center;
    double radius;
    Element pole;
  };
  const std::array<Case, 2> cases{{
      {"unit", origin, 1.0, Element::real(8, 2.0)},
      {"translated", Element::real(8, 3.0), 2.0, Element::real(8, -1.0)},
  }};
  for (const auto& c : cases) {
    Element dir = d.element(8, -1, 1);
    const Element b = c.center + (0.5 * c.radius * d.uniform(0.0, 1.0) / norm(dir)) * dir;
    const std::string name = "reproduce-ball/cauchy_" + c.name;
    run.add(name, [&] {
      FieldFunction f = make_entire(8, [pole = c.pole](const Element& x) { return cauchy_E(x - pole); });
      f.clearance = [pole = c.pole](const Element& x) { return norm(x - pole); };
      const FieldFunction k = make_ball_kernel_function(c.center, c.radius, b);
      const Estimate est = inner_product_ball(f, k, c.center, c.radius, spec);
      const Element expect = f(b);
      json in = base;
      in["center"] = to_json(c.center);
      in["radius"] = c.radius;
      in["pole"] = to_json(c.pole);
      in["b"] = to_json(b);
      return numeric_entry(name, in, expect, est.value, est.std_error, run.stochastic_tol(expect, est.std_error));
    });
  }
}

// ------------------------------------------------------------ limit-lemma

void run_limit_lemma(Runner& run) {
  const Element x = Element::real(8, 1.0);
  const Element a = Element::real(8, 1.0);
  const std::array<double, 4> radii{1e1, 1e2, 1e3, 1e4};

  std::array<Element, 4> values;
  std::array<double, 4> errors{};
  Element limit(8);
  bool ok = true;
  try {
    limit = bergman_halfspace(x, a);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double r = radii[i];
      values[i] = bergman_ball(Element::real(8, r), r, x, a);
      errors[i] = max_abs_diff(values[i], limit);
    }
  } catch (const std::exception&) {
    ok = false;
  }
  const json in{{"x", to_json(x)}, {"a", to_json(a)}, {"radii", radii}};

  run.add("limit-lemma/strictly_decreasing", [&] {
    if (!ok) throw Error(ErrorCode::invalid_parameter, "kernel evaluation failed");
    bool dec = true;
    for (std::size_t i = 1; i < errors.size(); ++i) dec = dec && errors[i] < errors[i - 1];
    json j = in;
    j["errors"] = errors;
    return check_entry("limit-lemma/strictly_decreasing", j, dec);
  });
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const std::string name = "limit-lemma/error_ratio/r=" + std::to_string(static_cast<long long>(radii[i]));
    run.add(name, [&, i] {
      if (!ok) throw Error(ErrorCode::invalid_parameter, "kernel evaluation failed");
      json j = in;
      j["window"] = json::array({8.0, 12.0});
      // Centre 10 and half-width 2 encode the window [8, 12].
      return numeric_entry(name, j, 10.0, errors[i - 1] / errors[i], 0.0, 2.0);
    });
  }
  run.add("limit-lemma/final_error", [&] {
    if (!ok) throw Error(ErrorCode::invalid_parameter, "kernel evaluation failed");
    json j = in;
    j["r"] = radii.back();
    return numeric_entry("limit-lemma/final_error", j, limit, values.back(), 0.0, run.tol(kLimitTol));
  });
}

// ---------------------------------------------------------------- density

void run_density(Runner& run) {
  const std::array<double, 4> deltas{0.4, 0.2, 0.1, 0.05};
  for (int m : run.dims({8})) {
    const QuadratureSpec spec = run.quadrature(kDensitySamples);
    const FieldFunction f = make_test_function(TestFunctionKind::shifted_cauchy, Element::real(m, -1.0));
    std::array<double, 4> dist{};
    std::array<double, 4> se{};
    std::string failure;
    try {
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        const FieldFunction g = translate(f, Element::real(m, deltas[i]));
        const Estimate sq = l2_distance_squared_halfspace(g, f, spec);
        dist[i] = std::sqrt(std::max(0.0, sq.value[0]));
        se[i] = dist[i] > 0.0 ? sq.std_error / (2.0 * dist[i]) : std::sqrt(sq.std_error);
      }
    } catch (const std::exception& ex) {
      failure = ex.what();
    }
    json in = spec_inputs(spec, m);
    in["f"] = "shifted_cauchy";
    in["q"] = to_json(Element::real(m, -1.0));
    in["deltas"] = deltas;
    in["distances"] = dist;
    in["std_errors"] = se;

    run.add("density/strictly_decreasing" + tag(m), [&] {
      if (!failure.empty()) throw Error(ErrorCode::invalid_parameter, failure);
      bool dec = true;
      for (std::size_t i = 1; i < dist.size(); ++i) dec = dec && dist[i] < dist[i - 1];
      return check_entry("density/strictly_decreasing" + tag(m), in, dec);
    });
    run.add("density/final_below_half_first" + tag(m), [&] {
      if (!failure.empty()) throw Error(ErrorCode::invalid_parameter, failure);
      return check_entry("density/final_below_half_first" + tag(m), in, dist.back() < 0.5 * dist.front());
    });
  }
}

// --------------------------------------------------------- complex-oracle

void run_complex_oracle(Runner& run) {
  Draw d = run.draw(Scenario::complex_oracle, 2);
  const double omega = sphere_area(2);
  run.add("complex-oracle/classical_kernel", [&] {
    double worst = 0.0;
    for (int i = 0; i < kKernelTrials; ++i) {
      const Element z = d.split(2, 0.05, 3.0, 3.0);
      const Element a = d.split(2, 0.05, 3.0, 3.0);
      const Element b = bergman_halfspace(z, a) / omega;
      const std::complex<double> zc(z[0], z[1]);
      const std::complex<double> ac(a[0], a[1]);
      const std::complex<double> w = zc + std::conj(ac);
      const std::complex<double> classical = 1.0 / (std::numbers::pi * w * w);
      const double err = std::max(std::abs(b[0] - classical.real()), std::abs(b[1] - classical.imag()));
      worst = std::max(worst, err / std::abs(classical));
    }
    return numeric_entry("complex-oracle/classical_kernel",
                         json{{"trials", kKernelTrials}, {"re_range", json::array({0.05, 3.0})},
                              {"imag_range", json::array({-3.0, 3.0})}},
                         0.0, worst, 0.0, run.tol(kRoundoffTol));
  });
  reproduce_halfspace_entries(run, Scenario::complex_oracle, "complex-oracle/reproduce", 2, kComplexSamples, 0.01,
                              3, false);
}

}  // namespace

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (const auto& s : kScenarios) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

std::string_view scenario_name(Scenario s) {
  for (const auto& info : kScenarios) {
    if (info.id == s) return info.name;
  }
  return "unknown";
}

const std::vector<Scenario>& individual_scenarios() {
  static const std::vector<Scenario> list{
      Scenario::algebra,       Scenario::analyticity,   Scenario::kernel_consistency,
      Scenario::cauchy_formula, Scenario::reproduce_halfspace, Scenario::reproduce_ball,
      Scenario::limit_lemma,   Scenario::density,       Scenario::complex_oracle};
  return list;
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.dim && !is_supported_dim(*cfg.dim)) {
    throw Error(ErrorCode::unsupported_dimension, "--dim must be 2, 4 or 8");
  }
  if (cfg.samples && *cfg.samples < kMinSamples) {
    throw Error(ErrorCode::invalid_spec, "--samples must be at least " + std::to_string(kMinSamples));
  }
  if (cfg.radius && (!(*cfg.radius > 0.0) || !std::isfinite(*cfg.radius))) {
    throw Error(ErrorCode::invalid_spec, "--radius must be positive");
  }
  if (cfg.tolerance && (!(*cfg.tolerance >= 0.0) || !std::isfinite(*cfg.tolerance))) {
    throw Error(ErrorCode::invalid_parameter, "--tol must be non-negative");
  }
}

VerificationReport run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  VerificationReport report;
  report.build_id = std::string(build_id());
  Runner run(cfg, report);

  const std::vector<Scenario> todo =
      cfg.scenario == Scenario::all ? individual_scenarios() : std::vector<Scenario>{cfg.scenario};
  for (Scenario s : todo) {
    switch (s) {
      case Scenario::algebra: run_algebra(run); break;
      case Scenario::analyticity: run_analyticity(run); break;
      case Scenario::kernel_consistency: run_kernel_consistency(run); break;
      case Scenario::cauchy_formula: run_cauchy_formula(run); break;
      case Scenario::reproduce_halfspace: run_reproduce_halfspace(run); break;
      case Scenario::reproduce_ball: run_reproduce_ball(run); break;
      case Scenario::limit_lemma: run_limit_lemma(run); break;
      case Scenario::density: run_density(run); break;
      case Scenario::complex_oracle: run_complex_oracle(run); break;
      case Scenario::all: break;
    }
  }
  return report;
}

}  // namespace hb::verify
