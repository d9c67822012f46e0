#include "hyperbergman/hyperbergman.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hyperbergman/analysis.hpp"
#include "hyperbergman/integrate.hpp"
#include "hyperbergman/kernels.hpp"
#include "hyperbergman/verify.hpp"

struct hb_function {
  hb::FieldFunction impl;
};

struct hb_config {
  hb::verify::ScenarioConfig impl;
};

struct hb_report {
  hb::verify::VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

hb_status to_status(hb::ErrorCode code) {
  using hb::ErrorCode;
  switch (code) {
    case ErrorCode::unsupported_dimension: return HB_ERR_UNSUPPORTED_DIMENSION;
    case ErrorCode::dimension_mismatch: return HB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::division_by_zero: return HB_ERR_DIVISION_BY_ZERO;
    case ErrorCode::singular_point: return HB_ERR_SINGULAR_POINT;
    case ErrorCode::outside_domain: return HB_ERR_OUTSIDE_DOMAIN;
    case ErrorCode::out_of_half_space: return HB_ERR_OUT_OF_HALF_SPACE;
    case ErrorCode::out_of_ball: return HB_ERR_OUT_OF_BALL;
    case ErrorCode::point_on_boundary: return HB_ERR_POINT_ON_BOUNDARY;
    case ErrorCode::invalid_parameter: return HB_ERR_INVALID_PARAMETER;
    case ErrorCode::invalid_spec: return HB_ERR_INVALID_SPEC;
    case ErrorCode::non_finite_sample: return HB_ERR_NON_FINITE_SAMPLE;
    case ErrorCode::unknown_scenario: return HB_ERR_UNKNOWN_SCENARIO;
    case ErrorCode::io_failure: return HB_ERR_IO;
  }
  return HB_ERR_INTERNAL;
}

hb_status fail(hb_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
hb_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HB_OK;
  } catch (const hb::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(HB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HB_ERR_INTERNAL, "unknown exception");
  }
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

hb_status null_argument() { return fail(HB_ERR_NULL_ARGUMENT, "null argument"); }

hb::Element from_c(const hb_element& x) {
  hb::require_supported_dim(x.dim);
  return hb::Element(x.dim, std::span<const double>(x.c, static_cast<std::size_t>(x.dim)));
}

hb_element to_c(const hb::Element& x) {
  hb_element out{};
  out.dim = x.dim();
  for (int i = 0; i < x.dim(); ++i) out.c[i] = x[i];
  return out;
}

hb::QuadratureSpec from_c(const hb_quadrature& q) {
  hb::QuadratureSpec s;
  s.method = q.method == HB_LOW_DISCREPANCY ? hb::QuadratureMethod::low_discrepancy
                                            : hb::QuadratureMethod::monte_carlo;
  s.samples = q.samples;
  s.seed = q.seed;
  if (q.radius > 0.0) s.radius = q.radius;
  s.tail = q.tail;
  s.threads = q.threads;
  return s;
}

hb_estimate to_c(const hb::Estimate& e) {
  return hb_estimate{to_c(e.value), e.std_error, e.samples_used};
}

template <class Op>
hb_status unary(const hb_element* x, hb_element* out, Op op) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] { *out = to_c(op(from_c(*x))); });
}

template <class Op>
hb_status binary(const hb_element* x, const hb_element* y, hb_element* out, Op op) {
  if (any_null(x, y, out)) return null_argument();
  return guarded([&] { *out = to_c(op(from_c(*x), from_c(*y))); });
}

hb_status stencil_op(const hb_function* f, const hb_element* x, double step, int order, hb_element* out,
                     hb::Element (*op)(const hb::FieldFunction&, const hb::Element&, const hb::StencilSpec&)) {
  if (any_null(f, x, out)) return null_argument();
  return guarded([&] { *out = to_c(op(f->impl, from_c(*x), hb::StencilSpec{step, order})); });
}

}  // namespace

extern "C" {

const char* hb_status_string(hb_status status) {
  switch (status) {
    case HB_OK: return "ok";
    case HB_ERR_UNSUPPORTED_DIMENSION: return "unsupported-dimension";
    case HB_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case HB_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case HB_ERR_SINGULAR_POINT: return "singular-point";
    case HB_ERR_OUTSIDE_DOMAIN: return "point-outside-domain";
    case HB_ERR_OUT_OF_HALF_SPACE: return "out-of-half-space";
    case HB_ERR_OUT_OF_BALL: return "out-of-ball";
    case HB_ERR_POINT_ON_BOUNDARY: return "point-on-boundary";
    case HB_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case HB_ERR_INVALID_SPEC: return "invalid-quadrature-spec";
    case HB_ERR_NON_FINITE_SAMPLE: return "non-finite-sample";
    case HB_ERR_UNKNOWN_SCENARIO: return "unknown-scenario";
    case HB_ERR_IO: return "io-failure";
    case HB_ERR_NULL_ARGUMENT: return "null-argument";
    case HB_ERR_INTERNAL: return "internal-error";
  }
  return "unknown-status";
}

const char* hb_last_error(void) { return g_last_error.c_str(); }

const char* hb_build_id(void) { return hb::verify::build_id().data(); }

hb_status hb_element_make(int dim, const double* coeffs, size_t count, hb_element* out) {
  if (any_null(coeffs, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::Element(dim, std::span<const double>(coeffs, count))); });
}

hb_status hb_element_basis(int dim, int index, hb_element* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = to_c(hb::Element::basis(dim, index)); });
}

hb_status hb_mul(const hb_element* x, const hb_element* y, hb_element* out) {
  return binary(x, y, out, [](const hb::Element& a, const hb::Element& b) { return hb::mul(a, b); });
}

hb_status hb_conj(const hb_element* x, hb_element* out) {
  return unary(x, out, [](const hb::Element& a) { return hb::conj(a); });
}

hb_status hb_norm(const hb_element* x, double* out) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] { *out = hb::norm(from_c(*x)); });
}

hb_status hb_inverse(const hb_element* x, hb_element* out) {
  return unary(x, out, [](const hb::Element& a) { return hb::inverse(a); });
}

hb_status hb_associator(const hb_element* x, const hb_element* y, const hb_element* z, hb_element* out) {
  if (any_null(x, y, z, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::associator(from_c(*x), from_c(*y), from_c(*z))); });
}

hb_status hb_multiplication_table(int dim, int* sign, int* index) {
  if (any_null(sign, index)) return null_argument();
  return guarded([&] {
    const hb::MultiplicationTable& t = hb::table(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        sign[i * dim + j] = t.sign[i][j];
        index[i * dim + j] = t.index[i][j];
      }
    }
  });
}

hb_status hb_sphere_area(int dim, double* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = hb::sphere_area(dim); });
}

hb_status hb_cauchy_kernel(const hb_element* x, hb_element* out) {
  return unary(x, out, [](const hb::Element& a) { return hb::cauchy_E(a); });
}

hb_status hb_cauchy_kernel_dx0(const hb_element* x, hb_element* out) {
  return unary(x, out, [](const hb::Element& a) { return hb::dE_dx0(a); });
}

hb_status hb_bergman_halfspace(const hb_element* x, const hb_element* a, hb_element* out) {
  return binary(x, a, out, [](const hb::Element& u, const hb::Element& v) { return hb::bergman_halfspace(u, v); });
}

hb_status hb_bergman_ball_unit(const hb_element* x, const hb_element* a, hb_element* out) {
  return binary(x, a, out, [](const hb::Element& u, const hb::Element& v) { return hb::bergman_ball_unit(u, v); });
}

hb_status hb_bergman_ball(const hb_element* p, double r, const hb_element* x, const hb_element* a,
                          hb_element* out) {
  if (any_null(p, x, a, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::bergman_ball(from_c(*p), r, from_c(*x), from_c(*a))); });
}

hb_status hb_function_test(hb_test_kind kind, const hb_element* param, hb_function** out) {
  if (any_null(param, out)) return null_argument();
  return guarded([&] {
    hb::TestFunctionKind k;
    switch (kind) {
      case HB_TEST_CONSTANT: k = hb::TestFunctionKind::constant; break;
      case HB_TEST_SHIFTED_CAUCHY: k = hb::TestFunctionKind::shifted_cauchy; break;
      case HB_TEST_HALFSPACE_KERNEL: k = hb::TestFunctionKind::halfspace_kernel; break;
      default: throw hb::Error(hb::ErrorCode::invalid_parameter, "unknown test function kind");
    }
    *out = new hb_function{hb::make_test_function(k, from_c(*param))};
  });
}

hb_status hb_function_callback(int dim, hb_eval_fn fn, void* user, hb_function** out) {
  if (fn == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hb_function{hb::make_entire(dim, [fn, user, dim](const hb::Element& x) {
      const hb_element in = to_c(x);
      hb_element res{};
      res.dim = dim;
      if (fn(&in, &res, user) != 0) {
        throw hb::Error(hb::ErrorCode::invalid_parameter, "callback reported failure at " + hb::to_string(x));
      }
      if (res.dim != dim) throw hb::Error(hb::ErrorCode::dimension_mismatch, "callback returned wrong dimension");
      return from_c(res);
    })};
  });
}

hb_status hb_function_translate(const hb_function* f, const hb_element* shift, hb_function** out) {
  if (any_null(f, shift, out)) return null_argument();
  return guarded([&] { *out = new hb_function{hb::translate(f->impl, from_c(*shift))}; });
}

void hb_function_free(hb_function* f) { delete f; }

hb_status hb_function_eval(const hb_function* f, const hb_element* x, hb_element* out) {
  if (any_null(f, x, out)) return null_argument();
  return guarded([&] { *out = to_c(f->impl(from_c(*x))); });
}

hb_status hb_apply_left_d(const hb_function* f, const hb_element* x, double step, int order, hb_element* out) {
  return stencil_op(f, x, step, order, out, &hb::apply_left_D);
}

hb_status hb_apply_right_d(const hb_function* f, const hb_element* x, double step, int order, hb_element* out) {
  return stencil_op(f, x, step, order, out, &hb::apply_right_D);
}

hb_status hb_laplacian(const hb_function* f, const hb_element* x, double step, int order, hb_element* out) {
  return stencil_op(f, x, step, order, out, &hb::laplacian);
}

hb_quadrature hb_quadrature_default(void) {
  const hb::QuadratureSpec s;
  return hb_quadrature{HB_MONTE_CARLO, s.samples, s.seed, 0.0, s.tail, s.threads};
}

hb_status hb_integrate_halfspace(const hb_function* g, const hb_quadrature* q, hb_estimate* out) {
  if (any_null(g, q, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::integrate_halfspace(g->impl, from_c(*q))); });
}

hb_status hb_inner_product_halfspace(const hb_function* f, const hb_function* g, const hb_quadrature* q,
                                     hb_estimate* out) {
  if (any_null(f, g, q, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::inner_product_halfspace(f->impl, g->impl, from_c(*q), f->impl.dim)); });
}

hb_status hb_inner_product_ball(const hb_function* f, const hb_function* g, const hb_element* p, double r,
                                const hb_quadrature* q, hb_estimate* out) {
  if (any_null(f, g, p, q, out)) return null_argument();
  return guarded([&] { *out = to_c(hb::inner_product_ball(f->impl, g->impl, from_c(*p), r, from_c(*q))); });
}

hb_status hb_cauchy_integral(const hb_function* f, const hb_element* center, double radius, const hb_element* x,
                             const hb_quadrature* q, hb_estimate* out) {
  if (any_null(f, center, x, q, out)) return null_argument();
  return guarded(
      [&] { *out = to_c(hb::cauchy_integral(f->impl, from_c(*center), radius, from_c(*x), from_c(*q))); });
}

hb_status hb_l2_distance_halfspace(const hb_function* f, const hb_function* g, const hb_quadrature* q,
                                   double* out) {
  if (any_null(f, g, q, out)) return null_argument();
  return guarded([&] { *out = hb::l2_distance_halfspace(f->impl, g->impl, from_c(*q)); });
}

hb_status hb_config_create(const char* scenario, hb_config** out) {
  if (any_null(scenario, out)) return null_argument();
  return guarded([&] {
    const auto s = hb::verify::parse_scenario(scenario);
    if (!s) throw hb::Error(hb::ErrorCode::unknown_scenario, std::string("unknown scenario '") + scenario + "'");
    auto* cfg = new hb_config{};
    cfg->impl.scenario = *s;
    *out = cfg;
  });
}

void hb_config_free(hb_config* cfg) { delete cfg; }

hb_status hb_config_set_dim(hb_config* cfg, int dim) {
  if (any_null(cfg)) return null_argument();
  return guarded([&] {
    hb::require_supported_dim(dim);
    cfg->impl.dim = dim;
  });
}

hb_status hb_config_set_seed(hb_config* cfg, uint64_t seed) {
  if (any_null(cfg)) return null_argument();
  cfg->impl.seed = seed;
  return HB_OK;
}

hb_status hb_config_set_samples(hb_config* cfg, uint64_t samples) {
  if (any_null(cfg)) return null_argument();
  if (samples < hb::kMinSamples) return fail(HB_ERR_INVALID_SPEC, "samples below minimum");
  cfg->impl.samples = samples;
  return HB_OK;
}

hb_status hb_config_set_radius(hb_config* cfg, double radius) {
  if (any_null(cfg)) return null_argument();
  if (!(radius > 0.0)) return fail(HB_ERR_INVALID_SPEC, "radius must be positive");
  cfg->impl.radius = radius;
  return HB_OK;
}

hb_status hb_config_set_tolerance(hb_config* cfg, double tol) {
  if (any_null(cfg)) return null_argument();
  if (!(tol >= 0.0)) return fail(HB_ERR_INVALID_PARAMETER, "tolerance must be non-negative");
  cfg->impl.tolerance = tol;
  return HB_OK;
}

hb_status hb_config_set_threads(hb_config* cfg, unsigned threads) {
  if (any_null(cfg)) return null_argument();
  cfg->impl.threads = threads;
  return HB_OK;
}

hb_status hb_run_scenario(const hb_config* cfg, hb_report** out) {
  if (any_null(cfg, out)) return null_argument();
  return guarded([&] { *out = new hb_report{hb::verify::run_scenario(cfg->impl)}; });
}

void hb_report_free(hb_report* report) { delete report; }

size_t hb_report_total(const hb_report* report) { return report ? report->impl.total() : 0; }

size_t hb_report_passed(const hb_report* report) { return report ? report->impl.passed() : 0; }

hb_status hb_report_write(const hb_report* report, hb_format format, const char* path) {
  if (any_null(report)) return null_argument();
  return guarded([&] {
    const auto fmt = format == HB_FORMAT_CSV ? hb::verify::ReportFormat::csv : hb::verify::ReportFormat::json;
    hb::verify::emit_report(report->impl, fmt, path ? path : "");
  });
}

hb_status hb_report_render(const hb_report* report, hb_format format, char** out) {
  if (any_null(report, out)) return null_argument();
  return guarded([&] {
    const auto fmt = format == HB_FORMAT_CSV ? hb::verify::ReportFormat::csv : hb::verify::ReportFormat::json;
    const std::string text = hb::verify::render_report(report->impl, fmt);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void hb_string_free(char* s) { std::free(s); }

}  // extern "C"
