#ifndef HYPERBERGMAN_H
#define HYPERBERGMAN_H

/*
 * C interface to the hyperbergman library.
 *
 * Every function returns an hb_status. On failure a description of the most
 * recent error on the calling thread is available from hb_last_error().
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function. Freeing NULL is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HB_BUILDING_LIBRARY)
#define HB_API __declspec(dllexport)
#else
#define HB_API __declspec(dllimport)
#endif
#else
#define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_UNSUPPORTED_DIMENSION = 1,
  HB_ERR_DIMENSION_MISMATCH = 2,
  HB_ERR_DIVISION_BY_ZERO = 3,
  HB_ERR_SINGULAR_POINT = 4,
  HB_ERR_OUTSIDE_DOMAIN = 5,
  HB_ERR_OUT_OF_HALF_SPACE = 6,
  HB_ERR_OUT_OF_BALL = 7,
  HB_ERR_POINT_ON_BOUNDARY = 8,
  HB_ERR_INVALID_PARAMETER = 9,
  HB_ERR_INVALID_SPEC = 10,
  HB_ERR_NON_FINITE_SAMPLE = 11,
  HB_ERR_UNKNOWN_SCENARIO = 12,
  HB_ERR_IO = 13,
  HB_ERR_NULL_ARGUMENT = 14,
  HB_ERR_INTERNAL = 15
} hb_status;

/* A number in the algebra of dimension dim (2, 4 or 8); c[i] multiplies e_i.
 * Coefficients at index >= dim are ignored. */
typedef struct hb_element {
  int dim;
  double c[8];
} hb_element;

HB_API const char* hb_status_string(hb_status status);
HB_API const char* hb_last_error(void);
HB_API const char* hb_build_id(void);

/* ---- algebra ---- */
HB_API hb_status hb_element_make(int dim, const double* coeffs, size_t count, hb_element* out);
HB_API hb_status hb_element_basis(int dim, int index, hb_element* out);
HB_API hb_status hb_mul(const hb_element* x, const hb_element* y, hb_element* out);
HB_API hb_status hb_conj(const hb_element* x, hb_element* out);
HB_API hb_status hb_norm(const hb_element* x, double* out);
HB_API hb_status hb_inverse(const hb_element* x, hb_element* out);
HB_API hb_status hb_associator(const hb_element* x, const hb_element* y, const hb_element* z,
                               hb_element* out);
/* e_i e_j = sign[i*dim + j] * e_{index[i*dim + j]}; both arrays hold dim*dim ints. */
HB_API hb_status hb_multiplication_table(int dim, int* sign, int* index);

/* ---- kernels ---- */
HB_API hb_status hb_sphere_area(int dim, double* out);
HB_API hb_status hb_cauchy_kernel(const hb_element* x, hb_element* out);
HB_API hb_status hb_cauchy_kernel_dx0(const hb_element* x, hb_element* out);
HB_API hb_status hb_bergman_halfspace(const hb_element* x, const hb_element* a, hb_element* out);
HB_API hb_status hb_bergman_ball_unit(const hb_element* x, const hb_element* a, hb_element* out);
HB_API hb_status hb_bergman_ball(const hb_element* p, double r, const hb_element* x,
                                 const hb_element* a, hb_element* out);

/* ---- field functions ---- */
typedef struct hb_function hb_function;

typedef enum hb_test_kind {
  HB_TEST_CONSTANT = 0,
  HB_TEST_SHIFTED_CAUCHY = 1,
  HB_TEST_HALFSPACE_KERNEL = 2
} hb_test_kind;

/* Callback evaluating f(x); must be reentrant (integrators may call it from
 * several threads). Return nonzero to signal failure. */
typedef int (*hb_eval_fn)(const hb_element* x, hb_element* out, void* user);

HB_API hb_status hb_function_test(hb_test_kind kind, const hb_element* param, hb_function** out);
/* Function defined on all of R^dim backed by a callback. */
HB_API hb_status hb_function_callback(int dim, hb_eval_fn fn, void* user, hb_function** out);
/* x -> f(x + shift). */
HB_API hb_status hb_function_translate(const hb_function* f, const hb_element* shift, hb_function** out);
HB_API void hb_function_free(hb_function* f);
HB_API hb_status hb_function_eval(const hb_function* f, const hb_element* x, hb_element* out);

/* ---- differential operators (order 2 or 4 central stencils) ---- */
HB_API hb_status hb_apply_left_d(const hb_function* f, const hb_element* x, double step, int order,
                                 hb_element* out);
HB_API hb_status hb_apply_right_d(const hb_function* f, const hb_element* x, double step, int order,
                                  hb_element* out);
HB_API hb_status hb_laplacian(const hb_function* f, const hb_element* x, double step, int order,
                              hb_element* out);

/* ---- quadrature ---- */
typedef enum hb_method { HB_MONTE_CARLO = 0, HB_LOW_DISCREPANCY = 1 } hb_method;

typedef struct hb_quadrature {
  hb_method method;
  uint64_t samples;
  uint64_t seed;
  double radius; /* <= 0: dimension default */
  double tail;   /* Student-t degrees of freedom of the proposal; 1 = Cauchy */
  unsigned threads;
} hb_quadrature;

typedef struct hb_estimate {
  hb_element value;
  double std_error;
  uint64_t samples_used;
} hb_estimate;

HB_API hb_quadrature hb_quadrature_default(void);
HB_API hb_status hb_integrate_halfspace(const hb_function* g, const hb_quadrature* q, hb_estimate* out);
HB_API hb_status hb_inner_product_halfspace(const hb_function* f, const hb_function* g,
                                            const hb_quadrature* q, hb_estimate* out);
HB_API hb_status hb_inner_product_ball(const hb_function* f, const hb_function* g, const hb_element* p,
                                       double r, const hb_quadrature* q, hb_estimate* out);
HB_API hb_status hb_cauchy_integral(const hb_function* f, const hb_element* center, double radius,
                                    const hb_element* x, const hb_quadrature* q, hb_estimate* out);
HB_API hb_status hb_l2_distance_halfspace(const hb_function* f, const hb_function* g,
                                          const hb_quadrature* q, double* out);

/* ---- verification scenarios ---- */
typedef struct hb_config hb_config;
typedef struct hb_report hb_report;

typedef enum hb_format { HB_FORMAT_JSON = 0, HB_FORMAT_CSV = 1 } hb_format;

/* scenario: algebra, analyticity, kernel-consistency, cauchy-formula,
 * reproduce-halfspace, reproduce-ball, limit-lemma, density,
 * complex-oracle or all. */
HB_API hb_status hb_config_create(const char* scenario, hb_config** out);
HB_API void hb_config_free(hb_config* cfg);
HB_API hb_status hb_config_set_dim(hb_config* cfg, int dim);
HB_API hb_status hb_config_set_seed(hb_config* cfg, uint64_t seed);
HB_API hb_status hb_config_set_samples(hb_config* cfg, uint64_t samples);
HB_API hb_status hb_config_set_radius(hb_config* cfg, double radius);
HB_API hb_status hb_config_set_tolerance(hb_config* cfg, double tol);
HB_API hb_status hb_config_set_threads(hb_config* cfg, unsigned threads);

HB_API hb_status hb_run_scenario(const hb_config* cfg, hb_report** out);
HB_API void hb_report_free(hb_report* report);
HB_API size_t hb_report_total(const hb_report* report);
HB_API size_t hb_report_passed(const hb_report* report);
/* Writes to path; NULL, "" or "-" means stdout. */
HB_API hb_status hb_report_write(const hb_report* report, hb_format format, const char* path);
/* Rendered report; release with hb_string_free. */
HB_API hb_status hb_report_render(const hb_report* report, hb_format format, char** out);
HB_API void hb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HYPERBERGMAN_H */
