#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "hyperbergman/hyperbergman.h"

namespace {

hb_element real8(double s) {
  hb_element e{};
  e.dim = 8;
  e.c[0] = s;
  return e;
}

int square_cb(const hb_element* x, hb_element* out, void*) {
  out->dim = x->dim;
  for (int i = 0; i < 8; ++i) out->c[i] = 0.0;
  out->c[0] = x->c[0] * x->c[0];
  return 0;
}

int failing_cb(const hb_element*, hb_element*, void*) { return 1; }

}  // namespace

TEST_CASE("element operations") {
  hb_element e1{}, e2{}, p{};
  REQUIRE(hb_element_basis(8, 1, &e1) == HB_OK);
  REQUIRE(hb_element_basis(8, 2, &e2) == HB_OK);
  REQUIRE(hb_mul(&e1, &e2, &p) == HB_OK);
  CHECK(p.c[3] == 1.0);
  double n = 0;
  const double c[] = {3.0, 4.0};
  hb_element z{};
  REQUIRE(hb_element_make(2, c, 2, &z) == HB_OK);
  REQUIRE(hb_norm(&z, &n) == HB_OK);
  CHECK(n == 5.0);
  int sign[64], index[64];
  REQUIRE(hb_multiplication_table(8, sign, index) == HB_OK);
  CHECK(sign[1 * 8 + 7] == 1);
  CHECK(index[1 * 8 + 7] == 6);
}

TEST_CASE("errors map to status codes with a message") {
  hb_element zero = real8(0.0), out{};
  CHECK(hb_inverse(&zero, &out) == HB_ERR_DIVISION_BY_ZERO);
  CHECK(std::strlen(hb_last_error()) > 0);
  CHECK(std::string(hb_status_string(HB_ERR_DIVISION_BY_ZERO)) == "division-by-zero");
  hb_element bad{};
  bad.dim = 3;
  CHECK(hb_conj(&bad, &out) == HB_ERR_UNSUPPORTED_DIMENSION);
  CHECK(hb_conj(nullptr, &out) == HB_ERR_NULL_ARGUMENT);
  hb_element e = real8(1.0);
  CHECK(hb_conj(&e, &out) == HB_OK);
  CHECK(std::strlen(hb_last_error()) == 0);
}

TEST_CASE("kernel value") {
  hb_element e0 = real8(1.0), k{};
  REQUIRE(hb_bergman_halfspace(&e0, &e0, &k) == HB_OK);
  CHECK(k.c[0] == doctest::Approx(7.0 / 128.0));
  hb_element neg = real8(-1.0);
  CHECK(hb_bergman_halfspace(&neg, &e0, &k) == HB_ERR_OUT_OF_HALF_SPACE);
}

TEST_CASE("functions, operators and quadrature") {
  hb_element q = real8(-1.0), a = real8(1.0);
  hb_function* f = nullptr;
  hb_function* k = nullptr;
  REQUIRE(hb_function_test(HB_TEST_SHIFTED_CAUCHY, &q, &f) == HB_OK);
  REQUIRE(hb_function_test(HB_TEST_HALFSPACE_KERNEL, &a, &k) == HB_OK);
  hb_element fa{}, d{};
  REQUIRE(hb_function_eval(f, &a, &fa) == HB_OK);
  CHECK(fa.c[0] == doctest::Approx(1.0 / 128.0));
  REQUIRE(hb_apply_left_d(f, &a, 1e-3, 4, &d) == HB_OK);
  for (double v : d.c) CHECK(std::abs(v) < 1e-5);

  hb_quadrature quad = hb_quadrature_default();
  CHECK(quad.samples == 1000000);
  CHECK(quad.seed == 42);
  quad.samples = 200000;
  hb_estimate est{};
  REQUIRE(hb_inner_product_halfspace(f, k, &quad, &est) == HB_OK);
  CHECK(std::abs(est.value.c[0] - 1.0 / 128.0) < std::max(0.03 / 128.0, 3 * est.std_error));
  quad.samples = 10;
  CHECK(hb_inner_product_halfspace(f, k, &quad, &est) == HB_ERR_INVALID_SPEC);
  hb_function_free(f);
  hb_function_free(k);
  hb_function_free(nullptr);
}

TEST_CASE("callback functions") {
  hb_function* f = nullptr;
  REQUIRE(hb_function_callback(4, square_cb, nullptr, &f) == HB_OK);
  hb_element x{};
  x.dim = 4;
  x.c[0] = 1.5;
  hb_element lap{};
  REQUIRE(hb_laplacian(f, &x, 1e-3, 4, &lap) == HB_OK);
  CHECK(lap.c[0] == doctest::Approx(2.0).epsilon(1e-6));
  hb_function_free(f);

  REQUIRE(hb_function_callback(4, failing_cb, nullptr, &f) == HB_OK);
  hb_element out{};
  CHECK(hb_function_eval(f, &x, &out) == HB_ERR_INVALID_PARAMETER);
  hb_function_free(f);
}

TEST_CASE("scenario run and report rendering") {
  hb_config* cfg = nullptr;
  CHECK(hb_config_create("nope", &cfg) == HB_ERR_UNKNOWN_SCENARIO);
  REQUIRE(hb_config_create("limit-lemma", &cfg) == HB_OK);
  CHECK(hb_config_set_dim(cfg, 5) == HB_ERR_UNSUPPORTED_DIMENSION);
  CHECK(hb_config_set_samples(cfg, 5) == HB_ERR_INVALID_SPEC);
  hb_report* rep = nullptr;
  REQUIRE(hb_run_scenario(cfg, &rep) == HB_OK);
  CHECK(hb_report_total(rep) == 5);
  char* text = nullptr;
  REQUIRE(hb_report_render(rep, HB_FORMAT_CSV, &text) == HB_OK);
  CHECK(std::string(text).rfind("name,inputs,", 0) == 0);
  hb_string_free(text);
  CHECK(hb_report_write(rep, HB_FORMAT_JSON, "/nonexistent-dir/x.json") == HB_ERR_IO);
  hb_report_free(rep);
  hb_config_free(cfg);
}
