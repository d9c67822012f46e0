#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hyperbergman/kernels.hpp"
#include "test_support.hpp"

using hb::Element;

TEST_CASE("unit sphere areas") {
  CHECK(hb::sphere_area(2) == doctest::Approx(6.2831853071795864769).epsilon(1e-15));
  CHECK(hb::sphere_area(4) == doctest::Approx(19.739208802178717238).epsilon(1e-15));
  CHECK(hb::sphere_area(8) == doctest::Approx(std::pow(std::numbers::pi, 4) / 3.0).epsilon(1e-15));
  CHECK(hb::KernelParams::for_dim(8).omega == hb::sphere_area(8));
}

TEST_CASE("half-space kernel on the diagonal at e0") {
  // v = 2 e0: (2*6*2 + 2*2) * 2 / 2^10
  const Element e0 = Element::basis(8, 0);
  const Element b = hb::bergman_halfspace(e0, e0);
  CHECK(std::abs(b[0] - 7.0 / 128.0) < 1e-16);
  for (int i = 1; i < 8; ++i) CHECK(b[i] == 0.0);
}

TEST_CASE("half-space kernel at a quaternion pair") {
  // -2 d/dx0 of the Cauchy kernel at x + conj(a), high-precision numerical derivative
  const Element x{1.0, 0.5, -0.3, 0.2};
  const Element a{0.7, -0.1, 0.4, 0.25};
  const Element expected{0.29827198093393417121, -0.15566993056737466179, 0.18161491899527043876,
                         0.012972494213947888483};
  CHECK(hbtest::rel_diff(hb::bergman_halfspace(x, a), expected) < 1e-14);
}

TEST_CASE("derivative of the Cauchy kernel") {
  Element y(8);
  y[0] = 2.0;
  y[3] = 1.0;
  Element expected(8);
  expected[0] = -0.00864;
  expected[3] = 0.00512;
  CHECK(hb::max_abs_diff(hb::dE_dx0(y), expected) < 1e-17);
  CHECK(hb::max_abs_diff(hb::cauchy_E(y), hb::conj(y) / std::pow(5.0, 4)) < 1e-17);
}

TEST_CASE("m=2 kernel is the classical right half-plane kernel") {
  const Element z{0.8, -0.6};
  const Element a{1.3, 0.45};
  const Element b = hb::bergman_halfspace(z, a) / hb::sphere_area(2);
  CHECK(std::abs(b[0] - 0.034645974006398984657) < 1e-16);
  CHECK(std::abs(b[1] - 0.046194632008531979543) < 1e-16);

  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const Element p = hbtest::random_halfspace_point(rng, 2, 0.05, 3.0, 3.0);
    const Element q = hbtest::random_halfspace_point(rng, 2, 0.05, 3.0, 3.0);
    const std::complex<double> w = std::complex<double>(p[0], p[1]) + std::conj(std::complex<double>(q[0], q[1]));
    const std::complex<double> c = 1.0 / (std::numbers::pi * w * w);
    const Element k = hb::bergman_halfspace(p, q) / hb::sphere_area(2);
    CHECK(hbtest::rel_diff(k, Element{c.real(), c.imag()}) < 1e-12);
  }
}

TEST_CASE("half-space kernel properties") {
  std::mt19937_64 rng(5);
  for (int m : {2, 4, 8}) {
    CAPTURE(m);
    for (int n = 0; n < 300; ++n) {
      const Element x = hbtest::random_halfspace_point(rng, m, 0.1, 3.0, 2.0);
      const Element a = hbtest::random_halfspace_point(rng, m, 0.1, 3.0, 2.0);
      const Element b = hb::bergman_halfspace(x, a);
      // closed form equals -2 dE/dx0 at x + conj(a)
      CHECK(hbtest::rel_diff(b, -2.0 * hb::dE_dx0(x + hb::conj(a))) < 1e-12);
      // Hermitian
      CHECK(hbtest::rel_diff(b, hb::conj(hb::bergman_halfspace(a, x))) < 1e-12);
      const Element d = hb::bergman_halfspace(a, a);
      CHECK(d[0] > 0.0);
      CHECK(hb::max_abs(d - Element::real(m, d[0])) <= 1e-14 * d[0]);
    }
  }
}

TEST_CASE("unit-ball kernel values") {
  const Element h = 0.5 * Element::basis(8, 0);
  CHECK(hb::bergman_ball_unit(h, h)[0] == doctest::Approx(94.892851699436061576).epsilon(1e-14));
  std::mt19937_64 rng(9);
  for (int n = 0; n < 50; ++n) {
    Element x = hbtest::random_element(rng, 8, -0.3, 0.3);
    // w = 1 when a = 0, so the kernel is the constant 8
    CHECK(hb::max_abs_diff(hb::bergman_ball_unit(x, Element(8)), Element::real(8, 8.0)) < 1e-13);
    const Element a = hbtest::random_element(rng, 8, -0.3, 0.3);
    CHECK(hbtest::rel_diff(hb::bergman_ball_unit(x, a), hb::conj(hb::bergman_ball_unit(a, x))) < 1e-12);
  }
}

TEST_CASE("ball kernel tangent at the origin matches the closed form in 1/r") {
  // B_{r e0, r}(e0, e0) = (28 - 38 t + 24 t^2 - 6 t^3) / (2 - t)^9 with t = 1/r
  const Element e0 = Element::basis(8, 0);
  const double expected[4] = {0.07572027123492690428786921, 0.05643956111954752159160725,
                              0.05485970361782398125909108, 0.05470469078174225108160235};
  double r = 10.0;
  for (double want : expected) {
    const Element b = hb::bergman_ball(r * e0, r, e0, e0);
    CAPTURE(r);
    // (x - p) / r loses about r ulps
    CHECK(std::abs(b[0] - want) < 1e-10 * want);
    r *= 10.0;
  }
  // convergence is first order in 1/r, so 1e-5 needs r > 1e4
  const Element far = hb::bergman_ball(1e4 * e0, 1e4, e0, e0);
  CHECK(far[0] - 7.0 / 128.0 == doctest::Approx(1.7194e-5).epsilon(1e-3));
}

TEST_CASE("catalog test functions") {
  const Element q{-1.0, 0.0, 0.5, 0.0};
  const Element x{1.2, -0.3, 0.1, 0.7};
  const auto f = hb::make_test_function(hb::TestFunctionKind::shifted_cauchy, q);
  CHECK(hb::max_abs_diff(f(x), hb::cauchy_E(x - q)) < 1e-16);
  CHECK(f.clearance(x) == doctest::Approx(1.2));
  REQUIRE(f.tail);
  CHECK(f.tail->exponent == 3.0);

  const Element b{1.5, 0.0, 0.0, -0.5};
  const auto g = hb::make_test_function(hb::TestFunctionKind::halfspace_kernel, b);
  CHECK(hb::max_abs_diff(g(x), hb::bergman_halfspace(x, b)) < 1e-16);

  const auto c = hb::make_test_function(hb::TestFunctionKind::constant, Element{2.0, 1.0});
  CHECK(c(Element{5.0, -3.0}) == Element{2.0, 1.0});

  CHECK_THROWS_AS(hb::make_test_function(hb::TestFunctionKind::shifted_cauchy, Element{0.5, 0.0}), hb::Error);
  CHECK_THROWS_AS(hb::make_test_function(hb::TestFunctionKind::halfspace_kernel, Element{-0.5, 0.0}), hb::Error);
}

TEST_CASE("kernel domain errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const hb::Error& e) {
      return e.code();
    }
    return hb::ErrorCode::invalid_parameter;
  };
  const Element inside = 0.5 * Element::basis(8, 0);
  CHECK(code_of([] { hb::bergman_halfspace(Element{-0.1, 0.0}, Element{1.0, 0.0}); }) ==
        hb::ErrorCode::out_of_half_space);
  CHECK(code_of([&] { hb::bergman_ball_unit(2.0 * inside, 2.0 * inside); }) == hb::ErrorCode::out_of_ball);
  CHECK(code_of([] { hb::bergman_ball_unit(Element{0.1, 0.0}, Element{0.1, 0.0}); }) ==
        hb::ErrorCode::unsupported_dimension);
  CHECK(code_of([] { hb::cauchy_E(Element(4)); }) == hb::ErrorCode::singular_point);
}
