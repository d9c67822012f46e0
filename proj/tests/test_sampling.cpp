#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "hyperbergman/sampling.hpp"

using namespace hb::sampling;

TEST_CASE("derived seeds are distinct and stable") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t stream = 0; stream < 4; ++stream)
      for (std::uint64_t sub = 0; sub < 64; ++sub) seen.insert(derive_seed(s, stream, sub));
  CHECK(seen.size() == 4 * 4 * 64);
  CHECK(derive_seed(42, 1, 2) == derive_seed(42, 1, 2));
}

TEST_CASE("uniform stream stays in the open unit interval and repeats") {
  UniformStream a(5), b(5);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = a.next();
    CHECK(u == b.next());
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("Sobol points stratify every dimension") {
  const SobolSequence sob(SobolSequence::kMaxDims);
  std::vector<std::uint32_t> shift(sob.dims(), 0u);
  std::vector<double> p(sob.dims());
  constexpr int n = 1024;
  for (int d = 0; d < sob.dims(); ++d) {
    std::vector<int> cells(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      sob.point(i, shift, p);
      cells[static_cast<int>(p[d] * n)]++;
    }
    CAPTURE(d);
    CHECK(std::all_of(cells.begin(), cells.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("digital shift preserves stratification") {
  const SobolSequence sob(3);
  const std::vector<std::uint32_t> shift{0x9E3779B9u, 0x12345678u, 0xCAFEBABEu};
  std::vector<double> p(3);
  std::vector<int> cells(256, 0);
  for (std::uint32_t i = 0; i < 256; ++i) {
    sob.point(i, shift, p);
    cells[static_cast<int>(p[1] * 256)]++;
  }
  CHECK(std::all_of(cells.begin(), cells.end(), [](int c) { return c == 1; }));
}

TEST_CASE("Student t quantiles") {
  const StudentT cauchy(1.0);
  CHECK(cauchy.quantile(0.75) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cauchy.pdf(0.0) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
  const StudentT t3(3.0);
  CHECK(t3.quantile(0.975) == doctest::Approx(3.182446305284263).epsilon(1e-12));
  CHECK(t3.half_quantile(0.5) == doctest::Approx(t3.quantile(0.75)).epsilon(1e-12));
  CHECK_THROWS(StudentT(0.0));
}

TEST_CASE("multivariate Cauchy density and samples") {
  const MultivariateCauchy c2(2, 1.0);
  const std::vector<double> origin{0.0, 0.0};
  // Gamma(3/2) / pi^(3/2)
  CHECK(c2.pdf(origin) == doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-14));
  const MultivariateCauchy c2s(2, 2.0);
  CHECK(c2s.pdf(origin) == doctest::Approx(0.125 / std::numbers::pi).epsilon(1e-14));

  // radial median of the 2-d Cauchy: P(|Y| < sqrt(3)) = 1/2
  UniformStream u(3);
  int inside = 0;
  constexpr int n = 200000;
  std::vector<double> normals(3), y(2);
  for (int i = 0; i < n; ++i) {
    const auto g1 = box_muller(u.next(), u.next());
    const auto g2 = box_muller(u.next(), u.next());
    normals = {g1[0], g1[1], g2[0]};
    c2.sample(normals, y);
    if (std::hypot(y[0], y[1]) < std::sqrt(3.0)) ++inside;
  }
  CHECK(static_cast<double>(inside) / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("Box-Muller produces standard normals") {
  UniformStream u(17);
  double s1 = 0, s2 = 0;
  constexpr int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto g = box_muller(u.next(), u.next());
    s1 += g[0] + g[1];
    s2 += g[0] * g[0] + g[1] * g[1];
  }
  CHECK(std::abs(s1 / (2 * n)) < 0.01);
  CHECK(s2 / (2 * n) == doctest::Approx(1.0).epsilon(0.02));
}
