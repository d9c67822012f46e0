#include "hyperbergman/kernels.hpp"

#include <cmath>
#include <numbers>

namespace hb {

double sphere_area(int m) {
  require_supported_dim(m);
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

KernelParams KernelParams::for_dim(int m) { return KernelParams{m, sphere_area(m)}; }

namespace {

double int_power(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

void require_same_dim(const Element& x, const Element& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "kernel arguments differ in dimension");
  }
}

}  // namespace

Element cauchy_E(const Element& x) {
  const double n2 = x.norm_squared();
  if (!(std::sqrt(n2) >= 1e-300)) {
    throw Error(ErrorCode::singular_point, "Cauchy kernel evaluated at 0");
  }
  const double r = std::sqrt(n2);
  return conj(x) / int_power(r, x.dim());
}

Element dE_dx0(const Element& x) {
  const double n2 = x.norm_squared();
  if (!(std::sqrt(n2) >= 1e-300)) {
    throw Error(ErrorCode::singular_point, "Cauchy kernel derivative evaluated at 0");
  }
  const int m = x.dim();
  const double rm = int_power(std::sqrt(n2), m);
  Element out = (-m * x[0] / (rm * n2)) * conj(x);
  out[0] += 1.0 / rm;
  return out;
}

Element bergman_halfspace(const Element& x, const Element& a) {
  require_same_dim(x, a);
  if (!(x.re() > 0.0) || !(a.re() > 0.0)) {
    throw Error(ErrorCode::out_of_half_space,
                "half-space kernel needs Re x > 0 and Re a > 0, got x=" + to_string(x) +
                    " a=" + to_string(a));
  }
  const int m = x.dim();
  const Element v = a + conj(x);
  const double nv = norm(v);
  if (nv < kSingularGuard) {
    throw Error(ErrorCode::singular_point, "half-space kernel with |a + conj(x)| ~ 0");
  }
  Element factor = 2.0 * v;
  factor[0] += 2.0 * (m - 2) * v.re();
  return mul(factor, v) / int_power(nv, m + 2);
}

Element bergman_ball_unit(const Element& x, const Element& a) {
  require_same_dim(x, a);
  if (x.dim() != 8) {
    throw Error(ErrorCode::unsupported_dimension, "ball kernel is defined for dim 8 only");
  }
  const double nx2 = x.norm_squared();
  const double na2 = a.norm_squared();
  if (!(nx2 < 1.0) || !(na2 < 1.0)) {
    throw Error(ErrorCode::out_of_ball,
                "ball kernel needs |x| < 1 and |a| < 1, got x=" + to_string(x) + " a=" + to_string(a));
  }
  Element w = -mul(conj(x), a);
  w[0] += 1.0;
  const double nw = norm(w);
  if (nw < kSingularGuard) {
    throw Error(ErrorCode::singular_point, "ball kernel with |1 - conj(x) a| ~ 0");
  }
  Element factor = 2.0 * w;
  factor[0] += 6.0 * (1.0 - na2 * nx2);
  return mul(factor, w) / int_power(nw, 10);
}

Element bergman_ball(const Element& p, double r, const Element& x, const Element& a) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_parameter, "ball radius must be positive");
  }
  require_same_dim(p, x);
  require_same_dim(p, a);
  return bergman_ball_unit((x - p) / r, (a - p) / r) / int_power(r, 8);
}

FieldFunction make_test_function(TestFunctionKind kind, const Element& param) {
  const int m = param.dim();
  FieldFunction f;
  f.dim = m;
  f.clearance = [](const Element& x) { return x.re(); };

  switch (kind) {
    case TestFunctionKind::constant: {
      f.eval = [param](const Element&) { return param; };
      f.tail = TailBound{norm(param), 0.0, 0.0};
      break;
    }
    case TestFunctionKind::shifted_cauchy: {
      if (!(param.re() < 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "shifted_cauchy needs Re q < 0");
      }
      f.eval = [q = param](const Element& x) { return cauchy_E(x - q); };
      // |E(x - q)| = |x - q|^(1-m)
      f.tail = TailBound{1.0, static_cast<double>(m - 1), norm(param)};
      f.poles.push_back(param);
      break;
    }
    case TestFunctionKind::halfspace_kernel: {
      if (!(param.re() > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "halfspace_kernel needs Re b > 0");
      }
      f.eval = [b = param](const Element& x) { return bergman_halfspace(x, b); };
      // |B(x, b)| <= (2m - 2) |b + conj(x)|^-m
      f.tail = TailBound{2.0 * m - 2.0, static_cast<double>(m), norm(param)};
      f.poles.push_back(-conj(param));
      break;
    }
  }
  return f;
}

FieldFunction make_ball_kernel_function(const Element& p, double r, const Element& a) {
  if (p.dim() != 8 || a.dim() != 8) {
    throw Error(ErrorCode::unsupported_dimension, "ball kernel is defined for dim 8 only");
  }
  if (!(norm(a - p) < r)) {
    throw Error(ErrorCode::out_of_ball, "kernel point outside the ball");
  }
  FieldFunction f;
  f.dim = 8;
  f.eval = [p, r, a](const Element& x) { return bergman_ball(p, r, x, a); };
  f.clearance = [p, r](const Element& x) { return r - norm(x - p); };
  return f;
}

}  // namespace hb
