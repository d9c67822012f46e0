#pragma once

// Closed-form kernels.
//
// All half-space formulas are written in the single composite variable
//   v = a + conj(x)
// so that  B(x, a) = (2(m-2) Re(v) + 2 v) v / |v|^(m+2),
// which equals -2 d/dx0 E(x + conj(a)) with E(y) = conj(y) / |y|^m.

#include "hyperbergman/algebra.hpp"
#include "hyperbergman/analysis.hpp"

namespace hb {

/// Surface area of the unit sphere in R^m: 2 pi, 2 pi^2, pi^4 / 3.
double sphere_area(int m);

struct KernelParams {
  int dim = 8;
  double omega = 0.0;

  static KernelParams for_dim(int m);
};

/// Smallest |v| accepted before a kernel is declared singular.
inline constexpr double kSingularGuard = 1e-12;

/// conj(x) / |x|^m with m = x.dim().
Element cauchy_E(const Element& x);

/// Exact d/dx0 of cauchy_E: e0 / |x|^m - m x0 conj(x) / |x|^(m+2).
Element dE_dx0(const Element& x);

/// Half-space Bergman kernel; requires Re x > 0 and Re a > 0.
Element bergman_halfspace(const Element& x, const Element& a);

/// Unit-ball kernel (dim 8 only); requires |x| < 1 and |a| < 1.
///   w = 1 - conj(x) a,  B = (6 (1 - |a|^2 |x|^2) + 2 w) w / |w|^10
Element bergman_ball_unit(const Element& x, const Element& a);

/// Kernel of the ball with center p and radius r:
///   r^-8 B_unit((x - p) / r, (a - p) / r).
Element bergman_ball(const Element& p, double r, const Element& x, const Element& a);

enum class TestFunctionKind { constant, shifted_cauchy, halfspace_kernel };

/// Catalog of left-analytic functions on the half space Re x > 0:
///   constant(c)         x -> c
///   shifted_cauchy(q)   x -> E(x - q),     Re q < 0
///   halfspace_kernel(b) x -> B(x, b),      Re b > 0
/// The dimension is taken from the parameter.
FieldFunction make_test_function(TestFunctionKind kind, const Element& param);

/// x -> B_{p,r}(x, a) on the ball |x - p| < r (dim 8).
FieldFunction make_ball_kernel_function(const Element& p, double r, const Element& a);

}  // namespace hb
