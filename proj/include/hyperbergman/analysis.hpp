#pragma once

// Finite-difference versions of the generalized Cauchy-Riemann operator
//   D f  = sum_i e_i (df/dx_i)      (left action)
//   f D  = sum_i (df/dx_i) e_i      (right action)
//   Dbar = sum_i conj(e_i) d/dx_i
// and of the componentwise Laplacian.

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hyperbergman/algebra.hpp"

namespace hb {

/// |f(x)| <= coefficient * (|x| - offset)^(-exponent) whenever |x| > offset.
/// Integrators use it to bound what truncation to a finite radius discards.
struct TailBound {
  double coefficient = 0.0;
  double exponent = 0.0;
  double offset = 0.0;
};

/// An Element-valued map on a region of R^m.
///
/// `clearance(x)` is the distance from x to the complement of the region
/// where `eval` is defined and smooth (+inf for all of R^m). The optional
/// hints do not change the function; they only steer quadrature.
struct FieldFunction {
  int dim = 8;
  std::function<Element(const Element&)> eval;
  std::function<double(const Element&)> clearance;

  std::optional<TailBound> tail;
  /// Singular points outside the integration region near which the
  /// function concentrates its mass.
  std::vector<Element> poles;

  Element operator()(const Element& x) const { return eval(x); }
  bool contains(const Element& x) const { return clearance(x) > 0.0; }
};

/// Entire function of dimension m (clearance +inf, no hints).
FieldFunction make_entire(int m, std::function<Element(const Element&)> eval);

/// x -> f(x + shift).
FieldFunction translate(const FieldFunction& f, const Element& shift);

struct StencilSpec {
  double step = 1e-3;
  int order = 4;
};

void validate(const StencilSpec& s);

/// Points whose clearance is below this many steps are rejected.
inline constexpr double kStencilClearanceSteps = 10.0;

/// Central-difference partial derivative df/dx_i at x.
Element partial(const FieldFunction& f, const Element& x, int i, const StencilSpec& s);

Element apply_left_D(const FieldFunction& f, const Element& x, const StencilSpec& s = {});
Element apply_right_D(const FieldFunction& f, const Element& x, const StencilSpec& s = {});
Element apply_left_Dbar(const FieldFunction& f, const Element& x, const StencilSpec& s = {});
Element laplacian(const FieldFunction& f, const Element& x, const StencilSpec& s = {});

struct PointResidual {
  Element point;
  bool in_domain = false;
  double residual = std::numeric_limits<double>::quiet_NaN();  // max |component|
  bool analytic = false;
};

/// Left-D residual at each point; points too close to the domain boundary
/// are flagged with in_domain = false and analytic = false.
std::vector<PointResidual> analyticity_report(const FieldFunction& f,
                                              std::span<const Element> points,
                                              const StencilSpec& s = {},
                                              double tol = 1e-5);

}  // namespace hb
