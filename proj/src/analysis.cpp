#include "hyperbergman/analysis.hpp"

#include <cmath>
#include <string>

namespace hb {

FieldFunction make_entire(int m, std::function<Element(const Element&)> eval) {
  require_supported_dim(m);
  FieldFunction f;
  f.dim = m;
  f.eval = std::move(eval);
  f.clearance = [](const Element&) { return std::numeric_limits<double>::infinity(); };
  return f;
}

FieldFunction translate(const FieldFunction& f, const Element& shift) {
  if (shift.dim() != f.dim) {
    throw Error(ErrorCode::dimension_mismatch, "translation has wrong dimension");
  }
  FieldFunction g;
  g.dim = f.dim;
  g.eval = [inner = f.eval, shift](const Element& x) { return inner(x + shift); };
  g.clearance = [inner = f.clearance, shift](const Element& x) { return inner(x + shift); };
  if (f.tail) {
    g.tail = TailBound{f.tail->coefficient, f.tail->exponent, f.tail->offset + norm(shift)};
  }
  for (const Element& p : f.poles) g.poles.push_back(p - shift);
  return g;
}

void validate(const StencilSpec& s) {
  if (!(s.step > 0.0) || !std::isfinite(s.step)) {
    throw Error(ErrorCode::invalid_parameter, "stencil step must be positive");
  }
  if (s.order != 2 && s.order != 4) {
    throw Error(ErrorCode::invalid_parameter, "stencil order must be 2 or 4");
  }
}

namespace {

void require_clearance(const FieldFunction& f, const Element& x, double radius) {
  if (x.dim() != f.dim) {
    throw Error(ErrorCode::dimension_mismatch, "point has wrong dimension");
  }
  const double c = f.clearance(x);
  if (!(c >= radius)) {
    throw Error(ErrorCode::outside_domain,
                "point " + to_string(x) + " has clearance " + std::to_string(c) +
                    " < required " + std::to_string(radius));
  }
}

Element shifted(const FieldFunction& f, Element x, int i, double delta) {
  x[i] += delta;
  return f(x);
}

Element partial_unchecked(const FieldFunction& f, const Element& x, int i, const StencilSpec& s) {
  const double h = s.step;
  if (s.order == 2) {
    return (shifted(f, x, i, h) - shifted(f, x, i, -h)) / (2.0 * h);
  }
  Element num = 8.0 * (shifted(f, x, i, h) - shifted(f, x, i, -h));
  num -= shifted(f, x, i, 2.0 * h) - shifted(f, x, i, -2.0 * h);
  return num / (12.0 * h);
}

Element second_partial_unchecked(const FieldFunction& f, const Element& x, int i,
                                 const StencilSpec& s, const Element& center) {
  const double h = s.step;
  if (s.order == 2) {
    return (shifted(f, x, i, h) - 2.0 * center + shifted(f, x, i, -h)) / (h * h);
  }
  Element num = 16.0 * (shifted(f, x, i, h) + shifted(f, x, i, -h));
  num -= shifted(f, x, i, 2.0 * h) + shifted(f, x, i, -2.0 * h);
  num -= 30.0 * center;
  return num / (12.0 * h * h);
}

enum class Side { left, right, left_conj };

Element apply_operator(const FieldFunction& f, const Element& x, const StencilSpec& s, Side side) {
  validate(s);
  require_clearance(f, x, kStencilClearanceSteps * s.step);
  const int m = f.dim;
  Element out(m);
  for (int i = 0; i < m; ++i) {
    const Element d = partial_unchecked(f, x, i, s);
    const Element e = Element::basis(m, i);
    switch (side) {
      case Side::left: out += mul(e, d); break;
      case Side::right: out += mul(d, e); break;
      case Side::left_conj: out += mul(conj(e), d); break;
    }
  }
  return out;
}

}  // namespace

Element partial(const FieldFunction& f, const Element& x, int i, const StencilSpec& s) {
  validate(s);
  require_clearance(f, x, kStencilClearanceSteps * s.step);
  if (i < 0 || i >= f.dim) throw Error(ErrorCode::invalid_parameter, "partial index out of range");
  return partial_unchecked(f, x, i, s);
}

Element apply_left_D(const FieldFunction& f, const Element& x, const StencilSpec& s) {
  return apply_operator(f, x, s, Side::left);
}

Element apply_right_D(const FieldFunction& f, const Element& x, const StencilSpec& s) {
  return apply_operator(f, x, s, Side::right);
}

Element apply_left_Dbar(const FieldFunction& f, const Element& x, const StencilSpec& s) {
  return apply_operator(f, x, s, Side::left_conj);
}

Element laplacian(const FieldFunction& f, const Element& x, const StencilSpec& s) {
  validate(s);
  require_clearance(f, x, kStencilClearanceSteps * s.step);
  const Element center = f(x);
  Element out(f.dim);
  for (int i = 0; i < f.dim; ++i) out += second_partial_unchecked(f, x, i, s, center);
  return out;
}

std::vector<PointResidual> analyticity_report(const FieldFunction& f,
                                              std::span<const Element> points,
                                              const StencilSpec& s, double tol) {
  validate(s);
  std::vector<PointResidual> out;
  out.reserve(points.size());
  for (const Element& p : points) {
    PointResidual r;
    r.point = p;
    try {
      r.residual = max_abs(apply_left_D(f, p, s));
      r.in_domain = true;
      r.analytic = r.residual <= tol;
    } catch (const Error&) {
      r.in_domain = false;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace hb
