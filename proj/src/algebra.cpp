#include "hyperbergman/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::unsupported_dimension: return "unsupported-dimension";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::singular_point: return "singular-point";
    case ErrorCode::outside_domain: return "point-outside-domain";
    case ErrorCode::out_of_half_space: return "out-of-half-space";
    case ErrorCode::out_of_ball: return "out-of-ball";
    case ErrorCode::point_on_boundary: return "point-on-boundary";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::invalid_spec: return "invalid-quadrature-spec";
    case ErrorCode::non_finite_sample: return "non-finite-sample";
    case ErrorCode::unknown_scenario: return "unknown-scenario";
    case ErrorCode::io_failure: return "io-failure";
  }
  return "unknown-error";
}

void require_supported_dim(int m) {
  if (!is_supported_dim(m)) {
    throw Error(ErrorCode::unsupported_dimension,
                "dimension " + std::to_string(m) + " is not one of 2, 4, 8");
  }
}

namespace {

void require_same_dim(const Element& x, const Element& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                    std::to_string(y.dim()));
  }
}

}  // namespace

Element::Element(int m) : dim_(m) { require_supported_dim(m); }

Element::Element(int m, std::span<const double> coeffs) : dim_(m) {
  require_supported_dim(m);
  if (coeffs.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(m) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i])) {
      throw Error(ErrorCode::invalid_parameter, "non-finite coefficient");
    }
    c_[i] = coeffs[i];
  }
}

Element::Element(std::initializer_list<double> coeffs)
    : Element(static_cast<int>(coeffs.size()), std::span<const double>(coeffs.begin(), coeffs.size())) {}

Element Element::basis(int m, int i) {
  Element e(m);
  if (i < 0 || i >= m) {
    throw Error(ErrorCode::invalid_parameter, "basis index out of range");
  }
  e.c_[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

Element Element::real(int m, double s) {
  Element e(m);
  e.c_[0] = s;
  return e;
}

double Element::norm_squared() const noexcept {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += c_[i] * c_[i];
  return s;
}

bool Element::is_finite() const noexcept {
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite(c_[i])) return false;
  }
  return true;
}

Element& Element::operator+=(const Element& y) {
  require_same_dim(*this, y);
  for (int i = 0; i < dim_; ++i) c_[i] += y.c_[i];
  return *this;
}

Element& Element::operator-=(const Element& y) {
  require_same_dim(*this, y);
  for (int i = 0; i < dim_; ++i) c_[i] -= y.c_[i];
  return *this;
}

Element& Element::operator*=(double s) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

Element& Element::operator/=(double s) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] /= s;
  return *this;
}

bool operator==(const Element& x, const Element& y) noexcept {
  if (x.dim_ != y.dim_) return false;
  return std::equal(x.c_.begin(), x.c_.begin() + x.dim_, y.c_.begin());
}

Element operator+(Element x, const Element& y) { return x += y; }
Element operator-(Element x, const Element& y) { return x -= y; }
Element operator-(Element x) noexcept { return x *= -1.0; }
Element operator*(double s, Element x) noexcept { return x *= s; }
Element operator*(Element x, double s) noexcept { return x *= s; }
Element operator/(Element x, double s) noexcept { return x /= s; }

MultiplicationTable build_table(int m) {
  require_supported_dim(m);

  MultiplicationTable full;
  full.dim = kMaxDim;
  for (int j = 0; j < kMaxDim; ++j) {
    full.sign[0][j] = 1;
    full.index[0][j] = j;
    full.sign[j][0] = 1;
    full.index[j][0] = j;
  }
  for (int i = 1; i < kMaxDim; ++i) {
    full.sign[i][i] = -1;
    full.index[i][i] = 0;
  }
  for (const auto& t : kOctonionTriples) {
    for (int shift = 0; shift < 3; ++shift) {
      const int a = t[shift];
      const int b = t[(shift + 1) % 3];
      const int c = t[(shift + 2) % 3];
      full.sign[a][b] = 1;
      full.index[a][b] = c;
      full.sign[b][a] = -1;
      full.index[b][a] = c;
    }
  }

  MultiplicationTable out;
  out.dim = m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out.sign[i][j] = full.sign[i][j];
      out.index[i][j] = full.index[i][j];
    }
  }
  return out;
}

const MultiplicationTable& table(int m) {
  static const MultiplicationTable t2 = build_table(2);
  static const MultiplicationTable t4 = build_table(4);
  static const MultiplicationTable t8 = build_table(8);
  switch (m) {
    case 2: return t2;
    case 4: return t4;
    case 8: return t8;
    default: require_supported_dim(m);
  }
  return t8;  // unreachable
}

Element mul(const Element& x, const Element& y) {
  require_same_dim(x, y);
  const int m = x.dim();
  const MultiplicationTable& t = table(m);
  Element out(m);
  for (int i = 0; i < m; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < m; ++j) {
      out[t.index[i][j]] += t.sign[i][j] * (xi * y[j]);
    }
  }
  return out;
}

Element conj(const Element& x) {
  Element out = -x;
  out[0] = x[0];
  return out;
}

double norm(const Element& x) noexcept { return std::sqrt(x.norm_squared()); }

Element inverse(const Element& x) {
  const double n2 = x.norm_squared();
  if (n2 == 0.0) {
    throw Error(ErrorCode::division_by_zero, "inverse of zero");
  }
  return conj(x) / n2;
}

Element associator(const Element& x, const Element& y, const Element& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

double max_abs_diff(const Element& x, const Element& y) {
  require_same_dim(x, y);
  double d = 0.0;
  for (int i = 0; i < x.dim(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

double max_abs(const Element& x) noexcept {
  double d = 0.0;
  for (int i = 0; i < x.dim(); ++i) d = std::max(d, std::abs(x[i]));
  return d;
}

std::string to_string(const Element& x) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (int i = 0; i < x.dim(); ++i) {
    if (i) os << ", ";
    os << x[i];
  }
  os << ']';
  return os.str();
}

}  // namespace hb
