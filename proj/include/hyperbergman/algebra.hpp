#pragma once

// Arithmetic in the normed division algebras of dimension 2, 4 and 8
// (complex numbers, quaternions, octonions), sharing one basis e0..e7.
//
// The octonion table is generated from the seven quaternionic triples
//   (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5)
// with e_a e_b = e_c = -e_b e_a and its two cyclic shifts. The complex and
// quaternion tables are the restrictions to {e0,e1} and {e0,e1,e2,e3}.
//
// Multiplication is not associative for dim 8. Nothing in this library
// reassociates a product: every multi-factor expression is spelled out as
// nested calls to mul() in the order the formula requires.

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "hyperbergman/error.hpp"

namespace hb {

inline constexpr int kMaxDim = 8;

/// True for 2, 4 and 8.
constexpr bool is_supported_dim(int m) noexcept { return m == 2 || m == 4 || m == 8; }

/// Throws unsupported_dimension unless m is 2, 4 or 8.
void require_supported_dim(int m);

/// A number in the algebra of dimension dim(); coefficient i multiplies e_i.
class Element {
 public:
  Element() = default;

  /// Zero of dimension m.
  explicit Element(int m);

  /// Takes exactly m finite coefficients.
  Element(int m, std::span<const double> coeffs);

  /// x0 e0 + ... ; the list length fixes the dimension.
  Element(std::initializer_list<double> coeffs);

  /// Basis vector e_i in dimension m.
  static Element basis(int m, int i);

  /// s e0 in dimension m.
  static Element real(int m, double s);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> coeffs() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  /// The e0 coefficient.
  double re() const noexcept { return c_[0]; }

  /// Sum of squared coefficients.
  double norm_squared() const noexcept;

  bool is_finite() const noexcept;

  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);
  Element& operator*=(double s) noexcept;
  Element& operator/=(double s) noexcept;

  friend bool operator==(const Element& x, const Element& y) noexcept;

 private:
  int dim_ = 8;
  std::array<double, kMaxDim> c_{};
};

Element operator+(Element x, const Element& y);
Element operator-(Element x, const Element& y);
Element operator-(Element x) noexcept;
Element operator*(double s, Element x) noexcept;
Element operator*(Element x, double s) noexcept;
Element operator/(Element x, double s) noexcept;

/// Structure constants e_i e_j = sign[i][j] * e_{index[i][j]}.
struct MultiplicationTable {
  int dim = 0;
  std::array<std::array<int, kMaxDim>, kMaxDim> sign{};
  std::array<std::array<int, kMaxDim>, kMaxDim> index{};
};

/// The seven index triples generating the octonion table.
inline constexpr std::array<std::array<int, 3>, 7> kOctonionTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

MultiplicationTable build_table(int m);

/// Shared immutable table for dimension m, built on first use.
const MultiplicationTable& table(int m);

Element mul(const Element& x, const Element& y);
Element conj(const Element& x);
double norm(const Element& x) noexcept;
Element inverse(const Element& x);

/// (xy)z - x(yz), exactly in that parenthesization.
Element associator(const Element& x, const Element& y, const Element& z);

/// Largest absolute coefficient difference; dimensions must agree.
double max_abs_diff(const Element& x, const Element& y);

/// Largest absolute coefficient.
double max_abs(const Element& x) noexcept;

std::string to_string(const Element& x);

}  // namespace hb
