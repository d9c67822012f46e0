#pragma once

// Random and quasi-random point streams plus the distribution transforms
// used by the integrators. Everything here is deterministic given its seed
// and independent of the standard library's distribution implementations.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hb::sampling {

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub = 0) noexcept;

/// Uniform doubles in the open interval (0, 1).
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed);
  double next() noexcept;
  void fill(std::span<double> out) noexcept;

 private:
  std::mt19937_64 engine_;
};

/// Sobol points (Joe-Kuo direction numbers) with a per-dimension XOR
/// digital shift. Supports up to kMaxDims dimensions and 2^32 points.
class SobolSequence {
 public:
  static constexpr int kMaxDims = 13;

  explicit SobolSequence(int dims);

  int dims() const noexcept { return dims_; }

  /// Raw 32-bit coordinates of point `index` (Gray-code order).
  void raw_point(std::uint32_t index, std::span<std::uint32_t> out) const noexcept;

  /// Point `index` XOR-shifted by `shift`, mapped to cell midpoints in (0, 1).
  void point(std::uint32_t index, std::span<const std::uint32_t> shift,
             std::span<double> out) const noexcept;

 private:
  int dims_;
  std::vector<std::array<std::uint32_t, 32>> directions_;
};

/// Two independent standard normals from two uniforms in (0, 1).
std::array<double, 2> box_muller(double u1, double u2) noexcept;

/// Per-coordinate Student-t law with `dof` degrees of freedom and unit
/// scale; dof = 1 is the Cauchy law and uses the closed-form quantile.
class StudentT {
 public:
  explicit StudentT(double dof);
  double dof() const noexcept { return dof_; }
  double quantile(double u) const;
  double pdf(double x) const;
  /// |T| for T ~ Student-t: quantile((1 + u) / 2).
  double half_quantile(double u) const;

 private:
  double dof_;
  double log_norm_;
};

/// Multivariate Cauchy law (Student-t with one degree of freedom) in
/// dimension m with isotropic scale.
class MultivariateCauchy {
 public:
  MultivariateCauchy(int m, double scale);
  double scale() const noexcept { return scale_; }
  /// Density at offset y from the center.
  double pdf(std::span<const double> y) const noexcept;
  /// Offset from m + 1 standard normals: scale * z[0..m) / |z[m]|.
  void sample(std::span<const double> normals, std::span<double> out) const noexcept;

 private:
  int m_;
  double scale_;
  double log_norm_;
};

}  // namespace hb::sampling
