#include "hyperbergman/sampling.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numbers>

#include "hyperbergman/error.hpp"

namespace hb::sampling {

std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub) noexcept {
  return mix(mix(mix(seed) ^ stream) ^ (sub * 0xD1B54A32D192ED03ULL));
}

UniformStream::UniformStream(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

double UniformStream::next() noexcept {
  // 53 random bits placed at cell midpoints: never 0, never 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

void UniformStream::fill(std::span<double> out) noexcept {
  for (double& u : out) u = next();
}

namespace {

struct DirectionInit {
  int degree;
  unsigned poly;
  std::array<unsigned, 5> m;
};

// new-joe-kuo-6.21201, dimensions 2..13.
constexpr std::array<DirectionInit, SobolSequence::kMaxDims - 1> kJoeKuo{{
    {1, 0, {1, 0, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0, 0}},
    {3, 1, {1, 3, 1, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0}},
    {4, 1, {1, 1, 3, 3, 0}},
    {4, 4, {1, 3, 5, 13, 0}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
}};

}  // namespace

SobolSequence::SobolSequence(int dims) : dims_(dims) {
  if (dims < 1 || dims > kMaxDims) {
    throw Error(ErrorCode::invalid_spec, "Sobol sequence supports 1.." +
                                             std::to_string(kMaxDims) + " dimensions");
  }
  directions_.resize(static_cast<std::size_t>(dims));
  for (int k = 0; k < 32; ++k) directions_[0][k] = 1u << (31 - k);
  for (int d = 1; d < dims; ++d) {
    const DirectionInit& init = kJoeKuo[static_cast<std::size_t>(d - 1)];
    auto& v = directions_[static_cast<std::size_t>(d)];
    const int s = init.degree;
    for (int k = 0; k < s; ++k) v[k] = init.m[k] << (31 - k);
    for (int k = s; k < 32; ++k) {
      std::uint32_t x = v[k - s] ^ (v[k - s] >> s);
      for (int j = 1; j < s; ++j) {
        if ((init.poly >> (s - 1 - j)) & 1u) x ^= v[k - j];
      }
      v[k] = x;
    }
  }
}

void SobolSequence::raw_point(std::uint32_t index, std::span<std::uint32_t> out) const noexcept {
  const std::uint32_t gray = index ^ (index >> 1);
  for (int d = 0; d < dims_; ++d) {
    std::uint32_t x = 0;
    const auto& v = directions_[static_cast<std::size_t>(d)];
    for (int k = 0; k < 32; ++k) {
      if ((gray >> k) & 1u) x ^= v[k];
    }
    out[d] = x;
  }
}

void SobolSequence::point(std::uint32_t index, std::span<const std::uint32_t> shift,
                          std::span<double> out) const noexcept {
  std::array<std::uint32_t, kMaxDims> raw{};
  raw_point(index, raw);
  for (int d = 0; d < dims_; ++d) {
    out[d] = (static_cast<double>(raw[d] ^ shift[d]) + 0.5) * 0x1.0p-32;
  }
}

std::array<double, 2> box_muller(double u1, double u2) noexcept {
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

StudentT::StudentT(double dof) : dof_(dof) {
  if (!(dof > 0.0) || !std::isfinite(dof)) {
    throw Error(ErrorCode::invalid_spec, "tail exponent must be positive and finite");
  }
  log_norm_ = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
              0.5 * std::log(dof * std::numbers::pi);
}

double StudentT::quantile(double u) const {
  if (dof_ == 1.0) return std::tan(std::numbers::pi * (u - 0.5));
  return boost::math::quantile(boost::math::students_t_distribution<double>(dof_), u);
}

double StudentT::half_quantile(double u) const {
  if (dof_ == 1.0) return std::tan(0.5 * std::numbers::pi * u);
  return quantile(0.5 * (1.0 + u));
}

double StudentT::pdf(double x) const {
  if (dof_ == 1.0) return 1.0 / (std::numbers::pi * (1.0 + x * x));
  return std::exp(log_norm_ - 0.5 * (dof_ + 1.0) * std::log1p(x * x / dof_));
}

MultivariateCauchy::MultivariateCauchy(int m, double scale) : m_(m), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::invalid_parameter, "Cauchy scale must be positive");
  }
  log_norm_ = std::lgamma(0.5 * (m + 1)) - std::lgamma(0.5) -
              0.5 * m * std::log(std::numbers::pi) - m * std::log(scale);
}

double MultivariateCauchy::pdf(std::span<const double> y) const noexcept {
  double r2 = 0.0;
  for (int i = 0; i < m_; ++i) r2 += y[i] * y[i];
  return std::exp(log_norm_ - 0.5 * (m_ + 1) * std::log1p(r2 / (scale_ * scale_)));
}

void MultivariateCauchy::sample(std::span<const double> normals, std::span<double> out) const noexcept {
  const double denom = std::abs(normals[static_cast<std::size_t>(m_)]);
  for (int i = 0; i < m_; ++i) out[i] = scale_ * normals[i] / denom;
}

}  // namespace hb::sampling
