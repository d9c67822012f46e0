#pragma once

// Seeded stochastic and quasi-random quadrature over the half space
// Re x > 0, balls and spheres in R^m, and the integrals built on it.
//
// Samples are generated in fixed-size blocks. Each block owns a sub-seed
// derived from (seed, block index) and a running (count, mean, M2) summary;
// block summaries are merged by a fixed pairwise tree. The result is
// therefore bitwise identical for any number of worker threads.

#include <cstdint>
#include <optional>

#include "hyperbergman/algebra.hpp"
#include "hyperbergman/analysis.hpp"

namespace hb {

enum class QuadratureMethod { monte_carlo, low_discrepancy };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::monte_carlo;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  /// Half-space truncation radius; unset means default_truncation_radius(m).
  std::optional<double> radius;
  /// Degrees of freedom of the per-coordinate Student-t proposal; 1 = Cauchy.
  double tail = 1.0;
  /// Worker threads; 0 = hardware concurrency. Does not affect results.
  unsigned threads = 0;
};

inline constexpr std::uint64_t kMinSamples = 1000;
inline constexpr int kLowDiscrepancyReplicates = 16;
inline constexpr std::uint64_t kBlockSize = 8192;

double default_truncation_radius(int m);

void validate(const QuadratureSpec& spec);

struct Estimate {
  Element value;
  /// Max over components of the standard error, plus any truncation bound.
  double std_error = 0.0;
  std::uint64_t samples_used = 0;
};

/// Upper bound on the half-space integral of |g| over |x| > radius given
/// |g| <= C (|x| - offset)^-p there. Throws if p <= m (not integrable).
double halfspace_tail_bound(const TailBound& bound, int m, double radius);

/// Importance-sampled integral of g over Re x > 0.
///
/// Proposal: a defensive mixture of a product of Student-t coordinates
/// (half-t for x0) and, for every pole hint of g, a multivariate Cauchy
/// centered at the pole with scale |Re pole|, folded into x0 > 0.
Estimate integrate_halfspace(const FieldFunction& g, const QuadratureSpec& spec);

/// (f, g) = (1/omega_m) * integral over Re x > 0 of conj(g) f.
Estimate inner_product_halfspace(const FieldFunction& f, const FieldFunction& g,
                                 const QuadratureSpec& spec, int m);

/// (f, g) on the ball |x - p| < r with the directional weights
///   (1/omega_8) * integral of (conj(g) conj(n)) (n f),  n = (x - p) / |x - p|.
Estimate inner_product_ball(const FieldFunction& f, const FieldFunction& g, const Element& p,
                            double r, const QuadratureSpec& spec);

/// (1/omega_m) * integral over |y - center| = radius of E(y - x) (n(y) f(y)) dS.
Estimate cauchy_integral(const FieldFunction& f, const Element& center, double radius,
                         const Element& x, const QuadratureSpec& spec);

/// sqrt of the half-space integral of |f - g|^2.
double l2_distance_halfspace(const FieldFunction& f, const FieldFunction& g,
                             const QuadratureSpec& spec);

/// The half-space integral of |f - g|^2 with its error estimate.
Estimate l2_distance_squared_halfspace(const FieldFunction& f, const FieldFunction& g,
                                       const QuadratureSpec& spec);

}  // namespace hb
