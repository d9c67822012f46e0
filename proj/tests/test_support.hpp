#pragma once

#include <cmath>
#include <random>

#include "hyperbergman/algebra.hpp"

namespace hbtest {

inline hb::Element random_element(std::mt19937_64& rng, int m, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  hb::Element x(m);
  for (int i = 0; i < m; ++i) x[i] = u(rng);
  return x;
}

// Random point with real part in [re_lo, re_hi] and vector part in [-spread, spread].
inline hb::Element random_halfspace_point(std::mt19937_64& rng, int m, double re_lo, double re_hi,
                                          double spread) {
  std::uniform_real_distribution<double> r(re_lo, re_hi);
  std::uniform_real_distribution<double> v(-spread, spread);
  hb::Element x(m);
  x[0] = r(rng);
  for (int i = 1; i < m; ++i) x[i] = v(rng);
  return x;
}

inline double rel_diff(const hb::Element& x, const hb::Element& y) {
  const double scale = std::max(hb::max_abs(y), 1e-300);
  return hb::max_abs_diff(x, y) / scale;
}

}  // namespace hbtest
