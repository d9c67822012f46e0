#include "hyperbergman/integrate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "hyperbergman/kernels.hpp"
#include "hyperbergman/sampling.hpp"

namespace hb {

double default_truncation_radius(int m) {
  require_supported_dim(m);
  switch (m) {
    case 2: return 1e6;
    case 4: return 1e3;
    default: return 50.0;
  }
}

void validate(const QuadratureSpec& spec) {
  if (spec.samples < kMinSamples) {
    throw Error(ErrorCode::invalid_spec, "at least " + std::to_string(kMinSamples) + " samples required");
  }
  if (spec.radius && (!(*spec.radius > 0.0) || !std::isfinite(*spec.radius))) {
    throw Error(ErrorCode::invalid_spec, "truncation radius must be positive and finite");
  }
  if (!(spec.tail > 0.0) || !std::isfinite(spec.tail)) {
    throw Error(ErrorCode::invalid_spec, "tail exponent must be positive and finite");
  }
  if (spec.method == QuadratureMethod::low_discrepancy &&
      spec.samples / kLowDiscrepancyReplicates > (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::invalid_spec, "too many low-discrepancy samples");
  }
}

double halfspace_tail_bound(const TailBound& bound, int m, double radius) {
  if (bound.coefficient == 0.0) return 0.0;
  if (!(bound.exponent > m)) {
    throw Error(ErrorCode::invalid_parameter, "integrand is not absolutely integrable on the half space");
  }
  if (!(radius > bound.offset)) {
    throw Error(ErrorCode::invalid_spec, "truncation radius does not exceed the tail-bound offset");
  }
  const double p = bound.exponent;
  return 0.5 * sphere_area(m) * bound.coefficient * std::pow(1.0 - bound.offset / radius, -p) *
         std::pow(radius, m - p) / (p - m);
}

namespace {

struct Moments {
  std::uint64_t n = 0;
  std::array<double, kMaxDim> mean{};
  std::array<double, kMaxDim> m2{};

  void add(const Element& x) {
    ++n;
    const double inv = 1.0 / static_cast<double>(n);
    for (int i = 0; i < x.dim(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d * inv;
      m2[i] += d * (x[i] - mean[i]);
    }
  }
};

Moments merge(const Moments& a, const Moments& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  Moments out;
  out.n = a.n + b.n;
  const double na = static_cast<double>(a.n);
  const double nb = static_cast<double>(b.n);
  const double n = static_cast<double>(out.n);
  for (int i = 0; i < kMaxDim; ++i) {
    const double delta = b.mean[i] - a.mean[i];
    out.mean[i] = a.mean[i] + delta * (nb / n);
    out.m2[i] = a.m2[i] + b.m2[i] + delta * delta * (na * nb / n);
  }
  return out;
}

Moments tree_reduce(std::span<const Moments> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts[0];
  const std::size_t half = parts.size() / 2;
  return merge(tree_reduce(parts.first(half)), tree_reduce(parts.subspan(half)));
}

/// Maps one vector of uniforms to the weighted integrand value; writes the
/// sample location into `point` for error reporting.
using Sampler = std::function<Element(std::span<const double> u, Element& point)>;

constexpr int kMaxUniforms = sampling::SobolSequence::kMaxDims;

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

Estimate run_quadrature(const QuadratureSpec& spec, int out_dim, int udim, const Sampler& sampler) {
  validate(spec);
  const bool ld = spec.method == QuadratureMethod::low_discrepancy;
  const std::uint64_t replicates = ld ? kLowDiscrepancyReplicates : 1;
  const std::uint64_t per_rep = spec.samples / replicates;
  const std::uint64_t blocks_per_rep = (per_rep + kBlockSize - 1) / kBlockSize;
  const std::uint64_t total_blocks = replicates * blocks_per_rep;

  std::optional<sampling::SobolSequence> sobol;
  std::vector<std::array<std::uint32_t, kMaxUniforms>> shifts;
  if (ld) {
    sobol.emplace(udim);
    for (std::uint64_t r = 0; r < replicates; ++r) {
      std::array<std::uint32_t, kMaxUniforms> s{};
      for (int d = 0; d < udim; ++d) {
        s[static_cast<std::size_t>(d)] =
            static_cast<std::uint32_t>(sampling::derive_seed(spec.seed, r, static_cast<std::uint64_t>(d)));
      }
      shifts.push_back(s);
    }
  }

  std::vector<Moments> results(total_blocks);
  std::vector<std::exception_ptr> errors(total_blocks);

  parallel_for(total_blocks, spec.threads, [&](std::uint64_t b) {
    try {
      const std::uint64_t rep = b / blocks_per_rep;
      const std::uint64_t begin = (b % blocks_per_rep) * kBlockSize;
      const std::uint64_t end = std::min(per_rep, begin + kBlockSize);
      std::array<double, kMaxUniforms> u{};
      const std::span<double> us(u.data(), static_cast<std::size_t>(udim));
      Element point(out_dim);
      Moments mom;
      std::optional<sampling::UniformStream> rng;
      if (!ld) rng.emplace(sampling::derive_seed(spec.seed, 0x6B6C, b));
      for (std::uint64_t i = begin; i < end; ++i) {
        if (ld) {
          sobol->point(static_cast<std::uint32_t>(i), shifts[rep], us);
        } else {
          rng->fill(us);
        }
        const Element w = sampler(us, point);
        if (!w.is_finite()) {
          throw Error(ErrorCode::non_finite_sample, "non-finite integrand at " + to_string(point));
        }
        mom.add(w);
      }
      results[b] = mom;
    } catch (...) {
      errors[b] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Estimate est;
  est.value = Element(out_dim);
  if (!ld) {
    const Moments all = tree_reduce(results);
    est.samples_used = all.n;
    const double n = static_cast<double>(all.n);
    for (int i = 0; i < out_dim; ++i) {
      est.value[i] = all.mean[i];
      est.std_error = std::max(est.std_error, std::sqrt(all.m2[i] / (n - 1.0) / n));
    }
    return est;
  }

  Moments across;  // moments of the replicate means
  for (std::uint64_t r = 0; r < replicates; ++r) {
    const std::span<const Moments> part(results.data() + r * blocks_per_rep, blocks_per_rep);
    const Moments rep = tree_reduce(part);
    est.samples_used += rep.n;
    Element mean(out_dim);
    for (int i = 0; i < out_dim; ++i) mean[i] = rep.mean[i];
    across.add(mean);
  }
  const double k = static_cast<double>(replicates);
  for (int i = 0; i < out_dim; ++i) {
    est.value[i] = across.mean[i];
    est.std_error = std::max(est.std_error, std::sqrt(across.m2[i] / (k - 1.0) / k));
  }
  return est;
}

void scale(Estimate& e, double s) {
  e.value *= s;
  e.std_error *= std::abs(s);
}

/// Defensive mixture proposal on Re x > 0.
class HalfspaceProposal {
 public:
  static constexpr double kBaseWeight = 0.3;
  static constexpr double kMinScale = 0.05;

  HalfspaceProposal(int m, double tail, std::span<const Element> poles) : m_(m), coord_(tail) {
    for (const Element& p : poles) {
      centers_.push_back(p);
      cauchy_.emplace_back(m, std::max(std::abs(p.re()), kMinScale));
    }
    base_weight_ = centers_.empty() ? 1.0 : kBaseWeight;
  }

  /// Uniforms used: [0] component, [1..m] base coordinates, [1..m+2] normals.
  int uniforms() const { return m_ + 3; }

  Element draw(std::span<const double> u) const {
    Element x(m_);
    if (u[0] < base_weight_) {
      x[0] = coord_.half_quantile(u[1]);
      for (int i = 1; i < m_; ++i) x[i] = coord_.quantile(u[static_cast<std::size_t>(i + 1)]);
      return x;
    }
    const std::size_t k = std::min(
        centers_.size() - 1,
        static_cast<std::size_t>((u[0] - base_weight_) / (1.0 - base_weight_) * centers_.size()));
    std::array<double, kMaxDim + 2> normals{};
    for (int i = 0; i < m_ + 2; i += 2) {
      const auto z = sampling::box_muller(u[static_cast<std::size_t>(i + 1)], u[static_cast<std::size_t>(i + 2)]);
      normals[static_cast<std::size_t>(i)] = z[0];
      normals[static_cast<std::size_t>(i + 1)] = z[1];
    }
    std::array<double, kMaxDim> y{};
    cauchy_[k].sample(normals, y);
    for (int i = 0; i < m_; ++i) x[i] = centers_[k][i] + y[static_cast<std::size_t>(i)];
    x[0] = std::abs(x[0]);
    return x;
  }

  double density(const Element& x) const {
    double base = 2.0 * coord_.pdf(x[0]);
    for (int i = 1; i < m_; ++i) base *= coord_.pdf(x[i]);
    double total = base_weight_ * base;
    if (centers_.empty()) return total;
    const double w = (1.0 - base_weight_) / static_cast<double>(centers_.size());
    std::array<double, kMaxDim> y{};
    for (std::size_t k = 0; k < centers_.size(); ++k) {
      for (int i = 0; i < m_; ++i) y[static_cast<std::size_t>(i)] = x[i] - centers_[k][i];
      double folded = cauchy_[k].pdf(y);
      y[0] = -x[0] - centers_[k][0];
      folded += cauchy_[k].pdf(y);
      total += w * folded;
    }
    return total;
  }

 private:
  int m_;
  sampling::StudentT coord_;
  std::vector<Element> centers_;
  std::vector<sampling::MultivariateCauchy> cauchy_;
  double base_weight_ = 1.0;
};

/// Unit direction from m uniforms (m even) through Gaussian normalization.
Element direction(int m, std::span<const double> u) {
  Element z(m);
  for (int i = 0; i < m; i += 2) {
    const auto g = sampling::box_muller(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i + 1)]);
    z[i] = g[0];
    z[i + 1] = g[1];
  }
  return z / norm(z);
}

std::optional<TailBound> product_tail(const FieldFunction& f, const FieldFunction& g, double scale) {
  if (!f.tail || !g.tail) return std::nullopt;
  return TailBound{f.tail->coefficient * g.tail->coefficient * scale, f.tail->exponent + g.tail->exponent,
                   std::max(f.tail->offset, g.tail->offset)};
}

void require_dim(const FieldFunction& f, int m) {
  if (f.dim != m) {
    throw Error(ErrorCode::dimension_mismatch, "function dimension " + std::to_string(f.dim) +
                                                   " differs from " + std::to_string(m));
  }
}

FieldFunction combine(const FieldFunction& f, const FieldFunction& g,
                      std::function<Element(const Element&)> eval) {
  FieldFunction h;
  h.dim = f.dim;
  h.eval = std::move(eval);
  h.clearance = [fc = f.clearance, gc = g.clearance](const Element& x) { return std::min(fc(x), gc(x)); };
  h.poles = f.poles;
  h.poles.insert(h.poles.end(), g.poles.begin(), g.poles.end());
  return h;
}

}  // namespace

Estimate integrate_halfspace(const FieldFunction& g, const QuadratureSpec& spec) {
  validate(spec);
  const int m = g.dim;
  require_supported_dim(m);
  const double radius = spec.radius.value_or(default_truncation_radius(m));
  const double tail = g.tail ? halfspace_tail_bound(*g.tail, m, radius) : 0.0;

  const HalfspaceProposal proposal(m, spec.tail, g.poles);
  const double r2 = radius * radius;
  Estimate est = run_quadrature(spec, m, proposal.uniforms(),
                                [&](std::span<const double> u, Element& point) {
                                  point = proposal.draw(u);
                                  if (point.norm_squared() > r2 || !(point[0] > 0.0)) return Element(m);
                                  return g(point) / proposal.density(point);
                                });
  est.std_error += tail;
  return est;
}

Estimate inner_product_halfspace(const FieldFunction& f, const FieldFunction& g,
                                 const QuadratureSpec& spec, int m) {
  require_supported_dim(m);
  require_dim(f, m);
  require_dim(g, m);
  const double inv_omega = 1.0 / sphere_area(m);
  FieldFunction h = combine(f, g, [fe = f.eval, ge = g.eval, inv_omega](const Element& x) {
    return mul(conj(ge(x)), fe(x)) * inv_omega;
  });
  h.tail = product_tail(f, g, inv_omega);
  return integrate_halfspace(h, spec);
}

Estimate inner_product_ball(const FieldFunction& f, const FieldFunction& g, const Element& p,
                            double r, const QuadratureSpec& spec) {
  validate(spec);
  const int m = p.dim();
  if (m != 8) throw Error(ErrorCode::unsupported_dimension, "ball inner product is defined for dim 8");
  require_dim(f, m);
  require_dim(g, m);
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::invalid_parameter, "ball radius must be positive");
  if (!(f.clearance(p) >= r) || !(g.clearance(p) >= r)) {
    throw Error(ErrorCode::outside_domain, "ball is not contained in the function domain");
  }
  Estimate est = run_quadrature(spec, m, m + 1, [&](std::span<const double> u, Element& point) {
    const Element n = direction(m, u);
    const double rho = r * std::pow(u[static_cast<std::size_t>(m)], 1.0 / m);
    point = p + rho * n;
    if (rho == 0.0) return Element(m);
    const Element left = mul(conj(g(point)), conj(n));
    const Element right = mul(n, f(point));
    return mul(left, right);
  });
  // (1/omega) * volume of the ball = r^m / m
  scale(est, std::pow(r, m) / m);
  return est;
}

Estimate cauchy_integral(const FieldFunction& f, const Element& center, double radius,
                         const Element& x, const QuadratureSpec& spec) {
  validate(spec);
  const int m = center.dim();
  require_dim(f, m);
  if (x.dim() != m) throw Error(ErrorCode::dimension_mismatch, "evaluation point has wrong dimension");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::invalid_parameter, "sphere radius must be positive");
  }
  if (std::abs(norm(x - center) - radius) <= 1e-12 * radius) {
    throw Error(ErrorCode::point_on_boundary, "evaluation point lies on the sphere");
  }
  if (!(f.clearance(center) > radius)) {
    throw Error(ErrorCode::outside_domain, "closed ball is not contained in the function domain");
  }
  Estimate est = run_quadrature(spec, m, m, [&](std::span<const double> u, Element& point) {
    const Element n = direction(m, u);
    point = center + radius * n;
    return mul(cauchy_E(point - x), mul(n, f(point)));
  });
  // (1/omega) * sphere area = radius^(m-1)
  scale(est, std::pow(radius, m - 1));
  return est;
}

Estimate l2_distance_squared_halfspace(const FieldFunction& f, const FieldFunction& g,
                                       const QuadratureSpec& spec) {
  const int m = f.dim;
  require_dim(g, m);
  FieldFunction h = combine(f, g, [fe = f.eval, ge = g.eval, m](const Element& x) {
    return Element::real(m, (fe(x) - ge(x)).norm_squared());
  });
  if (f.tail && g.tail) {
    // (|f| + |g|)^2 <= ((Cf + Cg) t^-min(p))^2 once t = |x| - offset >= 1.
    const double offset = std::max(f.tail->offset, g.tail->offset);
    const double radius = spec.radius.value_or(default_truncation_radius(m));
    if (radius - offset < 1.0) {
      throw Error(ErrorCode::invalid_spec, "truncation radius too small for the tail bound");
    }
    const double c = f.tail->coefficient + g.tail->coefficient;
    h.tail = TailBound{c * c, 2.0 * std::min(f.tail->exponent, g.tail->exponent), offset};
  }
  return integrate_halfspace(h, spec);
}

double l2_distance_halfspace(const FieldFunction& f, const FieldFunction& g, const QuadratureSpec& spec) {
  return std::sqrt(std::max(0.0, l2_distance_squared_halfspace(f, g, spec).value[0]));
}

}  // namespace hb
