// SPDX-License-Identifier: Apache-2.0
//
// Seeded random instances satisfying each bound's hypotheses by
// construction (enclosure built from a sampled center and radius, disc
// instances placed inside the gamma/Gamma ball, positive tuples for the
// classical forms). The uniform source is hand-rolled on top of
// mt19937_64 so that a seed produces identical streams on every platform.

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "schwarz/conditions.hpp"
#include "schwarz/integral.hpp"
#include "schwarz/space.hpp"

namespace schwarz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, 1) with 53 payload bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Box-Muller without caching, so consumption is deterministic.
  double normal() {
    const double u1 = std::max(uniform(), 0x1.0p-60);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  bool coin(double p = 0.5) { return uniform() < p; }

  Scalar scalar(bool complex_field) {
    const double re = normal();
    return complex_field ? Scalar{re, normal()} : Scalar{re, 0.0};
  }

 private:
  std::mt19937_64 eng_;
};

struct BallInstance {
  Vector x, a;
  double r = 0.0;
  WeightedSpace space;
};

struct PairInstance {
  Vector x, y;
  ScalarPair pair;
  WeightedSpace space;
};

struct BandInstance {
  Vector x, y;
  RatioBand band;
  WeightedSpace space;
};

struct PositiveInstance {
  RealVector x, y;
  std::vector<double> weights;
};

struct ShishaInstance {
  RealVector a_vec, b_vec;
  double a = 0.0, A = 0.0, b = 0.0, B = 0.0;
};

// Weights in [0.2, 3], with occasional exact-zero atoms when dim > 1.
inline WeightedSpace gen_space(Rng& rng, std::size_t dim) {
  std::vector<double> w(dim);
  bool any_positive = false;
  for (std::size_t k = 0; k < dim; ++k) {
    if (dim > 1 && rng.coin(0.15)) {
      w[k] = 0.0;
    } else {
      w[k] = rng.log_uniform(0.2, 3.0);
      any_positive = true;
    }
  }
  if (!any_positive) w[0] = 1.0;
  return WeightedSpace(std::move(w));
}

inline Vector gen_vector(Rng& rng, std::size_t dim, bool complex_field) {
  Vector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = rng.scalar(complex_field);
  return v;
}

namespace detail {

// Rescale v to the requested weighted norm; falls back to a basis
// direction when the sampled vector carries no weighted mass.
inline Vector with_norm(Rng& rng, Vector v, double target,
                        const WeightedSpace& s) {
  const double n = norm(v, s);
  if (n < 1e-12) {
    const std::size_t k = s.support().front();
    v[k] = Scalar{1.0 / std::sqrt(s.weight(k)), 0.0};
    return with_norm(rng, std::move(v), target, s);
  }
  return scaled(Scalar{target / n, 0.0}, v);
}

// x = center + perturbation of weighted norm at most frac * radius.
inline Vector inside_ball(Rng& rng, const Vector& center, double radius,
                          const WeightedSpace& s, bool complex_field) {
  Vector dir = gen_vector(rng, center.size(), complex_field);
  const double nd = norm(dir, s);
  if (nd < 1e-12 || radius == 0.0) return center;
  const double step = radius * rng.uniform(0.0, 0.999) / nd;
  return combine(Scalar{1.0, 0.0}, center, Scalar{step, 0.0}, dir);
}

}  // namespace detail

// ||x - a|| <= r < ||a|| with margins on both sides.
inline BallInstance gen_ball(Rng& rng, std::size_t dim, bool complex_field) {
  WeightedSpace s = gen_space(rng, dim);
  Vector a = detail::with_norm(rng, gen_vector(rng, dim, complex_field),
                               rng.uniform(0.5, 2.5), s);
  const double na = norm(a, s);
  const double r = na * rng.uniform(0.1, 0.95);
  Vector x = detail::inside_ball(rng, a, r, s, complex_field);
  return BallInstance{std::move(x), std::move(a), r, std::move(s)};
}

// gamma, Gamma with Re(Gamma conj(gamma)) bounded away from zero, and x
// placed inside the ball form of the disc condition.
inline PairInstance gen_pair(Rng& rng, std::size_t dim, bool complex_field) {
  WeightedSpace s = gen_space(rng, dim);
  ScalarPair p;
  if (complex_field) {
    const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double dphi = rng.uniform(-1.4, 1.4);
    p.gamma = std::polar(rng.log_uniform(0.2, 3.0), phi);
    p.Gamma = std::polar(rng.log_uniform(0.2, 3.0), phi + dphi);
  } else {
    const double sign = rng.coin() ? 1.0 : -1.0;
    p.gamma = Scalar{sign * rng.log_uniform(0.2, 3.0), 0.0};
    p.Gamma = Scalar{sign * rng.log_uniform(0.2, 3.0), 0.0};
  }
  Vector y = detail::with_norm(rng, gen_vector(rng, dim, complex_field),
                               rng.uniform(0.5, 2.0), s);
  const Scalar center = 0.5 * (p.Gamma + p.gamma);
  const double radius = 0.5 * std::abs(p.Gamma - p.gamma) * norm(y, s);
  Vector x = detail::inside_ball(rng, scaled(center, y), radius, s, complex_field);
  return PairInstance{std::move(x), std::move(y), p, std::move(s)};
}

// 0 < m <= M with x inside the band disc.
inline BandInstance gen_band(Rng& rng, std::size_t dim, bool complex_field) {
  WeightedSpace s = gen_space(rng, dim);
  RatioBand b;
  b.m = rng.log_uniform(0.1, 2.0);
  b.M = b.m * std::exp(rng.uniform(0.05, 1.5));
  Vector y = detail::with_norm(rng, gen_vector(rng, dim, complex_field),
                               rng.uniform(0.5, 2.0), s);
  const Scalar center{0.5 * (b.M + b.m), 0.0};
  const double radius = 0.5 * (b.M - b.m) * norm(y, s);
  Vector x = detail::inside_ball(rng, scaled(center, y), radius, s, complex_field);
  return BandInstance{std::move(x), std::move(y), b, std::move(s)};
}

// Positive tuples with optional zero-weight atoms carrying junk data
// (those coordinates must never influence any result).
inline PositiveInstance gen_positive(Rng& rng, std::size_t dim) {
  PositiveInstance inst;
  inst.weights.resize(dim);
  inst.x.resize(dim);
  inst.y.resize(dim);
  bool any_positive = false;
  for (std::size_t k = 0; k < dim; ++k) {
    const bool zero_atom = dim > 1 && rng.coin(0.15);
    inst.weights[k] = zero_atom ? 0.0 : rng.log_uniform(0.2, 3.0);
    any_positive = any_positive || !zero_atom;
    if (zero_atom && rng.coin()) {
      inst.x[k] = -1.0;
      inst.y[k] = 0.0;
    } else {
      inst.x[k] = std::exp(0.7 * rng.normal());
      inst.y[k] = std::exp(0.5 * rng.normal());
    }
  }
  if (!any_positive) {
    inst.weights[0] = 1.0;
    inst.x[0] = std::exp(0.7 * rng.normal());
    inst.y[0] = std::exp(0.5 * rng.normal());
  }
  return inst;
}

inline ShishaInstance gen_shisha(Rng& rng, std::size_t dim) {
  ShishaInstance inst;
  inst.a = rng.log_uniform(0.3, 1.0);
  inst.A = inst.a * std::exp(rng.uniform(0.05, 1.2));
  inst.b = rng.log_uniform(0.3, 1.0);
  inst.B = inst.b * std::exp(rng.uniform(0.05, 1.2));
  inst.a_vec.resize(dim);
  inst.b_vec.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    inst.a_vec[k] = rng.uniform(inst.a, inst.A);
    inst.b_vec[k] = rng.uniform(inst.b, inst.B);
  }
  return inst;
}

// Wrap weighted data as sampled functions, splitting each weight into a
// random rho * mu factorisation on an index grid.
inline std::pair<SampledFunction, SampledFunction> as_sampled(
    Rng& rng, const Vector& f, const Vector& g, const WeightedSpace& s) {
  const std::size_t n = s.dimension();
  std::vector<double> nodes(n), rho(n), mu(n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes[k] = static_cast<double>(k);
    const double split = std::exp(rng.uniform(-1.0, 1.0));
    rho[k] = s.weight(k) * split;
    mu[k] = s.weight(k) > 0.0 ? 1.0 / split : rng.uniform(0.0, 1.0);
  }
  SampledFunction fs{nodes, f, rho, mu};
  SampledFunction gs{std::move(nodes), g, std::move(rho), std::move(mu)};
  return {std::move(fs), std::move(gs)};
}

}  // namespace schwarz
