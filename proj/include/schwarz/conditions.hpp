// SPDX-License-Identifier: Apache-2.0
//
// Hypothesis checkers for the reverse-Schwarz bounds: the enclosure (ball)
// condition, the gamma/Gamma disc condition in quadratic and ball form,
// the real ratio band, and the pointwise sufficient conditions used by the
// weighted-integral specialisations.
//
// Every checker reports a signed margin (`residual`, >= 0 iff satisfied)
// together with the scale it was measured against. Boundary cases count as
// satisfied; the only strict hypothesis is r < ||a|| in the dominated ball
// condition, which must clear the tolerance by a positive margin.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "schwarz/space.hpp"

namespace schwarz {

// gamma/Gamma scalar pair of the disc condition Re<Gy - x, x - gy> >= 0.
struct ScalarPair {
  Scalar gamma{};
  Scalar Gamma{};

  // Re(Gamma * conj(gamma)), required positive by the multiplicative bounds.
  double real_product() const { return (Gamma * std::conj(gamma)).real(); }
  bool positive_real_product() const { return real_product() > kZeroGuard; }
  bool nondegenerate_sum() const { return std::abs(Gamma + gamma) > kZeroGuard; }
};

// Real ratio band m <= ratio <= M. The inner-product-space statements need
// m > 0; the pointwise non-negative forms admit m = 0.
struct RatioBand {
  double m = 0.0;
  double M = 0.0;

  bool valid_positive() const {
    return std::isfinite(m) && std::isfinite(M) && 0.0 < m && m <= M;
  }
  bool valid_nonnegative() const {
    return std::isfinite(m) && std::isfinite(M) && 0.0 <= m && m <= M;
  }
  ScalarPair pair() const { return ScalarPair{Scalar{m, 0.0}, Scalar{M, 0.0}}; }
};

struct ConditionReport {
  bool satisfied = false;
  double residual = 0.0;  // signed margin; >= -tol*scale iff satisfied
  std::string detail;
  double scale = 1.0;
};

namespace detail {

inline std::string margin_status(double residual, double tol, double scale) {
  return std::abs(residual) <= tol * scale ? "satisfied (boundary)"
                                           : "satisfied";
}

}  // namespace detail

// Enclosure condition ||x - a|| <= r, optionally dominated: r < ||a||.
// The dominance part is strict and must clear the tolerance.
inline ConditionReport check_ball(const Vector& x, const Vector& a, double r,
                                  bool strict_dominance,
                                  const WeightedSpace& s,
                                  const Tolerance& tol = {}) {
  if (!std::isfinite(r) || r <= 0.0)
    throw std::invalid_argument("check_ball: r must be positive");
  const double dist = distance(x, a, s);
  const double na = norm(a, s);
  const double scale = scale_of({r, dist, na});
  const double enclosure = r - dist;

  ConditionReport rep;
  rep.scale = scale;
  if (strict_dominance) {
    const double dominance = na - r;
    rep.residual = std::min(enclosure, dominance);
    const bool enclosure_ok = enclosure >= -tol.rel * scale;
    const bool dominance_ok = dominance > tol.rel * scale;
    rep.satisfied = enclosure_ok && dominance_ok;
    if (!enclosure_ok)
      rep.detail = "ball condition failed";
    else if (!dominance_ok)
      rep.detail = "strict dominance failed";
    else
      rep.detail = detail::margin_status(enclosure, tol.rel, scale);
  } else {
    rep.residual = enclosure;
    rep.satisfied = enclosure >= -tol.rel * scale;
    rep.detail = rep.satisfied ? detail::margin_status(enclosure, tol.rel, scale)
                               : "ball condition failed";
  }
  return rep;
}

// Quadratic form of the disc condition: Re<Gamma y - x, x - gamma y> >= 0.
inline ConditionReport check_pair_quadratic(const Vector& x, const Vector& y,
                                            const ScalarPair& p,
                                            const WeightedSpace& s,
                                            const Tolerance& tol = {}) {
  const Vector u = combine(p.Gamma, y, Scalar{-1.0, 0.0}, x);
  const Vector v = combine(Scalar{1.0, 0.0}, x, -p.gamma, y);
  const double residual = inner_product(u, v, s).real();
  const double scale = scale_of({norm(u, s) * norm(v, s)});

  ConditionReport rep;
  rep.scale = scale;
  rep.residual = residual;
  rep.satisfied = residual >= -tol.rel * scale;
  rep.detail = rep.satisfied ? detail::margin_status(residual, tol.rel, scale)
                             : "pair condition failed";
  return rep;
}

// Ball form of the same condition: ||x - (Gamma+gamma)/2 y|| bounded by
// |Gamma-gamma|/2 ||y||. Algebraically identical to the quadratic form;
// the two may only disagree within tolerance of the boundary.
inline ConditionReport check_pair_ball(const Vector& x, const Vector& y,
                                       const ScalarPair& p,
                                       const WeightedSpace& s,
                                       const Tolerance& tol = {}) {
  const Scalar center = 0.5 * (p.Gamma + p.gamma);
  const double radius = 0.5 * std::abs(p.Gamma - p.gamma) * norm(y, s);
  const double dist = distance(x, scaled(center, y), s);
  const double scale = scale_of({radius, dist});

  ConditionReport rep;
  rep.scale = scale;
  rep.residual = radius - dist;
  rep.satisfied = rep.residual >= -tol.rel * scale;
  rep.detail = rep.satisfied
                   ? detail::margin_status(rep.residual, tol.rel, scale)
                   : "pair condition failed";
  return rep;
}

// Band condition with gamma = m, Gamma = M real.
inline ConditionReport check_band(const Vector& x, const Vector& y,
                                  const RatioBand& b, const WeightedSpace& s,
                                  const Tolerance& tol = {}) {
  if (!b.valid_positive())
    throw std::invalid_argument("check_band: band requires 0 < m <= M");
  return check_pair_quadratic(x, y, b.pair(), s, tol);
}

// Pointwise sufficient conditions, checked at every positive-weight index.
struct PointwiseBall {
  double r;
};
struct PointwisePair {
  ScalarPair pair;
};
struct PointwiseBand {
  RatioBand band;
};
struct PointwiseComponents {
  RatioBand band;
};
using PointwiseCondition =
    std::variant<PointwiseBall, PointwisePair, PointwiseBand,
                 PointwiseComponents>;

namespace detail {

struct PointwiseAccumulator {
  double min_margin = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  bool strict_violated = false;

  void margin(double m, double local_scale) {
    min_margin = std::min(min_margin, m);
    scale = std::max(scale, local_scale);
  }
  void strict_margin(double m, double local_scale, double tol_rel) {
    margin(m, local_scale);
    if (m <= tol_rel * std::max(1.0, local_scale)) strict_violated = true;
  }
};

}  // namespace detail

inline ConditionReport check_pointwise(const Vector& f, const Vector& g,
                                       const PointwiseCondition& cond,
                                       const WeightedSpace& s,
                                       const Tolerance& tol = {}) {
  require_dimension(f, s);
  require_dimension(g, s);
  detail::PointwiseAccumulator acc;

  const auto support = s.support();
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PointwiseBall>) {
          if (!std::isfinite(c.r) || c.r <= 0.0)
            throw std::invalid_argument("check_pointwise: r must be positive");
          for (std::size_t k : support) {
            const double dev = std::abs(f[k] - g[k]);
            const double mag = std::abs(g[k]);
            const double local = scale_of({c.r, dev, mag});
            acc.margin(c.r - dev, local);
            acc.strict_margin(mag - c.r, local, tol.rel);
          }
        } else if constexpr (std::is_same_v<T, PointwisePair>) {
          for (std::size_t k : support) {
            const Scalar u = c.pair.Gamma * g[k] - f[k];
            const Scalar v = std::conj(f[k]) - std::conj(c.pair.gamma) * std::conj(g[k]);
            acc.margin((u * v).real(), std::abs(u) * std::abs(v));
          }
        } else if constexpr (std::is_same_v<T, PointwiseBand>) {
          if (!c.band.valid_nonnegative())
            throw std::invalid_argument("check_pointwise: invalid band");
          for (std::size_t k : support) {
            if (f[k].imag() != 0.0 || g[k].imag() != 0.0)
              throw std::invalid_argument(
                  "check_pointwise: band form requires real data");
            if (g[k].real() == 0.0)
              throw std::invalid_argument(
                  "check_pointwise: g vanishes on positive weight");
            const double ratio = f[k].real() / g[k].real();
            const double local = scale_of({ratio, c.band.m, c.band.M});
            acc.margin(std::min(ratio - c.band.m, c.band.M - ratio), local);
          }
        } else {
          static_assert(std::is_same_v<T, PointwiseComponents>);
          if (!c.band.valid_nonnegative())
            throw std::invalid_argument("check_pointwise: invalid band");
          for (std::size_t k : support) {
            const double fr = f[k].real(), fi = f[k].imag();
            const double gr = g[k].real(), gi = g[k].imag();
            const double local =
                scale_of({c.band.M * gr, c.band.M * gi, fr, fi,
                          c.band.m * gr, c.band.m * gi});
            acc.margin(c.band.M * gr - fr, local);
            acc.margin(fr - c.band.m * gr, local);
            acc.margin(c.band.M * gi - fi, local);
            acc.margin(fi - c.band.m * gi, local);
          }
        }
      },
      cond);

  ConditionReport rep;
  rep.scale = acc.scale;
  rep.residual = acc.min_margin;
  rep.satisfied =
      !acc.strict_violated && acc.min_margin >= -tol.rel * acc.scale;
  rep.detail = rep.satisfied
                   ? detail::margin_status(acc.min_margin, tol.rel, acc.scale)
                   : "pointwise condition failed";
  return rep;
}

// Tightest ratio band [min f_k/g_k, max f_k/g_k] over the support.
// Requires real non-negative f and strictly positive g on the support.
inline RatioBand extract_band(const Vector& f, const Vector& g,
                              const WeightedSpace& s) {
  require_dimension(f, s);
  require_dimension(g, s);
  const auto support = s.support();
  if (support.empty())
    throw std::invalid_argument("extract_band: empty support");
  RatioBand band{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (std::size_t k : support) {
    if (f[k].imag() != 0.0 || g[k].imag() != 0.0)
      throw std::invalid_argument("extract_band: nonreal input");
    if (f[k].real() < 0.0)
      throw std::invalid_argument("extract_band: negative input");
    if (!(g[k].real() > 0.0))
      throw std::invalid_argument("extract_band: g vanishes on support");
    const double ratio = f[k].real() / g[k].real();
    band.m = std::min(band.m, ratio);
    band.M = std::max(band.M, ratio);
  }
  return band;
}

}  // namespace schwarz
