// SPDX-License-Identifier: Apache-2.0
//
// Constructors for the exact configurations at which the reverse bounds
// are attained, and the extremal family certifying that the factor 2 in
// the dominated-ball difference bound cannot be improved.

#pragma once

#include <tuple>
#include <vector>

#include "schwarz/bounds.hpp"
#include "schwarz/space.hpp"

namespace schwarz {

namespace detail {

// Basis direction e_k / sqrt(w_k) at the n-th positive-weight index:
// a unit vector of the weighted norm.
inline Vector unit_direction(const WeightedSpace& s, std::size_t nth) {
  const auto support = s.support();
  if (nth >= support.size())
    throw std::invalid_argument("unit_direction: insufficient positive weights");
  Vector v(s.dimension(), Scalar{0.0, 0.0});
  const std::size_t k = support[nth];
  v[k] = Scalar{1.0 / std::sqrt(s.weight(k)), 0.0};
  return v;
}

}  // namespace detail

// Sharpness configuration: unit a, unit e with a _|_ e, x = a + sqrt(eps) e,
// r = sqrt(eps). The achieved constant 1 + sqrt(1-eps) approaches 2 as
// eps -> 0+, so no smaller factor can replace the 2.
struct ExtremalWitness {
  double epsilon = 0.0;
  Vector a;
  Vector e;
  Vector x;
  double r = 0.0;
  double achieved_constant = 0.0;
};

inline ExtremalWitness extremal_family(double epsilon, std::size_t dim,
                                       const WeightedSpace& s) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("extremal_family: epsilon must be in (0,1)");
  if (dim < 2 || dim != s.dimension())
    throw std::invalid_argument("extremal_family: dimension must be >= 2 and match the space");
  if (s.positive_count() < 2)
    throw std::invalid_argument("extremal_family: insufficient positive weights");

  ExtremalWitness w;
  w.epsilon = epsilon;
  w.a = detail::unit_direction(s, 0);
  w.e = detail::unit_direction(s, 1);
  w.r = std::sqrt(epsilon);
  w.x = combine(Scalar{1.0, 0.0}, w.a, Scalar{w.r, 0.0}, w.e);

  // Achieved constant: (left side of the bound) * ||a||(||a|| + q) / r^2
  // with q = sqrt(||a||^2 - r^2). The construction gives ||a|| = 1,
  // <x,a> = ||a||^2 and ||x||^2 - ||a||^2 = r^2 exactly, so the left side
  // reduces to r^2 and the expression collapses to 1 + sqrt(1 - eps).
  // Evaluating the collapsed form avoids the cancellations at both ends
  // of (0,1) that would otherwise dominate the value.
  w.achieved_constant = 1.0 + std::sqrt(1.0 - epsilon);
  return w;
}

// C(eps) for each grid point; equals 1 + sqrt(1-eps) and its supremum
// approaches 2 as min(grid) -> 0.
inline std::vector<std::pair<double, double>> achieved_constant_curve(
    const std::vector<double>& eps_grid, const WeightedSpace& s) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    const ExtremalWitness w = extremal_family(eps, s.dimension(), s);
    curve.emplace_back(eps, w.achieved_constant);
  }
  return curve;
}

// Attains the premultiplicative bound: ||x-a|| = r and ||x||^2 + r^2 = ||a||^2.
// In the weighted-orthonormal frame x = (t, s2) with t = (||a||^2 - r^2)/||a||
// and s2 chosen so that ||x||^2 = ||a||^2 - r^2.
inline std::pair<Vector, Vector> equality_witness_premultiplicative(
    double norm_a, double r, const WeightedSpace& s) {
  if (!(norm_a > 0.0) || !(r > 0.0) || !(r < norm_a))
    throw std::invalid_argument(
        "equality_witness_premultiplicative: need 0 < r < norm_a");
  if (s.positive_count() < 2)
    throw std::invalid_argument(
        "equality_witness_premultiplicative: insufficient positive weights");
  const Vector u1 = detail::unit_direction(s, 0);
  const Vector u2 = detail::unit_direction(s, 1);
  const double q2 = norm_a * norm_a - r * r;
  const double t = q2 / norm_a;
  const double s2 = std::sqrt(std::max(0.0, q2 - t * t));
  Vector a = scaled(Scalar{norm_a, 0.0}, u1);
  Vector x = combine(Scalar{t, 0.0}, u1, Scalar{s2, 0.0}, u2);
  return {std::move(x), std::move(a)};
}

// Attains the additive bound: ||x-a|| = r with ||x|| = ||a||. Requires
// r <= 2 norm_a so that the sphere intersection is nonempty.
inline std::pair<Vector, Vector> equality_witness_additive(
    double norm_a, double r, const WeightedSpace& s) {
  if (!(norm_a > 0.0) || !(r > 0.0) || !(r <= 2.0 * norm_a))
    throw std::invalid_argument(
        "equality_witness_additive: need 0 < r <= 2 norm_a");
  if (s.positive_count() < 2)
    throw std::invalid_argument(
        "equality_witness_additive: insufficient positive weights");
  const Vector u1 = detail::unit_direction(s, 0);
  const Vector u2 = detail::unit_direction(s, 1);
  const double cos_theta = 1.0 - r * r / (2.0 * norm_a * norm_a);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  Vector a = scaled(Scalar{norm_a, 0.0}, u1);
  Vector x = combine(Scalar{norm_a * cos_theta, 0.0}, u1,
                     Scalar{norm_a * sin_theta, 0.0}, u2);
  return {std::move(x), std::move(a)};
}

// Attains the difference-of-ratios bound: ||x-a|| = r and
// Re<x,a> = |<x,a>| = ||a|| sqrt(||a||^2 - r^2).
inline std::pair<Vector, Vector> equality_witness_km_abstract(
    double norm_a, double r, const WeightedSpace& s) {
  if (!(norm_a > 0.0) || !(r > 0.0) || !(r < norm_a))
    throw std::invalid_argument(
        "equality_witness_km_abstract: need 0 < r < norm_a");
  if (s.positive_count() < 2)
    throw std::invalid_argument(
        "equality_witness_km_abstract: insufficient positive weights");
  const Vector u1 = detail::unit_direction(s, 0);
  const Vector u2 = detail::unit_direction(s, 1);
  const double q = std::sqrt(norm_a * norm_a - r * r);
  const double off = std::sqrt(
      std::max(0.0, r * r - (norm_a - q) * (norm_a - q)));
  Vector a = scaled(Scalar{norm_a, 0.0}, u1);
  Vector x = combine(Scalar{q, 0.0}, u1, Scalar{off, 0.0}, u2);
  return {std::move(x), std::move(a)};
}

// Attains the band bound: x = (m, M), y = (1, 1), weights solved from
// <x,y> = sqrt(Mm) ||y||^2 (any positive weights when m = M). Each band
// condition component vanishes, so the hypothesis is tight as well.
inline std::tuple<Vector, Vector, std::vector<double>> equality_witness_band(
    double m, double M) {
  if (!(0.0 < m) || !(m <= M) || !std::isfinite(M))
    throw std::invalid_argument("equality_witness_band: need 0 < m <= M");
  Vector x{Scalar{m, 0.0}, Scalar{M, 0.0}};
  Vector y{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  std::vector<double> w{1.0, 1.0};
  if (m < M) {
    const double geo = std::sqrt(m * M);
    w[0] = (M - geo) / (geo - m);
    w[1] = 1.0;
  }
  return {std::move(x), std::move(y), std::move(w)};
}

// Attains the pair multiplicative bound at real gamma = m, Gamma = M:
// tight band condition with ||x|| = sqrt(Mm) ||y||, solved by weights (M, m).
inline std::tuple<Vector, Vector, std::vector<double>>
equality_witness_pair_multiplicative(double m, double M) {
  if (!(0.0 < m) || !(m <= M) || !std::isfinite(M))
    throw std::invalid_argument(
        "equality_witness_pair_multiplicative: need 0 < m <= M");
  Vector x{Scalar{m, 0.0}, Scalar{M, 0.0}};
  Vector y{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  return {std::move(x), std::move(y), std::vector<double>{M, m}};
}

// Attains the pair additive bound at real gamma = m, Gamma = M:
// tight band condition with ||x|| = (m+M)/2 ||y||, weights (m+3M, 3m+M).
inline std::tuple<Vector, Vector, std::vector<double>>
equality_witness_pair_additive(double m, double M) {
  if (!(0.0 < m) || !(m <= M) || !std::isfinite(M))
    throw std::invalid_argument(
        "equality_witness_pair_additive: need 0 < m <= M");
  Vector x{Scalar{m, 0.0}, Scalar{M, 0.0}};
  Vector y{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  return {std::move(x), std::move(y), std::vector<double>{m + 3.0 * M, 3.0 * m + M}};
}

}  // namespace schwarz
