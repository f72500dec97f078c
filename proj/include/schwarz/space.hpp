// SPDX-License-Identifier: Apache-2.0
//
// Weighted finite-dimensional inner-product spaces over R or C.
//
// A WeightedSpace is a non-negative weight vector w defining
//   <x,y> = sum_k w_k * x_k * conj(y_k).
// Weights of exactly zero are legal (zero-measure atoms); coordinates at
// those indices never influence any computed quantity.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schwarz {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;
using RealVector = std::vector<double>;

// Comparison slack conventions. `rel` gates one-sided inequality checks,
// `eq` gates the two-sided equality detectors; both are relative to the
// scale of the expression, which is never taken below 1.
struct Tolerance {
  double rel = 1e-9;
  double eq = 1e-7;
};

// Magnitudes below this are treated as exactly zero wherever a nonzero
// quantity is required (denominator guards).
inline constexpr double kZeroGuard = 1e-300;

// Largest magnitude entering an expression, floored at 1 so that
// tolerances degrade gracefully to absolute ones for small data.
inline double scale_of(std::initializer_list<double> magnitudes) {
  double s = 1.0;
  for (double m : magnitudes) s = std::max(s, std::abs(m));
  return s;
}

inline bool approx_eq(double u, double v, double eps, double scale) {
  return std::abs(u - v) <= eps * scale;
}

class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty())
      throw std::invalid_argument("WeightedSpace: dimension must be >= 1");
    bool any_positive = false;
    for (double w : weights_) {
      if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument(
            "WeightedSpace: weights must be finite and non-negative");
      any_positive = any_positive || w > 0.0;
    }
    if (!any_positive)
      throw std::invalid_argument(
          "WeightedSpace: at least one weight must be positive");
  }

  std::size_t dimension() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t k) const { return weights_[k]; }

  // Indices carrying positive measure, in increasing order.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < weights_.size(); ++k)
      if (weights_[k] > 0.0) idx.push_back(k);
    return idx;
  }

  std::size_t positive_count() const {
    std::size_t n = 0;
    for (double w : weights_)
      if (w > 0.0) ++n;
    return n;
  }

 private:
  std::vector<double> weights_;
};

inline void require_dimension(const Vector& v, const WeightedSpace& s) {
  if (v.size() != s.dimension())
    throw std::invalid_argument("vector/space dimension mismatch");
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": non-finite value");
}

// <x,y> = sum_k w_k x_k conj(y_k); conjugate-symmetric, linear in x.
inline Scalar inner_product(const Vector& x, const Vector& y,
                            const WeightedSpace& s) {
  require_dimension(x, s);
  require_dimension(y, s);
  Scalar acc{0.0, 0.0};
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    const double w = s.weight(k);
    if (w == 0.0) continue;
    acc += w * x[k] * std::conj(y[k]);
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw std::domain_error("inner_product: non-finite value");
  return acc;
}

inline double norm_squared(const Vector& x, const WeightedSpace& s) {
  require_dimension(x, s);
  double acc = 0.0;
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    const double w = s.weight(k);
    if (w == 0.0) continue;
    acc += w * std::norm(x[k]);
  }
  require_finite(acc, "norm_squared");
  return acc;
}

inline double norm(const Vector& x, const WeightedSpace& s) {
  return std::sqrt(norm_squared(x, s));
}

// ||x - a||, evaluated without materialising the difference.
inline double distance(const Vector& x, const Vector& a,
                       const WeightedSpace& s) {
  require_dimension(x, s);
  require_dimension(a, s);
  double acc = 0.0;
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    const double w = s.weight(k);
    if (w == 0.0) continue;
    acc += w * std::norm(x[k] - a[k]);
  }
  require_finite(acc, "distance");
  return std::sqrt(acc);
}

// alpha*x + beta*y
inline Vector combine(Scalar alpha, const Vector& x, Scalar beta,
                      const Vector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("combine: dimension mismatch");
  Vector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = alpha * x[k] + beta * y[k];
  return out;
}

inline Vector subtract(const Vector& x, const Vector& y) {
  return combine(Scalar{1.0, 0.0}, x, Scalar{-1.0, 0.0}, y);
}

inline Vector scaled(Scalar c, const Vector& x) {
  Vector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = c * x[k];
  return out;
}

}  // namespace schwarz
