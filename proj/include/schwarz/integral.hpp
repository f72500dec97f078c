// SPDX-License-Identifier: Apache-2.0
//
// Weighted-integral specialisations. A rho-weighted integral inequality on
// a finite node set is an exact statement in the weighted space with
// w_k = rho_k * mu_k, so every evaluator here reduces to its inner-product
// counterpart through discretize(). Also contains the classical discrete
// two-sequence inequalities these generalise and the CSV ingestion format
// for sampled data.

#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/bounds.hpp"
#include "schwarz/conditions.hpp"
#include "schwarz/space.hpp"

namespace schwarz {

// A K-valued function sampled on a finite grid, carrying the density rho
// and the discrete measure weights separately.
struct SampledFunction {
  std::vector<double> nodes;
  Vector values;
  std::vector<double> rho;
  std::vector<double> mu_weights;

  SampledFunction(std::vector<double> nodes_in, Vector values_in,
                  std::vector<double> rho_in, std::vector<double> mu_in)
      : nodes(std::move(nodes_in)),
        values(std::move(values_in)),
        rho(std::move(rho_in)),
        mu_weights(std::move(mu_in)) {
    const std::size_t n = nodes.size();
    if (n == 0) throw std::invalid_argument("SampledFunction: empty grid");
    if (values.size() != n || rho.size() != n || mu_weights.size() != n)
      throw std::invalid_argument("SampledFunction: list lengths differ");
    for (std::size_t k = 0; k < n; ++k) {
      if (!std::isfinite(nodes[k]))
        throw std::invalid_argument("SampledFunction: non-finite node");
      if (k > 0 && !(nodes[k] > nodes[k - 1]))
        throw std::invalid_argument("SampledFunction: nodes must increase strictly");
      if (!std::isfinite(rho[k]) || rho[k] < 0.0)
        throw std::invalid_argument("SampledFunction: rho must be non-negative");
      if (!std::isfinite(mu_weights[k]) || mu_weights[k] < 0.0)
        throw std::invalid_argument("SampledFunction: mu weights must be non-negative");
    }
  }

  std::size_t size() const { return nodes.size(); }
};

struct Discretized {
  Vector f;
  Vector g;
  WeightedSpace space;
};

// Shared-grid reduction to the weighted space with w_k = rho_k * mu_k.
inline Discretized discretize(const SampledFunction& f,
                              const SampledFunction& g) {
  if (f.nodes != g.nodes || f.rho != g.rho || f.mu_weights != g.mu_weights)
    throw std::invalid_argument("discretize: mismatched grids");
  std::vector<double> w(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) w[k] = f.rho[k] * f.mu_weights[k];
  return Discretized{f.values, g.values, WeightedSpace(std::move(w))};
}

// Composite midpoint rule on [lo, hi]: n interior nodes, uniform weights.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureRule midpoint_rule(double lo, double hi, std::size_t n) {
  if (!(hi > lo) || n == 0)
    throw std::invalid_argument("midpoint_rule: need hi > lo and n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, (hi - lo) / static_cast<double>(n));
  const double h = (hi - lo) / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    rule.nodes[k] = lo + (static_cast<double>(k) + 0.5) * h;
  return rule;
}

// Trapezoid weights for an arbitrary strictly increasing node grid.
inline std::vector<double> trapezoid_weights(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  if (n == 0) throw std::invalid_argument("trapezoid_weights: empty grid");
  for (std::size_t k = 1; k < n; ++k)
    if (!(nodes[k] > nodes[k - 1]))
      throw std::invalid_argument("trapezoid_weights: nodes must increase strictly");
  if (n == 1) return {1.0};
  std::vector<double> w(n);
  w[0] = 0.5 * (nodes[1] - nodes[0]);
  for (std::size_t k = 1; k + 1 < n; ++k) w[k] = 0.5 * (nodes[k + 1] - nodes[k - 1]);
  w[n - 1] = 0.5 * (nodes[n - 1] - nodes[n - 2]);
  return w;
}

namespace detail {

struct Moments {
  double f2 = 0.0;   // integral of rho |f|^2
  double g2 = 0.0;   // integral of rho |g|^2
  Scalar fg{0.0, 0.0};  // integral of rho f conj(g)
};

inline Moments moments_of(const Discretized& d) {
  Moments m;
  m.f2 = norm_squared(d.f, d.space);
  m.g2 = norm_squared(d.g, d.space);
  m.fg = inner_product(d.f, d.g, d.space);
  return m;
}

}  // namespace detail

// Gram-gap reverse under the dominated enclosure
// integral rho |f-g|^2 <= r^2 < integral rho |g|^2:
//   (int rho|f|^2)(int rho|g|^2) - |int rho f conj(g)|^2
//     <= 2 (int rho|g|^2)^(1/2) |int rho f conj(g)|
//        [ (int rho|g|^2)^(1/2) - (int rho|g|^2 - r^2)^(1/2) ].
inline BoundReport prop_integral_ball(const SampledFunction& f,
                                      const SampledFunction& g, double r,
                                      const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::prop_integral_ball, tol);
  if (!detail::positive_radius(r))
    return detail::fail_report(std::move(rep), "radius must be positive");
  const Discretized d = discretize(f, g);
  const ConditionReport ball =
      check_ball(d.f, d.g, r, /*strict_dominance=*/true, d.space, tol);
  rep.preconditions.push_back(ball);
  if (!ball.satisfied) return detail::fail_report(std::move(rep), ball.detail);

  const detail::Moments m = detail::moments_of(d);
  const double az = std::abs(m.fg);
  if (az <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");

  const double root_g = std::sqrt(m.g2);
  const double lhs = m.f2 * m.g2 - az * az;
  const double rhs =
      2.0 * root_g * az * (root_g - std::sqrt(std::max(0.0, m.g2 - r * r)));
  const double scale = scale_of({m.f2 * m.g2, az * az, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

// Gram-gap reverse under the integrated disc condition:
//   ... <= [|Gamma+gamma| - 2 sqrt(Re(Gamma conj(gamma)))]
//          |int rho f conj(g)| (int rho |g|^2).
inline BoundReport prop_integral_pair(const SampledFunction& f,
                                      const SampledFunction& g,
                                      const ScalarPair& p,
                                      const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::prop_integral_pair, tol);
  const double dprod = p.real_product();
  if (!(dprod > kZeroGuard))
    return detail::fail_report(std::move(rep), "invalid pair");
  const Discretized d = discretize(f, g);
  const ConditionReport pc = check_pair_quadratic(d.f, d.g, p, d.space, tol);
  rep.preconditions.push_back(pc);
  if (!pc.satisfied) return detail::fail_report(std::move(rep), pc.detail);

  const detail::Moments m = detail::moments_of(d);
  const double az = std::abs(m.fg);
  const double coeff = std::abs(p.Gamma + p.gamma) - 2.0 * std::sqrt(dprod);

  const double lhs = m.f2 * m.g2 - az * az;
  const double rhs = coeff * az * m.g2;
  const double scale = scale_of({m.f2 * m.g2, az * az, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

// Band form of the previous bound, coefficient (sqrt(M) - sqrt(m))^2.
inline BoundReport cor_integral_band(const SampledFunction& f,
                                     const SampledFunction& g,
                                     const RatioBand& b,
                                     const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::cor_integral_band, tol);
  if (!b.valid_positive())
    return detail::fail_report(std::move(rep), "invalid band");
  const Discretized d = discretize(f, g);
  const ConditionReport bc = check_pair_quadratic(d.f, d.g, b.pair(), d.space, tol);
  rep.preconditions.push_back(bc);
  if (!bc.satisfied)
    return detail::fail_report(std::move(rep), "band condition failed");

  const detail::Moments m = detail::moments_of(d);
  const double az = std::abs(m.fg);
  const double gap = std::sqrt(b.M) - std::sqrt(b.m);

  const double lhs = m.f2 * m.g2 - az * az;
  const double rhs = gap * gap * az * m.g2;
  const double scale = scale_of({m.f2 * m.g2, az * az, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

namespace detail {

// Real non-negative f with g > 0, checked mu-a.e. (positive weights only).
inline std::string real_nonneg_reason(const Vector& f, const Vector& g,
                                      const WeightedSpace& s) {
  for (std::size_t k : s.support()) {
    if (f[k].imag() != 0.0 || g[k].imag() != 0.0) return "nonreal input";
    if (f[k].real() < 0.0 || g[k].real() < 0.0) return "negative input";
    if (g[k].real() == 0.0) return "g vanishes on support";
  }
  return {};
}

}  // namespace detail

// Real non-negative specialisation with the band extracted from the data:
//   (int rho f^2)(int rho g^2) - (int rho f g)^2
//     <= (sqrt(M)-sqrt(m))^2 (int rho f g)(int rho g^2),
// (m, M) the tightest ratio band of f/g over the support.
inline BoundReport real_nonneg_km(const SampledFunction& f,
                                  const SampledFunction& g,
                                  const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::real_nonneg_km, tol);
  const Discretized d = discretize(f, g);
  if (std::string reason = detail::real_nonneg_reason(d.f, d.g, d.space);
      !reason.empty())
    return detail::fail_report(std::move(rep), std::move(reason));

  const RatioBand band = extract_band(d.f, d.g, d.space);
  rep.preconditions.push_back(
      check_pointwise(d.f, d.g, PointwiseBand{band}, d.space, tol));

  const detail::Moments m = detail::moments_of(d);
  const double fg = m.fg.real();  // non-negative data: the integral is real
  const double gap = std::sqrt(band.M) - std::sqrt(band.m);

  const double lhs = m.f2 * m.g2 - fg * fg;
  const double rhs = gap * gap * fg * m.g2;
  const double scale = scale_of({m.f2 * m.g2, fg * fg, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

// Classical weighted two-sequence inequality for non-negative tuples:
//   sum w x^2 / sum w x y - sum w x y / sum w y^2 <= (sqrt(M)-sqrt(m))^2
// with the band extracted from the ratios x_k/y_k over the support.
inline BoundReport discrete_km(const RealVector& x, const RealVector& y,
                               const std::vector<double>& w,
                               const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::discrete_km, tol);
  if (x.size() != y.size() || x.size() != w.size())
    throw std::invalid_argument("discrete_km: dimension mismatch");
  const WeightedSpace s{w};

  for (std::size_t k : s.support()) {
    if (x[k] < 0.0 || y[k] < 0.0)
      return detail::fail_report(std::move(rep), "negative input");
    if (y[k] == 0.0)
      return detail::fail_report(std::move(rep), "y vanishes on support");
  }

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k : s.support()) {
    const double wk = s.weight(k);
    sxx += wk * x[k] * x[k];
    sxy += wk * x[k] * y[k];
    syy += wk * y[k] * y[k];
  }
  if (sxy <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");

  Vector xf(x.size()), yf(y.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    xf[k] = Scalar{x[k], 0.0};
    yf[k] = Scalar{y[k], 0.0};
  }
  const RatioBand band = extract_band(xf, yf, s);
  rep.preconditions.push_back(
      check_pointwise(xf, yf, PointwiseBand{band}, s, tol));

  const double gap = std::sqrt(band.M) - std::sqrt(band.m);
  const double lhs = sxx / sxy - sxy / syy;
  const double rhs = gap * gap;
  const double scale = scale_of({sxx / sxy, sxy / syy, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

// Earlier unweighted reverse for doubly bounded positive tuples
// 0 < a <= a_k <= A, 0 < b <= b_k <= B:
//   sum a^2 / sum ab - sum ab / sum b^2 <= (sqrt(A/b) - sqrt(a/B))^2.
inline BoundReport shisha_mond(const RealVector& a_vec, const RealVector& b_vec,
                               double a, double A, double b, double B,
                               const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::shisha_mond, tol);
  if (a_vec.size() != b_vec.size() || a_vec.empty())
    throw std::invalid_argument("shisha_mond: dimension mismatch");
  if (!(0.0 < a) || !(a <= A) || !(0.0 < b) || !(b <= B) ||
      !std::isfinite(A) || !std::isfinite(B))
    return detail::fail_report(std::move(rep), "invalid bounds");
  for (std::size_t k = 0; k < a_vec.size(); ++k) {
    if (!(a <= a_vec[k]) || !(a_vec[k] <= A))
      return detail::fail_report(std::move(rep), "entry outside [a, A]");
    if (!(b <= b_vec[k]) || !(b_vec[k] <= B))
      return detail::fail_report(std::move(rep), "entry outside [b, B]");
  }

  double saa = 0.0, sab = 0.0, sbb = 0.0;
  for (std::size_t k = 0; k < a_vec.size(); ++k) {
    saa += a_vec[k] * a_vec[k];
    sab += a_vec[k] * b_vec[k];
    sbb += b_vec[k] * b_vec[k];
  }
  if (sab <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");

  const double root_hi = std::sqrt(A / b);
  const double root_lo = std::sqrt(a / B);
  const double lhs = saa / sab - sab / sbb;
  const double rhs = (root_hi - root_lo) * (root_hi - root_lo);
  const double scale = scale_of({saa / sab, sab / sbb, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  return rep;
}

// CSV ingestion for a pair of sampled functions on a shared grid.
// Columns: t, f_re, f_im, g_re, g_im, rho, mu_weight. Header required.
inline std::pair<SampledFunction, SampledFunction> read_sampled_csv(
    std::istream& in) {
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  auto split = [&](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    return cells;
  };

  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("sampled csv: missing header");
  const std::vector<std::string> expected{"t",    "f_re", "f_im", "g_re",
                                          "g_im", "rho",  "mu_weight"};
  if (split(line) != expected)
    throw std::invalid_argument(
        "sampled csv: header must be t,f_re,f_im,g_re,g_im,rho,mu_weight");

  std::vector<double> nodes, rho, mu;
  Vector fv, gv;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 7)
      throw std::invalid_argument("sampled csv: row " + std::to_string(line_no) +
                                  ": expected 7 columns");
    double v[7];
    for (std::size_t c = 0; c < 7; ++c) {
      std::size_t used = 0;
      try {
        v[c] = std::stod(cells[c], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cells[c].size() || cells[c].empty())
        throw std::invalid_argument("sampled csv: row " +
                                    std::to_string(line_no) +
                                    ": bad number '" + cells[c] + "'");
    }
    nodes.push_back(v[0]);
    fv.push_back(Scalar{v[1], v[2]});
    gv.push_back(Scalar{v[3], v[4]});
    rho.push_back(v[5]);
    mu.push_back(v[6]);
  }
  SampledFunction f{nodes, fv, rho, mu};
  SampledFunction g{std::move(nodes), std::move(gv), std::move(rho),
                    std::move(mu)};
  return {std::move(f), std::move(g)};
}

}  // namespace schwarz
