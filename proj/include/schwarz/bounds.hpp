// SPDX-License-Identifier: Apache-2.0
//
// Evaluators for the reverse Schwarz inequalities over weighted
// inner-product spaces: the dominated-ball multiplicative reverse, the
// additive reverse, their gamma/Gamma pair corollaries, and the
// Klamkin-McLenaghan-type difference-of-ratios bounds with their band and
// real-part variants.
//
// Each evaluator returns a BoundReport. Hypothesis failures are reported
// (holds left unset, machine-readable reason) rather than thrown, so batch
// runs can tabulate applicability across theorems with different domains.
// Equality is detected from the slack itself (|slack| <= eq_tol*scale);
// the theorem's stated equality configuration is evaluated independently
// and reported in `equality_conditions`.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schwarz/conditions.hpp"
#include "schwarz/space.hpp"

namespace schwarz {

enum class TheoremId {
  thm_premultiplicative,
  cor_pair_multiplicative,
  thm_additive,
  cor_pair_additive,
  thm_km_abstract,
  thm_km_abstract_re,
  km_quadratic_forms,
  cor_km_pair,
  km_band,
  prop_sgn_chain,
  km_band_re,
  prop_integral_ball,
  prop_integral_pair,
  cor_integral_band,
  real_nonneg_km,
  discrete_km,
  shisha_mond,
};

inline const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::thm_premultiplicative: return "thm_premultiplicative";
    case TheoremId::cor_pair_multiplicative: return "cor_pair_multiplicative";
    case TheoremId::thm_additive: return "thm_additive";
    case TheoremId::cor_pair_additive: return "cor_pair_additive";
    case TheoremId::thm_km_abstract: return "thm_km_abstract";
    case TheoremId::thm_km_abstract_re: return "thm_km_abstract_re";
    case TheoremId::km_quadratic_forms: return "km_quadratic_forms";
    case TheoremId::cor_km_pair: return "cor_km_pair";
    case TheoremId::km_band: return "km_band";
    case TheoremId::prop_sgn_chain: return "prop_sgn_chain";
    case TheoremId::km_band_re: return "km_band_re";
    case TheoremId::prop_integral_ball: return "prop_integral_ball";
    case TheoremId::prop_integral_pair: return "prop_integral_pair";
    case TheoremId::cor_integral_band: return "cor_integral_band";
    case TheoremId::real_nonneg_km: return "real_nonneg_km";
    case TheoremId::discrete_km: return "discrete_km";
    case TheoremId::shisha_mond: return "shisha_mond";
  }
  return "unknown";
}

inline std::optional<TheoremId> theorem_from_name(std::string_view name) {
  static const TheoremId all[] = {
      TheoremId::thm_premultiplicative, TheoremId::cor_pair_multiplicative,
      TheoremId::thm_additive,          TheoremId::cor_pair_additive,
      TheoremId::thm_km_abstract,       TheoremId::thm_km_abstract_re,
      TheoremId::km_quadratic_forms,    TheoremId::cor_km_pair,
      TheoremId::km_band,               TheoremId::prop_sgn_chain,
      TheoremId::km_band_re,            TheoremId::prop_integral_ball,
      TheoremId::prop_integral_pair,    TheoremId::cor_integral_band,
      TheoremId::real_nonneg_km,        TheoremId::discrete_km,
      TheoremId::shisha_mond};
  for (TheoremId id : all)
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

// A secondary inequality attached to a report: an equivalent restatement,
// a chained relaxation, or one link of a displayed chain.
struct BoundLink {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
};

struct BoundReport {
  TheoremId theorem_id{};
  std::string variant;  // distinguishes multi-form results, empty otherwise
  std::vector<ConditionReport> preconditions;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  std::optional<bool> holds;  // unset iff a hypothesis failed (see reason)
  bool equality = false;
  std::optional<bool> equality_conditions;
  std::string reason;  // non-empty iff holds is unset
  double tol = 0.0;
  double eq_tol = 0.0;
  double scale = 1.0;
  std::vector<BoundLink> links;

  bool precondition_failed() const { return !holds.has_value(); }
  bool violated() const { return holds.has_value() && !*holds; }
};

// Boundary of a hypothesis, used by the equality characterisations.
inline bool at_boundary(const ConditionReport& c, double eq_tol) {
  return std::abs(c.residual) <= eq_tol * c.scale;
}

namespace detail {

inline BoundReport start_report(TheoremId id, const Tolerance& tol,
                                std::string variant = {}) {
  BoundReport rep;
  rep.theorem_id = id;
  rep.variant = std::move(variant);
  rep.tol = tol.rel;
  rep.eq_tol = tol.eq;
  return rep;
}

inline BoundReport fail_report(BoundReport rep, std::string reason) {
  rep.reason = std::move(reason);
  rep.holds.reset();
  return rep;
}

inline void finish_report(BoundReport& rep, double lhs, double rhs,
                          double scale, const Tolerance& tol) {
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = rhs - lhs;
  rep.scale = scale;
  rep.holds = rep.slack >= -tol.rel * scale;
  rep.equality = *rep.holds && std::abs(rep.slack) <= tol.eq * scale;
}

inline BoundLink make_link(std::string label, double lhs, double rhs,
                           double tol_rel, double scale) {
  BoundLink link;
  link.label = std::move(label);
  link.lhs = lhs;
  link.rhs = rhs;
  link.slack = rhs - lhs;
  link.holds = link.slack >= -tol_rel * scale;
  return link;
}

inline bool positive_radius(double r) { return std::isfinite(r) && r > 0.0; }

}  // namespace detail

// ||x|| (||a||^2 - r^2)^(1/2) <= Re<x,a> under ||x-a|| <= r < ||a||,
// with the equivalent norm-squared restatement attached as a link.
// Equality iff ||x-a|| = r and ||x||^2 + r^2 = ||a||^2.
inline BoundReport thm_premultiplicative(const Vector& x, const Vector& a,
                                         double r, const WeightedSpace& s,
                                         const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::thm_premultiplicative, tol);
  if (!detail::positive_radius(r))
    return detail::fail_report(std::move(rep), "radius must be positive");
  const ConditionReport ball = check_ball(x, a, r, /*strict_dominance=*/true, s, tol);
  rep.preconditions.push_back(ball);
  if (!ball.satisfied) return detail::fail_report(std::move(rep), ball.detail);

  const double na = norm(a, s);
  const double nx = norm(x, s);
  const double q = std::sqrt(std::max(0.0, na * na - r * r));
  const double rip = inner_product(x, a, s).real();

  const double lhs = nx * q;
  const double rhs = rip;
  const double scale = scale_of({nx * na, rip, r * r});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  const double sq_scale = scale_of({nx * nx * na * na, rip * rip, r * r * nx * nx});
  rep.links.push_back(detail::make_link("norm-squared form",
                                        nx * nx * na * na - rip * rip,
                                        r * r * nx * nx, tol.rel, sq_scale));

  const double dist = distance(x, a, s);
  rep.equality_conditions =
      approx_eq(dist, r, tol.eq, scale_of({dist, r})) &&
      approx_eq(nx * nx + r * r, na * na, tol.eq, scale_of({nx * nx, r * r, na * na}));
  return rep;
}

// ||x|| ||y|| <= Re[(conj(Gamma)+conj(gamma)) <x,y>] / (2 sqrt(Re(Gamma conj(gamma))))
// under the disc condition, plus the weaker chained modulus bound.
// Equality iff the disc condition is tight and ||x|| = sqrt(Re(Gamma conj(gamma))) ||y||.
inline BoundReport cor_pair_multiplicative(const Vector& x, const Vector& y,
                                           const ScalarPair& p,
                                           const WeightedSpace& s,
                                           const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::cor_pair_multiplicative, tol);
  const double d = p.real_product();
  if (!(d > kZeroGuard))
    return detail::fail_report(std::move(rep), "invalid pair");
  const ConditionReport pc = check_pair_quadratic(x, y, p, s, tol);
  rep.preconditions.push_back(pc);
  if (!pc.satisfied) return detail::fail_report(std::move(rep), pc.detail);

  const double nx = norm(x, s);
  const double ny = norm(y, s);
  const Scalar z = inner_product(x, y, s);
  const double root = std::sqrt(d);
  const Scalar sum = p.Gamma + p.gamma;

  const double lhs = nx * ny;
  const double rhs = (std::conj(sum) * z).real() / (2.0 * root);
  const double chained_rhs = std::abs(sum) * std::abs(z) / root;
  const double scale = scale_of({lhs, rhs, chained_rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);
  rep.links.push_back(
      detail::make_link("chained modulus bound", lhs, chained_rhs, tol.rel, scale));

  rep.equality_conditions =
      at_boundary(pc, tol.eq) &&
      approx_eq(nx, root * ny, tol.eq, scale_of({nx, root * ny}));
  return rep;
}

// ||x|| ||a|| - Re<x,a> <= r^2/2 under ||x-a|| <= r (no dominance needed).
// Equality iff ||x-a|| = r and ||x|| = ||a||.
inline BoundReport thm_additive(const Vector& x, const Vector& a, double r,
                                const WeightedSpace& s,
                                const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::thm_additive, tol);
  if (!detail::positive_radius(r))
    return detail::fail_report(std::move(rep), "radius must be positive");
  const ConditionReport ball = check_ball(x, a, r, /*strict_dominance=*/false, s, tol);
  rep.preconditions.push_back(ball);
  if (!ball.satisfied) return detail::fail_report(std::move(rep), ball.detail);

  const double na = norm(a, s);
  const double nx = norm(x, s);
  const double rip = inner_product(x, a, s).real();

  const double lhs = nx * na - rip;
  const double rhs = 0.5 * r * r;
  const double scale = scale_of({nx * na, rip, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  const double dist = distance(x, a, s);
  rep.equality_conditions =
      approx_eq(dist, r, tol.eq, scale_of({dist, r})) &&
      approx_eq(nx, na, tol.eq, scale_of({nx, na}));
  return rep;
}

// ||x|| ||y|| - Re[(conj(Gamma)+conj(gamma)) <x,y>] / |Gamma+gamma|
//   <= |Gamma-gamma|^2 ||y||^2 / (4 |Gamma+gamma|), Gamma != -gamma.
// Equality iff the disc condition is tight and ||x|| = |Gamma+gamma|/2 ||y||.
inline BoundReport cor_pair_additive(const Vector& x, const Vector& y,
                                     const ScalarPair& p,
                                     const WeightedSpace& s,
                                     const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::cor_pair_additive, tol);
  if (!p.nondegenerate_sum())
    return detail::fail_report(std::move(rep), "degenerate pair sum");
  const ConditionReport pc = check_pair_quadratic(x, y, p, s, tol);
  rep.preconditions.push_back(pc);
  if (!pc.satisfied) return detail::fail_report(std::move(rep), pc.detail);

  const double nx = norm(x, s);
  const double ny = norm(y, s);
  const Scalar z = inner_product(x, y, s);
  const Scalar sum = p.Gamma + p.gamma;
  const double abs_sum = std::abs(sum);
  const double diff = std::abs(p.Gamma - p.gamma);

  const double lhs = nx * ny - (std::conj(sum) * z).real() / abs_sum;
  const double rhs = 0.25 * diff * diff * ny * ny / abs_sum;
  const double scale = scale_of({nx * ny, std::abs(z), rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  rep.equality_conditions =
      at_boundary(pc, tol.eq) &&
      approx_eq(nx, 0.5 * abs_sum * ny, tol.eq, scale_of({nx, 0.5 * abs_sum * ny}));
  return rep;
}

// ||x||^2/|<x,a>| - |<x,a>|/||a||^2 <= 2r^2 / (||a|| (||a|| + sqrt(||a||^2-r^2)))
// under ||x-a|| <= r < ||a|| and <x,a> != 0. The right side is evaluated
// exactly as written; that form is already cancellation-free as r -> 0.
// The stated equality configuration additionally needs
// Re<x,a> = |<x,a>| = ||a|| sqrt(||a||^2-r^2); it is reported separately
// while the equality flag is decided from the slack alone.
inline BoundReport thm_km_abstract(const Vector& x, const Vector& a, double r,
                                   const WeightedSpace& s,
                                   const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::thm_km_abstract, tol);
  if (!detail::positive_radius(r))
    return detail::fail_report(std::move(rep), "radius must be positive");
  const ConditionReport ball = check_ball(x, a, r, /*strict_dominance=*/true, s, tol);
  rep.preconditions.push_back(ball);
  if (!ball.satisfied) return detail::fail_report(std::move(rep), ball.detail);

  const Scalar z = inner_product(x, a, s);
  const double az = std::abs(z);
  if (az <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");

  const double na = norm(a, s);
  const double nx = norm(x, s);
  const double q = std::sqrt(std::max(0.0, na * na - r * r));

  const double lhs = nx * nx / az - az / (na * na);
  const double rhs = 2.0 * r * r / (na * (na + q));
  const double scale = scale_of({nx * nx / az, az / (na * na), rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  const double dist = distance(x, a, s);
  const double eq_scale = scale_of({az, na * q});
  rep.equality_conditions = approx_eq(dist, r, tol.eq, scale_of({dist, r})) &&
                            approx_eq(z.real(), az, tol.eq, eq_scale) &&
                            approx_eq(az, na * q, tol.eq, eq_scale);
  return rep;
}

// Real-part variant: |<x,a>| replaced by |Re<x,a>| throughout, requiring
// Re<x,a> != 0. Equality configuration: ||x-a|| = r and
// Re<x,a> = ||a|| sqrt(||a||^2-r^2).
inline BoundReport thm_km_abstract_re(const Vector& x, const Vector& a,
                                      double r, const WeightedSpace& s,
                                      const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::thm_km_abstract_re, tol);
  if (!detail::positive_radius(r))
    return detail::fail_report(std::move(rep), "radius must be positive");
  const ConditionReport ball = check_ball(x, a, r, /*strict_dominance=*/true, s, tol);
  rep.preconditions.push_back(ball);
  if (!ball.satisfied) return detail::fail_report(std::move(rep), ball.detail);

  const Scalar z = inner_product(x, a, s);
  const double rz = std::abs(z.real());
  if (rz <= kZeroGuard)
    return detail::fail_report(std::move(rep),
                               "real part of inner product is zero");

  const double na = norm(a, s);
  const double nx = norm(x, s);
  const double q = std::sqrt(std::max(0.0, na * na - r * r));

  const double lhs = nx * nx / rz - rz / (na * na);
  const double rhs = 2.0 * r * r / (na * (na + q));
  const double scale = scale_of({nx * nx / rz, rz / (na * na), rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  const double dist = distance(x, a, s);
  rep.equality_conditions =
      approx_eq(dist, r, tol.eq, scale_of({dist, r})) &&
      approx_eq(z.real(), na * q, tol.eq, scale_of({z.real(), na * q}));
  return rep;
}

// Multiplied-out quadratic forms of the two bounds above, free of
// denominators so no nonvanishing hypothesis is needed:
//   ||x||^2 ||a||^2 - |<x,a>|^2    <= coeff * |<x,a>|      (modulus form)
//   ||x||^2 ||a||^2 - [Re<x,a>]^2  <= coeff * |Re<x,a>|    (real-part form)
// with coeff = 2 r^2 ||a||^2 / (||a|| (||a|| + sqrt(||a||^2-r^2))).
// The modulus report carries the [Re<x,a>]^2 <= |<x,a>|^2 comparison link
// (the real-part form is the tighter of the two).
inline std::pair<BoundReport, BoundReport> km_quadratic_forms(
    const Vector& x, const Vector& a, double r, const WeightedSpace& s,
    const Tolerance& tol = {}) {
  BoundReport abs_rep =
      detail::start_report(TheoremId::km_quadratic_forms, tol, "modulus");
  BoundReport re_rep =
      detail::start_report(TheoremId::km_quadratic_forms, tol, "real-part");
  if (!detail::positive_radius(r)) {
    auto reason = "radius must be positive";
    return {detail::fail_report(std::move(abs_rep), reason),
            detail::fail_report(std::move(re_rep), reason)};
  }
  const ConditionReport ball = check_ball(x, a, r, /*strict_dominance=*/true, s, tol);
  abs_rep.preconditions.push_back(ball);
  re_rep.preconditions.push_back(ball);
  if (!ball.satisfied) {
    return {detail::fail_report(std::move(abs_rep), ball.detail),
            detail::fail_report(std::move(re_rep), ball.detail)};
  }

  const Scalar z = inner_product(x, a, s);
  const double az = std::abs(z);
  const double rz = z.real();
  const double na = norm(a, s);
  const double nx = norm(x, s);
  const double q = std::sqrt(std::max(0.0, na * na - r * r));
  const double coeff = 2.0 * r * r * na * na / (na * (na + q));
  const double gram = nx * nx * na * na;

  const double scale = scale_of({gram, az * az, coeff * az});
  detail::finish_report(abs_rep, gram - az * az, coeff * az, scale, tol);
  detail::finish_report(re_rep, gram - rz * rz, coeff * std::abs(rz), scale, tol);
  abs_rep.links.push_back(detail::make_link("real part square vs modulus square",
                                            rz * rz, az * az, tol.rel,
                                            scale_of({rz * rz, az * az})));

  const double dist = distance(x, a, s);
  const bool dist_tight = approx_eq(dist, r, tol.eq, scale_of({dist, r}));
  const double eq_scale = scale_of({az, na * q});
  abs_rep.equality_conditions = dist_tight &&
                                approx_eq(rz, az, tol.eq, eq_scale) &&
                                approx_eq(az, na * q, tol.eq, eq_scale);
  re_rep.equality_conditions =
      dist_tight && approx_eq(rz, na * q, tol.eq, eq_scale);
  return {std::move(abs_rep), std::move(re_rep)};
}

// ||x||^2/|<x,y>| - |<x,y>|/||y||^2 <= |Gamma+gamma| - 2 sqrt(Re(Gamma conj(gamma)))
// under the disc condition with <x,y> != 0.
inline BoundReport cor_km_pair(const Vector& x, const Vector& y,
                               const ScalarPair& p, const WeightedSpace& s,
                               const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::cor_km_pair, tol);
  const double d = p.real_product();
  if (!(d > kZeroGuard))
    return detail::fail_report(std::move(rep), "invalid pair");
  const Scalar z = inner_product(x, y, s);
  const double az = std::abs(z);
  if (az <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");
  const ConditionReport pc = check_pair_quadratic(x, y, p, s, tol);
  rep.preconditions.push_back(pc);
  if (!pc.satisfied) return detail::fail_report(std::move(rep), pc.detail);

  const double nx = norm(x, s);
  const double ny2 = norm_squared(y, s);
  const double root = std::sqrt(d);
  const Scalar sum = p.Gamma + p.gamma;
  const double abs_sum = std::abs(sum);

  const double lhs = nx * nx / az - az / ny2;
  const double rhs = abs_sum - 2.0 * root;
  const double scale = scale_of({nx * nx / az, az / ny2, abs_sum});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  // Alignment of <x,y> with conj(Gamma+gamma), the direction forced by
  // the equality case of the underlying enclosure bound.
  const double eq_scale = scale_of({abs_sum * az, abs_sum * root * ny2});
  rep.equality_conditions =
      at_boundary(pc, tol.eq) &&
      approx_eq((std::conj(sum) * z).real(), abs_sum * az, tol.eq, eq_scale) &&
      approx_eq(abs_sum * az, abs_sum * root * ny2, tol.eq, eq_scale);
  return rep;
}

// Band specialisation Gamma = M >= m = gamma > 0:
// ||x||^2/|<x,y>| - |<x,y>|/||y||^2 <= (sqrt(M) - sqrt(m))^2.
// Coincides with cor_km_pair at (gamma, Gamma) = (m, M).
// Equality iff the band condition is tight and
// Re<x,y> = |<x,y>| = sqrt(Mm) ||y||^2.
inline BoundReport km_band(const Vector& x, const Vector& y,
                           const RatioBand& b, const WeightedSpace& s,
                           const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::km_band, tol);
  if (!b.valid_positive())
    return detail::fail_report(std::move(rep), "invalid band");
  const Scalar z = inner_product(x, y, s);
  const double az = std::abs(z);
  if (az <= kZeroGuard)
    return detail::fail_report(std::move(rep), "inner product is zero");
  const ConditionReport bc = check_pair_quadratic(x, y, b.pair(), s, tol);
  rep.preconditions.push_back(bc);
  if (!bc.satisfied) return detail::fail_report(std::move(rep), "band condition failed");

  const double nx = norm(x, s);
  const double ny2 = norm_squared(y, s);
  const double root_gap = std::sqrt(b.M) - std::sqrt(b.m);

  const double lhs = nx * nx / az - az / ny2;
  const double rhs = root_gap * root_gap;
  const double scale = scale_of({nx * nx / az, az / ny2, rhs});
  detail::finish_report(rep, lhs, rhs, scale, tol);

  const double geo = std::sqrt(b.M * b.m);
  const double eq_scale = scale_of({az, geo * ny2});
  rep.equality_conditions = at_boundary(bc, tol.eq) &&
                            approx_eq(z.real(), az, tol.eq, eq_scale) &&
                            approx_eq(az, geo * ny2, tol.eq, eq_scale);
  return rep;
}

// Chain through the rotated real part u = Re[sgn((Gamma+gamma)/2) <x,y>]:
//   0 <= ||x||^2||y||^2 - |<x,y>|^2
//     <= ||x||^2||y||^2 - u^2
//     <= (|Gamma+gamma| - 2 sqrt(Re(Gamma conj(gamma)))) |u| ||y||^2
//     <= (same coefficient) |<x,y>| ||y||^2.
// The primary lhs/rhs is the central link; every displayed link is attached
// with its own holds flag. Equality iff the disc condition is tight and
// u = sqrt(Re(Gamma conj(gamma))) ||y||^2.
inline BoundReport prop_sgn_chain(const Vector& x, const Vector& y,
                                  const ScalarPair& p, const WeightedSpace& s,
                                  const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::prop_sgn_chain, tol);
  const double d = p.real_product();
  if (!(d > kZeroGuard))
    return detail::fail_report(std::move(rep), "invalid pair");
  const ConditionReport pc = check_pair_quadratic(x, y, p, s, tol);
  rep.preconditions.push_back(pc);
  if (!pc.satisfied) return detail::fail_report(std::move(rep), pc.detail);

  const Scalar z = inner_product(x, y, s);
  const double az = std::abs(z);
  const double nx2 = norm_squared(x, s);
  const double ny2 = norm_squared(y, s);
  const Scalar sum = p.Gamma + p.gamma;
  const double abs_sum = std::abs(sum);  // > 0 since Re(Gamma conj(gamma)) > 0
  // Rotation aligning <x,y> with the pair midpoint. Substituting
  // a = (Gamma+gamma)/2 y turns Re<x,a> into Re[conj(sgn) <x,y>] |a|,
  // the conjugate coming from <x, c y> = conj(c) <x,y>.
  const Scalar sgn = sum / abs_sum;
  const double u = (std::conj(sgn) * z).real();
  const double root = std::sqrt(d);
  const double coeff = abs_sum - 2.0 * root;

  const double gram = nx2 * ny2;
  const double gap_abs = gram - az * az;
  const double gap_u = gram - u * u;
  const double bound_u = coeff * std::abs(u) * ny2;
  const double bound_abs = coeff * az * ny2;
  const double scale = scale_of({gram, az * az, bound_abs});

  detail::finish_report(rep, gap_u, bound_u, scale, tol);
  rep.links.push_back(
      detail::make_link("schwarz gap nonnegative", 0.0, gap_abs, tol.rel, scale));
  rep.links.push_back(
      detail::make_link("modulus gap vs rotated real-part gap", gap_abs, gap_u,
                        tol.rel, scale));
  rep.links.push_back(detail::make_link("rotated real-part gap bound", gap_u,
                                        bound_u, tol.rel, scale));
  rep.links.push_back(detail::make_link("modulus relaxation", bound_u,
                                        bound_abs, tol.rel, scale));

  rep.equality_conditions =
      at_boundary(pc, tol.eq) &&
      approx_eq(u, root * ny2, tol.eq, scale_of({u, root * ny2}));
  return rep;
}

// Real-part band variant, requiring Re<x,y> != 0 for the ratio form:
//   ||x||^2/|Re<x,y>| - |Re<x,y>|/||y||^2 <= (sqrt(M)-sqrt(m))^2
// with the multiplied-out form attached as a link (computable even when
// Re<x,y> = 0). Equality iff the band condition is tight and
// Re<x,y> = sqrt(Mm) ||y||^2.
inline BoundReport km_band_re(const Vector& x, const Vector& y,
                              const RatioBand& b, const WeightedSpace& s,
                              const Tolerance& tol = {}) {
  BoundReport rep = detail::start_report(TheoremId::km_band_re, tol);
  if (!b.valid_positive())
    return detail::fail_report(std::move(rep), "invalid band");
  const ConditionReport bc = check_pair_quadratic(x, y, b.pair(), s, tol);
  rep.preconditions.push_back(bc);
  if (!bc.satisfied) return detail::fail_report(std::move(rep), "band condition failed");

  const Scalar z = inner_product(x, y, s);
  const double rz = z.real();
  const double arz = std::abs(rz);
  const double nx2 = norm_squared(x, s);
  const double ny2 = norm_squared(y, s);
  const double root_gap = std::sqrt(b.M) - std::sqrt(b.m);
  const double rhs_coeff = root_gap * root_gap;

  const double sq_lhs = nx2 * ny2 - rz * rz;
  const double sq_rhs = rhs_coeff * arz * ny2;
  const double sq_scale = scale_of({nx2 * ny2, rz * rz, sq_rhs});
  BoundLink sq_link = detail::make_link("multiplied-out form", sq_lhs, sq_rhs,
                                        tol.rel, sq_scale);

  const double geo = std::sqrt(b.M * b.m);
  const bool eq_conf =
      at_boundary(bc, tol.eq) &&
      approx_eq(rz, geo * ny2, tol.eq, scale_of({rz, geo * ny2}));

  if (arz <= kZeroGuard) {
    rep = detail::fail_report(std::move(rep),
                              "real part of inner product is zero");
    rep.links.push_back(std::move(sq_link));
    rep.equality_conditions = eq_conf;
    return rep;
  }

  const double lhs = nx2 / arz - arz / ny2;
  const double scale = scale_of({nx2 / arz, arz / ny2, rhs_coeff});
  detail::finish_report(rep, lhs, rhs_coeff, scale, tol);
  rep.links.push_back(std::move(sq_link));
  rep.equality_conditions = eq_conf;
  return rep;
}

}  // namespace schwarz
