// SPDX-License-Identifier: Apache-2.0
//
// Randomized certification: for every evaluator, run seeded
// hypothesis-satisfying instances and demand a non-negative slack, check
// the constructed equality witnesses trip the equality detectors, and
// cross-check the routes that must agree (band vs pair form, weighted
// integral vs inner-product form, discrete vs band form). Identical seeds
// produce byte-identical summaries.

#pragma once

#include <cstdio>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "schwarz/bounds.hpp"
#include "schwarz/generate.hpp"
#include "schwarz/integral.hpp"
#include "schwarz/witness.hpp"

namespace schwarz {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 1000;  // per evaluator
  std::vector<std::size_t> dims = {1, 2, 3, 4, 5, 6, 7, 8};
  std::size_t witness_checks = 100;
  Tolerance tol{};
};

struct EvaluatorSummary {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t precondition_failures = 0;
  std::size_t witness_checks = 0;
  std::size_t witness_failures = 0;
  std::size_t consistency_checks = 0;
  std::size_t consistency_failures = 0;
  double min_slack_rel = std::numeric_limits<double>::infinity();

  bool ok() const {
    return violations == 0 && precondition_failures == 0 &&
           witness_failures == 0 && consistency_failures == 0;
  }
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<std::size_t> dims;
  double tol_rel = 0.0;
  std::vector<EvaluatorSummary> evaluators;

  bool ok() const {
    for (const auto& e : evaluators)
      if (!e.ok()) return false;
    return true;
  }
};

namespace detail {

inline void tally(EvaluatorSummary& es, const BoundReport& rep) {
  ++es.instances;
  if (rep.precondition_failed()) {
    ++es.precondition_failures;
    return;
  }
  if (rep.violated()) ++es.violations;
  es.min_slack_rel = std::min(es.min_slack_rel, rep.slack / rep.scale);
  for (const BoundLink& link : rep.links) {
    if (!link.holds) ++es.violations;
    es.min_slack_rel = std::min(es.min_slack_rel, link.slack / rep.scale);
  }
}

// Equality witnesses must both trip the detector and land within
// 1e-12 * scale of zero slack.
inline void tally_witness(EvaluatorSummary& es, const BoundReport& rep) {
  ++es.witness_checks;
  const bool ok = !rep.precondition_failed() && rep.equality &&
                  std::abs(rep.slack) <= 1e-12 * rep.scale;
  if (!ok) ++es.witness_failures;
}

inline void tally_consistency(EvaluatorSummary& es, double got, double want,
                              double extra_scale = 0.0) {
  ++es.consistency_checks;
  if (std::abs(got - want) > 1e-12 * scale_of({got, want, extra_scale}))
    ++es.consistency_failures;
}

struct WitnessBandParams {
  double m, M;
};

inline WitnessBandParams gen_witness_band(Rng& rng) {
  const double m = rng.log_uniform(0.2, 2.0);
  const double M = rng.coin(0.1) ? m : m * std::exp(rng.uniform(0.1, 1.5));
  return {m, M};
}

inline WeightedSpace witness_space(Rng& rng, std::size_t dim) {
  std::vector<double> w(std::max<std::size_t>(2, dim));
  for (double& wk : w) wk = rng.log_uniform(0.3, 2.0);
  return WeightedSpace(std::move(w));
}

}  // namespace detail

inline VerifySummary run_verification(const VerifyOptions& opt) {
  if (opt.instances < 1)
    throw std::invalid_argument("run_verification: need at least one instance");
  if (opt.dims.empty())
    throw std::invalid_argument("run_verification: empty dimension list");
  for (std::size_t d : opt.dims)
    if (d < 1)
      throw std::invalid_argument("run_verification: dimensions must be >= 1");

  VerifySummary summary;
  summary.seed = opt.seed;
  summary.instances = opt.instances;
  summary.dims = opt.dims;
  summary.tol_rel = opt.tol.rel;

  const std::vector<std::string> rows = {
      "thm_premultiplicative",
      "cor_pair_multiplicative",
      "thm_additive",
      "cor_pair_additive",
      "thm_km_abstract",
      "thm_km_abstract_re",
      "km_quadratic_forms[modulus]",
      "km_quadratic_forms[real-part]",
      "cor_km_pair",
      "km_band",
      "prop_sgn_chain",
      "km_band_re",
      "prop_integral_ball",
      "prop_integral_pair",
      "cor_integral_band",
      "real_nonneg_km",
      "discrete_km",
      "shisha_mond",
  };

  std::mt19937_64 master(opt.seed);
  std::vector<std::uint64_t> row_seeds(rows.size());
  for (auto& rs : row_seeds) rs = master();

  const Tolerance& tol = opt.tol;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    EvaluatorSummary es;
    es.name = rows[row];
    Rng rng(row_seeds[row]);

    for (std::size_t i = 0; i < opt.instances; ++i) {
      const std::size_t dim = opt.dims[i % opt.dims.size()];
      const bool complex_field = rng.coin();

      switch (row) {
        case 0: {  // thm_premultiplicative
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          detail::tally(es, thm_premultiplicative(inst.x, inst.a, inst.r,
                                                  inst.space, tol));
          break;
        }
        case 1: {  // cor_pair_multiplicative
          const PairInstance inst = gen_pair(rng, dim, complex_field);
          detail::tally(es, cor_pair_multiplicative(inst.x, inst.y, inst.pair,
                                                    inst.space, tol));
          break;
        }
        case 2: {  // thm_additive, sometimes without dominance
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          const double r =
              rng.coin() ? inst.r : inst.r * rng.uniform(1.0, 3.0);
          detail::tally(es, thm_additive(inst.x, inst.a, r, inst.space, tol));
          break;
        }
        case 3: {  // cor_pair_additive
          const PairInstance inst = gen_pair(rng, dim, complex_field);
          detail::tally(es, cor_pair_additive(inst.x, inst.y, inst.pair,
                                              inst.space, tol));
          break;
        }
        case 4: {  // thm_km_abstract
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          detail::tally(
              es, thm_km_abstract(inst.x, inst.a, inst.r, inst.space, tol));
          break;
        }
        case 5: {  // thm_km_abstract_re
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          detail::tally(
              es, thm_km_abstract_re(inst.x, inst.a, inst.r, inst.space, tol));
          break;
        }
        case 6: {  // km_quadratic_forms, modulus form
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          detail::tally(es, km_quadratic_forms(inst.x, inst.a, inst.r,
                                               inst.space, tol)
                                .first);
          break;
        }
        case 7: {  // km_quadratic_forms, real-part form
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          detail::tally(es, km_quadratic_forms(inst.x, inst.a, inst.r,
                                               inst.space, tol)
                                .second);
          break;
        }
        case 8: {  // cor_km_pair
          const PairInstance inst = gen_pair(rng, dim, complex_field);
          detail::tally(
              es, cor_km_pair(inst.x, inst.y, inst.pair, inst.space, tol));
          break;
        }
        case 9: {  // km_band + agreement with cor_km_pair at (m, M)
          const BandInstance inst = gen_band(rng, dim, complex_field);
          const BoundReport band_rep =
              km_band(inst.x, inst.y, inst.band, inst.space, tol);
          detail::tally(es, band_rep);
          const BoundReport pair_rep = cor_km_pair(
              inst.x, inst.y, inst.band.pair(), inst.space, tol);
          if (!band_rep.precondition_failed() &&
              !pair_rep.precondition_failed()) {
            detail::tally_consistency(es, band_rep.lhs, pair_rep.lhs,
                                      band_rep.scale);
            detail::tally_consistency(es, band_rep.rhs, pair_rep.rhs,
                                      band_rep.scale);
          }
          break;
        }
        case 10: {  // prop_sgn_chain
          const PairInstance inst = gen_pair(rng, dim, complex_field);
          detail::tally(
              es, prop_sgn_chain(inst.x, inst.y, inst.pair, inst.space, tol));
          break;
        }
        case 11: {  // km_band_re
          const BandInstance inst = gen_band(rng, dim, complex_field);
          detail::tally(es,
                        km_band_re(inst.x, inst.y, inst.band, inst.space, tol));
          break;
        }
        case 12: {  // prop_integral_ball vs quadratic modulus form
          const BallInstance inst = gen_ball(rng, dim, complex_field);
          auto [fs, gs] = as_sampled(rng, inst.x, inst.a, inst.space);
          const BoundReport rep = prop_integral_ball(fs, gs, inst.r, tol);
          detail::tally(es, rep);
          const BoundReport ref =
              km_quadratic_forms(inst.x, inst.a, inst.r, inst.space, tol).first;
          if (!rep.precondition_failed() && !ref.precondition_failed()) {
            detail::tally_consistency(es, rep.lhs, ref.lhs, rep.scale);
            detail::tally_consistency(es, rep.rhs, ref.rhs, rep.scale);
          }
          break;
        }
        case 13: {  // prop_integral_pair vs cor_km_pair multiplied out
          const PairInstance inst = gen_pair(rng, dim, complex_field);
          auto [fs, gs] = as_sampled(rng, inst.x, inst.y, inst.space);
          const BoundReport rep = prop_integral_pair(fs, gs, inst.pair, tol);
          detail::tally(es, rep);
          const BoundReport ref =
              cor_km_pair(inst.x, inst.y, inst.pair, inst.space, tol);
          if (!rep.precondition_failed() && !ref.precondition_failed()) {
            const double az = std::abs(inner_product(inst.x, inst.y, inst.space));
            const double g2 = norm_squared(inst.y, inst.space);
            detail::tally_consistency(es, rep.lhs, ref.lhs * az * g2, rep.scale);
            detail::tally_consistency(es, rep.rhs, ref.rhs * az * g2, rep.scale);
          }
          break;
        }
        case 14: {  // cor_integral_band vs km_band multiplied out
          const BandInstance inst = gen_band(rng, dim, complex_field);
          auto [fs, gs] = as_sampled(rng, inst.x, inst.y, inst.space);
          const BoundReport rep = cor_integral_band(fs, gs, inst.band, tol);
          detail::tally(es, rep);
          const BoundReport ref =
              km_band(inst.x, inst.y, inst.band, inst.space, tol);
          if (!rep.precondition_failed() && !ref.precondition_failed()) {
            const double az = std::abs(inner_product(inst.x, inst.y, inst.space));
            const double g2 = norm_squared(inst.y, inst.space);
            detail::tally_consistency(es, rep.lhs, ref.lhs * az * g2, rep.scale);
            detail::tally_consistency(es, rep.rhs, ref.rhs * az * g2, rep.scale);
          }
          break;
        }
        case 15: {  // real_nonneg_km vs discrete_km multiplied out
          const PositiveInstance inst = gen_positive(rng, dim);
          const WeightedSpace s{inst.weights};
          Vector xf(dim), yf(dim);
          for (std::size_t k = 0; k < dim; ++k) {
            xf[k] = Scalar{inst.x[k], 0.0};
            yf[k] = Scalar{inst.y[k], 0.0};
          }
          auto [fs, gs] = as_sampled(rng, xf, yf, s);
          const BoundReport rep = real_nonneg_km(fs, gs, tol);
          detail::tally(es, rep);
          const BoundReport ref = discrete_km(inst.x, inst.y, inst.weights, tol);
          if (!rep.precondition_failed() && !ref.precondition_failed()) {
            double sxy = 0.0, syy = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
              sxy += inst.weights[k] * inst.x[k] * inst.y[k];
              syy += inst.weights[k] * inst.y[k] * inst.y[k];
            }
            detail::tally_consistency(es, rep.lhs, ref.lhs * sxy * syy, rep.scale);
            detail::tally_consistency(es, rep.rhs, ref.rhs * sxy * syy, rep.scale);
          }
          break;
        }
        case 16: {  // discrete_km vs km_band on the extracted band
          const PositiveInstance inst = gen_positive(rng, dim);
          const BoundReport rep = discrete_km(inst.x, inst.y, inst.weights, tol);
          detail::tally(es, rep);
          if (!rep.precondition_failed()) {
            const WeightedSpace s{inst.weights};
            Vector xf(dim), yf(dim);
            for (std::size_t k = 0; k < dim; ++k) {
              xf[k] = Scalar{inst.x[k], 0.0};
              yf[k] = Scalar{inst.y[k], 0.0};
            }
            const RatioBand band = extract_band(xf, yf, s);
            const BoundReport ref = km_band(xf, yf, band, s, tol);
            if (!ref.precondition_failed()) {
              detail::tally_consistency(es, rep.lhs, ref.lhs, rep.scale);
              detail::tally_consistency(es, rep.rhs, ref.rhs, rep.scale);
            }
          }
          break;
        }
        case 17: {  // shisha_mond, refined by discrete_km's extracted band
          const ShishaInstance inst = gen_shisha(rng, dim);
          const BoundReport rep = shisha_mond(inst.a_vec, inst.b_vec, inst.a,
                                              inst.A, inst.b, inst.B, tol);
          detail::tally(es, rep);
          const std::vector<double> ones(dim, 1.0);
          const BoundReport km = discrete_km(inst.a_vec, inst.b_vec, ones, tol);
          if (!rep.precondition_failed() && !km.precondition_failed()) {
            ++es.consistency_checks;
            if (km.rhs > rep.rhs + 1e-12 * scale_of({km.rhs, rep.rhs}))
              ++es.consistency_failures;
          }
          break;
        }
        default:
          break;
      }
    }

    // Equality witnesses with random parameters.
    for (std::size_t j = 0; j < opt.witness_checks; ++j) {
      const std::size_t dim = std::max<std::size_t>(2, opt.dims[j % opt.dims.size()]);
      const WeightedSpace ws = detail::witness_space(rng, dim);
      const double na = rng.log_uniform(0.5, 2.0);
      const double frac = rng.uniform(0.15, 0.9);
      const auto band_params = detail::gen_witness_band(rng);
      const double m = band_params.m;
      const double M = band_params.M;

      switch (row) {
        case 0: {
          auto [x, a] = equality_witness_premultiplicative(na, na * frac, ws);
          detail::tally_witness(es, thm_premultiplicative(x, a, na * frac, ws, tol));
          break;
        }
        case 1: {
          auto [x, y, w] = equality_witness_pair_multiplicative(m, M);
          detail::tally_witness(es, cor_pair_multiplicative(
                                        x, y, RatioBand{m, M}.pair(),
                                        WeightedSpace{w}, tol));
          break;
        }
        case 2: {
          auto [x, a] = equality_witness_additive(na, na * frac, ws);
          detail::tally_witness(es, thm_additive(x, a, na * frac, ws, tol));
          break;
        }
        case 3: {
          auto [x, y, w] = equality_witness_pair_additive(m, M);
          detail::tally_witness(es, cor_pair_additive(x, y,
                                                      RatioBand{m, M}.pair(),
                                                      WeightedSpace{w}, tol));
          break;
        }
        case 4: {
          auto [x, a] = equality_witness_km_abstract(na, na * frac, ws);
          detail::tally_witness(es, thm_km_abstract(x, a, na * frac, ws, tol));
          break;
        }
        case 5: {
          auto [x, a] = equality_witness_km_abstract(na, na * frac, ws);
          detail::tally_witness(es, thm_km_abstract_re(x, a, na * frac, ws, tol));
          break;
        }
        case 6: {
          auto [x, a] = equality_witness_km_abstract(na, na * frac, ws);
          detail::tally_witness(
              es, km_quadratic_forms(x, a, na * frac, ws, tol).first);
          break;
        }
        case 7: {
          auto [x, a] = equality_witness_km_abstract(na, na * frac, ws);
          detail::tally_witness(
              es, km_quadratic_forms(x, a, na * frac, ws, tol).second);
          break;
        }
        case 8: {
          auto [x, y, w] = equality_witness_band(m, M);
          detail::tally_witness(es, cor_km_pair(x, y, RatioBand{m, M}.pair(),
                                                WeightedSpace{w}, tol));
          break;
        }
        case 9: {
          auto [x, y, w] = equality_witness_band(m, M);
          detail::tally_witness(
              es, km_band(x, y, RatioBand{m, M}, WeightedSpace{w}, tol));
          break;
        }
        case 10: {
          auto [x, y, w] = equality_witness_band(m, M);
          detail::tally_witness(es, prop_sgn_chain(x, y, RatioBand{m, M}.pair(),
                                                   WeightedSpace{w}, tol));
          break;
        }
        case 11: {
          auto [x, y, w] = equality_witness_band(m, M);
          detail::tally_witness(
              es, km_band_re(x, y, RatioBand{m, M}, WeightedSpace{w}, tol));
          break;
        }
        case 13: {
          auto [x, y, w] = equality_witness_band(m, M);
          const WeightedSpace s{w};
          auto [fs, gs] = as_sampled(rng, x, y, s);
          detail::tally_witness(
              es, prop_integral_pair(fs, gs, RatioBand{m, M}.pair(), tol));
          break;
        }
        case 14: {
          auto [x, y, w] = equality_witness_band(m, M);
          const WeightedSpace s{w};
          auto [fs, gs] = as_sampled(rng, x, y, s);
          detail::tally_witness(
              es, cor_integral_band(fs, gs, RatioBand{m, M}, tol));
          break;
        }
        case 15: {
          auto [x, y, w] = equality_witness_band(m, M);
          const WeightedSpace s{w};
          auto [fs, gs] = as_sampled(rng, x, y, s);
          detail::tally_witness(es, real_nonneg_km(fs, gs, tol));
          break;
        }
        case 16: {
          auto [x, y, w] = equality_witness_band(m, M);
          RealVector xr(x.size()), yr(y.size());
          for (std::size_t k = 0; k < x.size(); ++k) {
            xr[k] = x[k].real();
            yr[k] = y[k].real();
          }
          detail::tally_witness(es, discrete_km(xr, yr, w, tol));
          break;
        }
        case 17: {
          const double beta = rng.log_uniform(0.3, 2.0);
          const double c = rng.log_uniform(0.3, 2.0);
          const RealVector b_vec(dim, beta);
          RealVector a_vec(dim, c * beta);
          detail::tally_witness(es, shisha_mond(a_vec, b_vec, c * beta,
                                                c * beta, beta, beta, tol));
          break;
        }
        default:  // case 12: the dominated-ball equality set is covered
          break;  // through the quadratic-form witnesses above
      }
    }

    summary.evaluators.push_back(std::move(es));
  }
  return summary;
}

inline std::string format_summary(const VerifySummary& summary) {
  char buf[256];
  std::string out;
  out += "verification seed=" + std::to_string(summary.seed) +
         " instances=" + std::to_string(summary.instances) + " dims=";
  for (std::size_t i = 0; i < summary.dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(summary.dims[i]);
  }
  std::snprintf(buf, sizeof buf, " tol=%.17g\n", summary.tol_rel);
  out += buf;

  std::snprintf(buf, sizeof buf, "%-32s %10s %10s %12s %12s %12s %24s\n",
                "evaluator", "instances", "violations", "precond_fail",
                "witness_fail", "consist_fail", "min_slack_rel");
  out += buf;

  std::size_t violations = 0, precond = 0, witness = 0, consist = 0;
  for (const EvaluatorSummary& e : summary.evaluators) {
    std::snprintf(buf, sizeof buf, "%-32s %10zu %10zu %12zu %12zu %12zu %24.17g\n",
                  e.name.c_str(), e.instances, e.violations,
                  e.precondition_failures, e.witness_failures,
                  e.consistency_failures, e.min_slack_rel);
    out += buf;
    violations += e.violations;
    precond += e.precondition_failures;
    witness += e.witness_failures;
    consist += e.consistency_failures;
  }
  std::snprintf(buf, sizeof buf,
                "TOTAL violations=%zu precondition_failures=%zu "
                "witness_failures=%zu consistency_failures=%zu status=%s\n",
                violations, precond, witness, consist,
                summary.ok() ? "OK" : "FAIL");
  out += buf;
  return out;
}

}  // namespace schwarz
