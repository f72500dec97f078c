// SPDX-License-Identifier: Apache-2.0
//
// Batch problem descriptions: the JSON input schema, theorem dispatch and
// report serialisation behind the command-line front end.
//
// Input schema:
//   { "weights": [..], "x": [[re,im],..], "y"|"a": [[re,im],..],
//     "params": {..}, "theorems": [..], "tol": .., "eq_tol": .. }
// Real entries may abbreviate [re, im] to re. A report document embeds its
// input under "input", so report output is itself valid input (round-trip).

#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "schwarz/bounds.hpp"
#include "schwarz/integral.hpp"
#include "schwarz/space.hpp"

namespace schwarz {

struct ProblemParams {
  std::optional<double> r;
  std::optional<double> m;
  std::optional<double> M;
  std::optional<Scalar> gamma;
  std::optional<Scalar> Gamma;
  std::optional<double> a;  // Shisha-Mond entry bounds
  std::optional<double> A;
  std::optional<double> b;
  std::optional<double> B;
};

struct ProblemSpec {
  std::vector<double> weights;
  Vector x;
  std::optional<Vector> second;  // accepted under key "y" or "a"
  bool second_named_a = false;
  std::optional<std::pair<SampledFunction, SampledFunction>> samples;
  ProblemParams params;
  std::vector<std::string> theorems;
  Tolerance tol{};
};

namespace detail {

inline Scalar parse_scalar(const nlohmann::json& j, const std::string& where) {
  if (j.is_number()) return Scalar{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Scalar{j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument(where + ": expected a number or [re, im]");
}

inline Vector parse_vector(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + ": expected a non-empty array");
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_scalar(e, where));
  return v;
}

inline std::vector<double> parse_reals(const nlohmann::json& j,
                                       const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + ": expected a non-empty array");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number())
      throw std::invalid_argument(where + ": expected numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

inline nlohmann::json scalar_json(const Scalar& z) {
  if (z.imag() == 0.0) return z.real();
  return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json vector_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Scalar& z : v) j.push_back(scalar_json(z));
  return j;
}

inline SampledFunction parse_sampled(const nlohmann::json& j,
                                     const char* value_key) {
  return SampledFunction{parse_reals(j.at("nodes"), "samples.nodes"),
                         parse_vector(j.at(value_key), "samples values"),
                         parse_reals(j.at("rho"), "samples.rho"),
                         parse_reals(j.at("mu_weights"), "samples.mu_weights")};
}

}  // namespace detail

inline ProblemSpec parse_problem(const nlohmann::json& root) try {
  // A report document is accepted as input: use its embedded spec.
  const nlohmann::json& j = root.contains("input") ? root.at("input") : root;

  ProblemSpec spec;
  if (const char* env = std::getenv("SCHWARZ_TOL")) {
    try {
      spec.tol.rel = std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SCHWARZ_TOL: not a number");
    }
  }
  if (j.contains("tol")) spec.tol.rel = j.at("tol").get<double>();
  if (j.contains("eq_tol")) spec.tol.eq = j.at("eq_tol").get<double>();

  if (j.contains("samples")) {
    const auto& js = j.at("samples");
    spec.samples = {detail::parse_sampled(js, "f"), detail::parse_sampled(js, "g")};
    const auto& f = spec.samples->first;
    spec.weights.resize(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      spec.weights[k] = f.rho[k] * f.mu_weights[k];
    spec.x = f.values;
    spec.second = spec.samples->second.values;
  } else {
    spec.weights = detail::parse_reals(j.at("weights"), "weights");
    spec.x = detail::parse_vector(j.at("x"), "x");
    if (j.contains("y") && j.contains("a"))
      throw std::invalid_argument("give either \"y\" or \"a\", not both");
    if (j.contains("y")) spec.second = detail::parse_vector(j.at("y"), "y");
    if (j.contains("a")) {
      spec.second = detail::parse_vector(j.at("a"), "a");
      spec.second_named_a = true;
    }
  }

  if (j.contains("params")) {
    const auto& p = j.at("params");
    auto real_param = [&](const char* key) -> std::optional<double> {
      if (!p.contains(key)) return std::nullopt;
      return p.at(key).get<double>();
    };
    spec.params.r = real_param("r");
    spec.params.m = real_param("m");
    spec.params.M = real_param("M");
    spec.params.a = real_param("a");
    spec.params.A = real_param("A");
    spec.params.b = real_param("b");
    spec.params.B = real_param("B");
    if (p.contains("gamma"))
      spec.params.gamma = detail::parse_scalar(p.at("gamma"), "params.gamma");
    if (p.contains("Gamma"))
      spec.params.Gamma = detail::parse_scalar(p.at("Gamma"), "params.Gamma");
  }

  if (!j.contains("theorems") || !j.at("theorems").is_array() ||
      j.at("theorems").empty())
    throw std::invalid_argument("theorems: expected a non-empty array");
  for (const auto& t : j.at("theorems")) {
    const std::string name = t.get<std::string>();
    if (!theorem_from_name(name))
      throw std::invalid_argument("unknown theorem '" + name + "'");
    spec.theorems.push_back(name);
  }
  return spec;
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("problem spec: ") + e.what());
}

inline nlohmann::json problem_to_json(const ProblemSpec& spec) {
  nlohmann::json j;
  if (spec.samples) {
    const auto& [f, g] = *spec.samples;
    j["samples"] = {{"nodes", f.nodes},
                    {"f", detail::vector_json(f.values)},
                    {"g", detail::vector_json(g.values)},
                    {"rho", f.rho},
                    {"mu_weights", f.mu_weights}};
  } else {
    j["weights"] = spec.weights;
    j["x"] = detail::vector_json(spec.x);
    if (spec.second)
      j[spec.second_named_a ? "a" : "y"] = detail::vector_json(*spec.second);
  }
  nlohmann::json p = nlohmann::json::object();
  if (spec.params.r) p["r"] = *spec.params.r;
  if (spec.params.m) p["m"] = *spec.params.m;
  if (spec.params.M) p["M"] = *spec.params.M;
  if (spec.params.gamma) p["gamma"] = detail::scalar_json(*spec.params.gamma);
  if (spec.params.Gamma) p["Gamma"] = detail::scalar_json(*spec.params.Gamma);
  if (spec.params.a) p["a"] = *spec.params.a;
  if (spec.params.A) p["A"] = *spec.params.A;
  if (spec.params.b) p["b"] = *spec.params.b;
  if (spec.params.B) p["B"] = *spec.params.B;
  if (!p.empty()) j["params"] = p;
  j["theorems"] = spec.theorems;
  j["tol"] = spec.tol.rel;
  j["eq_tol"] = spec.tol.eq;
  return j;
}

namespace detail {

inline const Vector& require_second(const ProblemSpec& spec, const char* name) {
  if (!spec.second)
    throw std::invalid_argument(std::string(name) + " requires a second vector (\"y\" or \"a\")");
  return *spec.second;
}

inline double require_r(const ProblemSpec& spec, const char* name) {
  if (!spec.params.r)
    throw std::invalid_argument(std::string(name) + " requires parameter r");
  return *spec.params.r;
}

inline ScalarPair require_pair(const ProblemSpec& spec, const char* name) {
  if (!spec.params.gamma || !spec.params.Gamma)
    throw std::invalid_argument(std::string(name) +
                                " requires parameters gamma and Gamma");
  return ScalarPair{*spec.params.gamma, *spec.params.Gamma};
}

inline RatioBand require_band(const ProblemSpec& spec, const char* name) {
  if (!spec.params.m || !spec.params.M)
    throw std::invalid_argument(std::string(name) + " requires parameters m and M");
  return RatioBand{*spec.params.m, *spec.params.M};
}

inline std::pair<SampledFunction, SampledFunction> as_samples(
    const ProblemSpec& spec, const char* name) {
  if (spec.samples) return *spec.samples;
  // Embed plain weighted data as samples on an index grid with rho = w.
  const Vector& g = require_second(spec, name);
  std::vector<double> nodes(spec.weights.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
    nodes[k] = static_cast<double>(k);
  std::vector<double> mu(spec.weights.size(), 1.0);
  return {SampledFunction{nodes, spec.x, spec.weights, mu},
          SampledFunction{nodes, g, spec.weights, mu}};
}

inline RealVector real_entries(const Vector& v, const char* name) {
  RealVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].imag() != 0.0)
      throw std::invalid_argument(std::string(name) + " requires real data");
    out[k] = v[k].real();
  }
  return out;
}

}  // namespace detail

inline std::vector<BoundReport> evaluate_problem(const ProblemSpec& spec) {
  std::vector<BoundReport> reports;
  const Tolerance& tol = spec.tol;

  for (const std::string& name : spec.theorems) {
    const TheoremId id = *theorem_from_name(name);
    const char* nm = name.c_str();
    switch (id) {
      case TheoremId::thm_premultiplicative:
      case TheoremId::thm_additive:
      case TheoremId::thm_km_abstract:
      case TheoremId::thm_km_abstract_re:
      case TheoremId::km_quadratic_forms: {
        const WeightedSpace s{spec.weights};
        const Vector& a = detail::require_second(spec, nm);
        const double r = detail::require_r(spec, nm);
        if (id == TheoremId::thm_premultiplicative)
          reports.push_back(thm_premultiplicative(spec.x, a, r, s, tol));
        else if (id == TheoremId::thm_additive)
          reports.push_back(thm_additive(spec.x, a, r, s, tol));
        else if (id == TheoremId::thm_km_abstract)
          reports.push_back(thm_km_abstract(spec.x, a, r, s, tol));
        else if (id == TheoremId::thm_km_abstract_re)
          reports.push_back(thm_km_abstract_re(spec.x, a, r, s, tol));
        else {
          auto [abs_rep, re_rep] = km_quadratic_forms(spec.x, a, r, s, tol);
          reports.push_back(std::move(abs_rep));
          reports.push_back(std::move(re_rep));
        }
        break;
      }
      case TheoremId::cor_pair_multiplicative:
      case TheoremId::cor_pair_additive:
      case TheoremId::cor_km_pair:
      case TheoremId::prop_sgn_chain: {
        const WeightedSpace s{spec.weights};
        const Vector& y = detail::require_second(spec, nm);
        const ScalarPair p = detail::require_pair(spec, nm);
        if (id == TheoremId::cor_pair_multiplicative)
          reports.push_back(cor_pair_multiplicative(spec.x, y, p, s, tol));
        else if (id == TheoremId::cor_pair_additive)
          reports.push_back(cor_pair_additive(spec.x, y, p, s, tol));
        else if (id == TheoremId::cor_km_pair)
          reports.push_back(cor_km_pair(spec.x, y, p, s, tol));
        else
          reports.push_back(prop_sgn_chain(spec.x, y, p, s, tol));
        break;
      }
      case TheoremId::km_band:
      case TheoremId::km_band_re: {
        const WeightedSpace s{spec.weights};
        const Vector& y = detail::require_second(spec, nm);
        const RatioBand b = detail::require_band(spec, nm);
        reports.push_back(id == TheoremId::km_band
                              ? km_band(spec.x, y, b, s, tol)
                              : km_band_re(spec.x, y, b, s, tol));
        break;
      }
      case TheoremId::prop_integral_ball: {
        auto [f, g] = detail::as_samples(spec, nm);
        reports.push_back(prop_integral_ball(f, g, detail::require_r(spec, nm), tol));
        break;
      }
      case TheoremId::prop_integral_pair: {
        auto [f, g] = detail::as_samples(spec, nm);
        reports.push_back(prop_integral_pair(f, g, detail::require_pair(spec, nm), tol));
        break;
      }
      case TheoremId::cor_integral_band: {
        auto [f, g] = detail::as_samples(spec, nm);
        reports.push_back(cor_integral_band(f, g, detail::require_band(spec, nm), tol));
        break;
      }
      case TheoremId::real_nonneg_km: {
        auto [f, g] = detail::as_samples(spec, nm);
        reports.push_back(real_nonneg_km(f, g, tol));
        break;
      }
      case TheoremId::discrete_km: {
        const Vector& y = detail::require_second(spec, nm);
        reports.push_back(discrete_km(detail::real_entries(spec.x, nm),
                                      detail::real_entries(y, nm),
                                      spec.weights, tol));
        break;
      }
      case TheoremId::shisha_mond: {
        const Vector& y = detail::require_second(spec, nm);
        if (!spec.params.a || !spec.params.A || !spec.params.b || !spec.params.B)
          throw std::invalid_argument(
              "shisha_mond requires parameters a, A, b, B");
        reports.push_back(shisha_mond(detail::real_entries(spec.x, nm),
                                      detail::real_entries(y, nm),
                                      *spec.params.a, *spec.params.A,
                                      *spec.params.b, *spec.params.B, tol));
        break;
      }
    }
  }
  return reports;
}

inline nlohmann::json condition_to_json(const ConditionReport& c) {
  return {{"satisfied", c.satisfied},
          {"residual", c.residual},
          {"scale", c.scale},
          {"detail", c.detail}};
}

inline nlohmann::json report_to_json(const BoundReport& rep) {
  nlohmann::json j;
  j["theorem"] = theorem_name(rep.theorem_id);
  if (!rep.variant.empty()) j["variant"] = rep.variant;
  j["preconditions"] = nlohmann::json::array();
  for (const auto& c : rep.preconditions)
    j["preconditions"].push_back(condition_to_json(c));
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["slack"] = rep.slack;
  if (rep.holds)
    j["holds"] = *rep.holds;
  else
    j["holds"] = nullptr;
  j["equality"] = rep.equality;
  if (rep.equality_conditions)
    j["equality_conditions"] = *rep.equality_conditions;
  else
    j["equality_conditions"] = nullptr;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  j["tol"] = rep.tol;
  j["eq_tol"] = rep.eq_tol;
  j["scale"] = rep.scale;
  if (!rep.links.empty()) {
    j["links"] = nlohmann::json::array();
    for (const auto& link : rep.links)
      j["links"].push_back({{"label", link.label},
                            {"lhs", link.lhs},
                            {"rhs", link.rhs},
                            {"slack", link.slack},
                            {"holds", link.holds}});
  }
  return j;
}

// Full report document; feeding it back through parse_problem reproduces
// the same numbers.
inline nlohmann::json report_document(const ProblemSpec& spec,
                                      const std::vector<BoundReport>& reports) {
  nlohmann::json j;
  j["input"] = problem_to_json(spec);
  j["reports"] = nlohmann::json::array();
  for (const auto& rep : reports) j["reports"].push_back(report_to_json(rep));
  return j;
}

inline std::string render_text(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(26) << "theorem" << std::setw(12) << "status"
      << std::right << std::setw(22) << "lhs" << std::setw(22) << "rhs"
      << std::setw(22) << "slack" << '\n';
  for (const BoundReport& rep : reports) {
    std::string name = theorem_name(rep.theorem_id);
    if (!rep.variant.empty()) name += "[" + rep.variant + "]";
    std::string status;
    if (rep.precondition_failed())
      status = "skipped";
    else if (!*rep.holds)
      status = "VIOLATED";
    else
      status = rep.equality ? "equality" : "holds";
    out << std::left << std::setw(26) << name << std::setw(12) << status;
    if (rep.precondition_failed()) {
      out << "  " << rep.reason << '\n';
      continue;
    }
    out << std::right << std::setprecision(12) << std::setw(22) << rep.lhs
        << std::setw(22) << rep.rhs << std::setw(22) << rep.slack << '\n';
    for (const BoundLink& link : rep.links)
      out << "    " << std::left << std::setw(40) << link.label
          << (link.holds ? "holds" : "VIOLATED") << std::right
          << std::setprecision(12) << std::setw(20) << link.lhs
          << std::setw(20) << link.rhs << '\n';
  }
  return out.str();
}

// 0: all hold; 2: some hypothesis failed; 3: a proven bound was violated
// beyond tolerance (internal-consistency alarm).
inline int exit_code_for(const std::vector<BoundReport>& reports) {
  bool any_precondition = false;
  bool any_violation = false;
  for (const BoundReport& rep : reports) {
    if (rep.precondition_failed()) any_precondition = true;
    if (rep.violated()) any_violation = true;
    for (const BoundLink& link : rep.links)
      if (!rep.precondition_failed() && !link.holds) any_violation = true;
  }
  if (any_violation) return 3;
  if (any_precondition) return 2;
  return 0;
}

}  // namespace schwarz
