// SPDX-License-Identifier: Apache-2.0
//
// Batch front end:
//   schwarz report <file> [--text]       evaluate selected bounds on a
//                                        JSON problem spec or sampled CSV
//   schwarz sweep  --theorem .. --param  tabulate a bound along one
//          --from --to --steps --out     parameter axis as CSV
//   schwarz verify --seed --n [--dims]   randomized certification of every
//                                        bound; byte-reproducible per seed
//
// Exit codes for report: 0 all bounds hold, 1 input error, 2 a hypothesis
// failed, 3 a proven bound was violated beyond tolerance (alarm).

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schwarz/problem.hpp"
#include "schwarz/schwarz.hpp"

namespace {

using namespace schwarz;

Tolerance env_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("SCHWARZ_TOL")) {
    try {
      tol.rel = std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SCHWARZ_TOL: not a number");
    }
  }
  return tol;
}

Scalar parse_scalar_flag(const std::string& text, const char* what) {
  std::istringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw std::invalid_argument(std::string(what) + ": bad number");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw std::invalid_argument(std::string(what) + ": expected re[,im]");
  }
  std::string rest;
  if (ss >> rest) throw std::invalid_argument(std::string(what) + ": trailing input");
  return Scalar{re, im};
}

struct ReportFlags {
  std::vector<std::string> theorems;
  std::string gamma, Gamma;
  double r = 0.0, m = 0.0, M = 0.0;
  double a = 0.0, A = 0.0, b = 0.0, B = 0.0;
  bool has_r = false, has_m = false, has_M = false;
  bool has_a = false, has_A = false, has_b = false, has_B = false;

  bool any() const {
    return !theorems.empty() || !gamma.empty() || !Gamma.empty() || has_r ||
           has_m || has_M || has_a || has_A || has_b || has_B;
  }
};

ProblemSpec load_problem(const std::string& path, const ReportFlags& flags) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");

  // Sniff the first non-space character: '{' means JSON, else sampled CSV.
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  in.unget();
  in.clear();
  in.seekg(0);

  if (first == '{') {
    if (flags.any())
      throw std::invalid_argument(
          "parameter flags apply to CSV input only; JSON specs carry their own");
    nlohmann::json j;
    in >> j;
    return parse_problem(j);
  }

  ProblemSpec spec;
  spec.tol = env_tolerance();
  auto [f, g] = read_sampled_csv(in);
  spec.weights.resize(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    spec.weights[k] = f.rho[k] * f.mu_weights[k];
  spec.x = f.values;
  spec.second = g.values;
  spec.samples = {std::move(f), std::move(g)};
  if (flags.theorems.empty())
    throw std::invalid_argument("CSV input needs --theorems");
  for (const std::string& t : flags.theorems) {
    if (!theorem_from_name(t))
      throw std::invalid_argument("unknown theorem '" + t + "'");
    spec.theorems.push_back(t);
  }
  if (flags.has_r) spec.params.r = flags.r;
  if (flags.has_m) spec.params.m = flags.m;
  if (flags.has_M) spec.params.M = flags.M;
  if (flags.has_a) spec.params.a = flags.a;
  if (flags.has_A) spec.params.A = flags.A;
  if (flags.has_b) spec.params.b = flags.b;
  if (flags.has_B) spec.params.B = flags.B;
  if (!flags.gamma.empty())
    spec.params.gamma = parse_scalar_flag(flags.gamma, "--gamma");
  if (!flags.Gamma.empty())
    spec.params.Gamma = parse_scalar_flag(flags.Gamma, "--Gamma");
  return spec;
}

int cmd_report(const std::string& path, bool text, const ReportFlags& flags) {
  ProblemSpec spec = load_problem(path, flags);
  const std::vector<BoundReport> reports = evaluate_problem(spec);
  if (text)
    std::cout << render_text(reports);
  else
    std::cout << report_document(spec, reports).dump(2) << '\n';
  return exit_code_for(reports);
}

// Fixed base instances for the parameter sweeps. The epsilon axis walks
// the extremal family; the r axis keeps x = a so only the bound's right
// side moves; the band axes pin the canonical (1,2)/(1,1) instance.
struct SweepRow {
  double value = 0.0;
  BoundReport report;
  double achieved = 0.0;
  bool has_achieved = false;
  std::string skip_reason;
};

SweepRow sweep_row(TheoremId id, const std::string& param, double v,
                   double fixed_m, double fixed_M, const Tolerance& tol) {
  SweepRow row;
  row.value = v;
  const WeightedSpace unit2{std::vector<double>{1.0, 1.0}};

  if (param == "epsilon") {
    if (!(v > 0.0) || !(v < 1.0)) {
      row.skip_reason = "epsilon out of range (0,1)";
      return row;
    }
    const ExtremalWitness w = extremal_family(v, 2, unit2);
    row.achieved = w.achieved_constant;
    row.has_achieved = true;
    switch (id) {
      case TheoremId::thm_premultiplicative:
        row.report = thm_premultiplicative(w.x, w.a, w.r, unit2, tol);
        break;
      case TheoremId::thm_additive:
        row.report = thm_additive(w.x, w.a, w.r, unit2, tol);
        break;
      case TheoremId::thm_km_abstract_re:
        row.report = thm_km_abstract_re(w.x, w.a, w.r, unit2, tol);
        break;
      default:
        row.report = thm_km_abstract(w.x, w.a, w.r, unit2, tol);
        break;
    }
    return row;
  }

  if (param == "r") {
    if (!(v > 0.0)) {
      row.skip_reason = "r must be positive";
      return row;
    }
    const Vector a{Scalar{1.0, 0.0}, Scalar{0.0, 0.0}};
    switch (id) {
      case TheoremId::thm_premultiplicative:
        row.report = thm_premultiplicative(a, a, v, unit2, tol);
        break;
      case TheoremId::thm_additive:
        row.report = thm_additive(a, a, v, unit2, tol);
        break;
      case TheoremId::thm_km_abstract_re:
        row.report = thm_km_abstract_re(a, a, v, unit2, tol);
        break;
      default:
        row.report = thm_km_abstract(a, a, v, unit2, tol);
        break;
    }
    return row;
  }

  // Band axes on the canonical instance x = (1,2), y = (1,1).
  const Vector x{Scalar{1.0, 0.0}, Scalar{2.0, 0.0}};
  const Vector y{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  RatioBand band;
  if (param == "m")
    band = RatioBand{v, fixed_M};
  else
    band = RatioBand{fixed_m, v};
  if (!band.valid_positive()) {
    row.skip_reason = "invalid band";
    return row;
  }
  row.report = id == TheoremId::km_band_re ? km_band_re(x, y, band, unit2, tol)
                                           : km_band(x, y, band, unit2, tol);
  return row;
}

int cmd_sweep(const std::string& theorem, const std::string& param,
              double from, double to, std::size_t steps,
              const std::string& out_path, double fixed_m, double fixed_M) {
  const auto id = theorem_from_name(theorem);
  if (!id) throw std::invalid_argument("unknown theorem '" + theorem + "'");

  const bool ball_param = param == "epsilon" || param == "r";
  const bool band_param = param == "m" || param == "M";
  if (!ball_param && !band_param)
    throw std::invalid_argument("--param must be one of epsilon, r, m, M");

  const bool ball_theorem = *id == TheoremId::thm_premultiplicative ||
                            *id == TheoremId::thm_additive ||
                            *id == TheoremId::thm_km_abstract ||
                            *id == TheoremId::thm_km_abstract_re;
  const bool band_theorem =
      *id == TheoremId::km_band || *id == TheoremId::km_band_re;
  if ((ball_param && !ball_theorem) || (band_param && !band_theorem))
    throw std::invalid_argument("parameter '" + param +
                                "' does not apply to theorem '" + theorem + "'");
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");

  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open '" + out_path + "'");
  const Tolerance tol = env_tolerance();

  out << "param,value,lhs,rhs,slack,status";
  if (param == "epsilon") out << ",achieved_constant";
  out << '\n';

  char buf[512];
  for (std::size_t i = 0; i < steps; ++i) {
    const double v =
        steps == 1 ? from
                   : from + (to - from) * static_cast<double>(i) /
                         static_cast<double>(steps - 1);
    const SweepRow row = sweep_row(*id, param, v, fixed_m, fixed_M, tol);

    std::string status;
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
    if (!row.skip_reason.empty()) {
      status = "skipped: " + row.skip_reason;
    } else if (row.report.precondition_failed()) {
      status = "skipped: " + row.report.reason;
    } else {
      lhs = row.report.lhs;
      rhs = row.report.rhs;
      slack = row.report.slack;
      status = !*row.report.holds ? "violated"
               : row.report.equality ? "equality"
                                     : "holds";
    }
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%s", param.c_str(),
                  v, lhs, rhs, slack, status.c_str());
    out << buf;
    if (param == "epsilon") {
      std::snprintf(buf, sizeof buf, ",%.17g", row.has_achieved ? row.achieved : 0.0);
      out << buf;
    }
    out << '\n';
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t n,
               const std::vector<std::size_t>& dims) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.instances = n;
  if (!dims.empty()) opt.dims = dims;
  opt.tol = env_tolerance();
  const VerifySummary summary = run_verification(opt);
  std::cout << format_summary(summary);
  return summary.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reverse Schwarz inequality evaluation and certification"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand(
      "report", "evaluate selected bounds on a JSON spec or sampled CSV");
  std::string report_file;
  bool report_text = false;
  ReportFlags flags;
  report->add_option("file", report_file, "input file (JSON spec or CSV samples)")
      ->required();
  report->add_flag("--text", report_text, "aligned text output instead of JSON");
  report->add_option("--theorems", flags.theorems, "theorems to evaluate (CSV input)")
      ->delimiter(',');
  report->add_option("--r", flags.r, "enclosure radius");
  report->add_option("--m", flags.m, "band lower endpoint");
  report->add_option("--M", flags.M, "band upper endpoint");
  report->add_option("--gamma", flags.gamma, "pair scalar gamma, re[,im]");
  report->add_option("--Gamma", flags.Gamma, "pair scalar Gamma, re[,im]");
  report->add_option("--a", flags.a, "lower bound for the first tuple");
  report->add_option("--A", flags.A, "upper bound for the first tuple");
  report->add_option("--b", flags.b, "lower bound for the second tuple");
  report->add_option("--B", flags.B, "upper bound for the second tuple");

  auto* sweep = app.add_subcommand("sweep", "tabulate a bound along a parameter");
  std::string sweep_theorem, sweep_param, sweep_out;
  double sweep_from = 0.0, sweep_to = 0.0;
  std::size_t sweep_steps = 1;
  double sweep_fixed_m = 1.0, sweep_fixed_M = 2.0;
  sweep->add_option("--theorem", sweep_theorem, "theorem id")->required();
  sweep->add_option("--param", sweep_param, "epsilon | r | m | M")->required();
  sweep->add_option("--from", sweep_from, "first value")->required();
  sweep->add_option("--to", sweep_to, "last value")->required();
  sweep->add_option("--steps", sweep_steps, "number of rows")->required();
  sweep->add_option("--out", sweep_out, "output CSV path")->required();
  sweep->add_option("--m", sweep_fixed_m, "fixed m when sweeping M (default 1)");
  sweep->add_option("--M", sweep_fixed_M, "fixed M when sweeping m (default 2)");

  auto* verify = app.add_subcommand(
      "verify", "randomized certification of every bound, reproducible per seed");
  std::uint64_t verify_seed = 1;
  std::size_t verify_n = 1000;
  std::vector<std::size_t> verify_dims;
  verify->add_option("--seed", verify_seed, "random seed")->required();
  verify->add_option("--n", verify_n, "instances per evaluator")->required();
  verify->add_option("--dims", verify_dims, "dimension list (default 1..8)")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) {
      flags.has_r = report->count("--r") > 0;
      flags.has_m = report->count("--m") > 0;
      flags.has_M = report->count("--M") > 0;
      flags.has_a = report->count("--a") > 0;
      flags.has_A = report->count("--A") > 0;
      flags.has_b = report->count("--b") > 0;
      flags.has_B = report->count("--B") > 0;
      return cmd_report(report_file, report_text, flags);
    }
    if (sweep->parsed())
      return cmd_sweep(sweep_theorem, sweep_param, sweep_from, sweep_to,
                       sweep_steps, sweep_out, sweep_fixed_m, sweep_fixed_M);
    if (verify->parsed()) return cmd_verify(verify_seed, verify_n, verify_dims);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
