// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// the process exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "schwarz/problem.hpp"
#include "schwarz/schwarz.hpp"

using namespace schwarz;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail) {
  std::printf("[%d/8] %-42s %s  (%s)\n", number, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

Vector rv(std::initializer_list<double> vals) {
  Vector v;
  for (double x : vals) v.push_back(Scalar{x, 0.0});
  return v;
}

// 1. Randomized inequality suite: every evaluator holds with slack
//    >= -1e-9 * scale on 1e4 seeded hypothesis-satisfying instances,
//    dims 1..8, real and complex, in under 30 seconds.
void criterion_1() {
  VerifyOptions opt;
  opt.seed = 20250809;
  opt.instances = 10000;
  opt.witness_checks = 100;

  const auto start = std::chrono::steady_clock::now();
  const VerifySummary summary = run_verification(opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  bool pass = seconds < 30.0;
  double min_slack = 0.0;
  std::size_t violations = 0;
  for (const EvaluatorSummary& e : summary.evaluators) {
    violations += e.violations + e.precondition_failures;
    min_slack = std::min(min_slack, e.min_slack_rel);
    if (e.instances < 10000 || e.violations > 0 ||
        e.precondition_failures > 0 || e.min_slack_rel < -1e-9)
      pass = false;
  }
  std::ostringstream detail;
  detail << summary.evaluators.size() << " evaluators x 10000 instances, "
         << violations << " violations, min slack/scale " << min_slack << ", "
         << seconds << " s";
  criterion(1, "randomized inequality suite", pass, detail.str());
}

// 2. Sharpness of the constant 2: achieved constant matches 1+sqrt(1-eps)
//    to 1e-12 at eps in {0.75, 0.19, 1e-6} and exceeds 1.9999 at 1e-6.
void criterion_2() {
  const WeightedSpace unit2{std::vector<double>{1.0, 1.0}};
  bool pass = true;
  double worst = 0.0;
  for (double eps : {0.75, 0.19, 1e-6}) {
    const double got = extremal_family(eps, 2, unit2).achieved_constant;
    const double want = 1.0 + std::sqrt(1.0 - eps);
    worst = std::max(worst, std::abs(got - want));
    if (std::abs(got - want) > 1e-12) pass = false;
  }
  const double near2 = extremal_family(1e-6, 2, unit2).achieved_constant;
  if (!(near2 > 1.9999)) pass = false;
  std::ostringstream detail;
  detail << "max |C(eps) - (1+sqrt(1-eps))| = " << worst << ", C(1e-6) = "
         << near2;
  criterion(2, "sharpness of the constant 2", pass, detail.str());
}

// 3. Equality witnesses reach zero slack at 1e-12.
void criterion_3() {
  bool pass = true;
  std::ostringstream detail;

  // (a) premultiplicative witness x = (0.64, 0.48), a = (1, 0), r = 0.6.
  const WeightedSpace unit2{std::vector<double>{1.0, 1.0}};
  const auto rep_a =
      thm_premultiplicative(rv({0.64, 0.48}), rv({1, 0}), 0.6, unit2);
  if (rep_a.precondition_failed() || std::abs(rep_a.slack) > 1e-12 ||
      !rep_a.equality)
    pass = false;
  detail << "premultiplicative slack " << rep_a.slack;

  // (b) band witness x=(1,4), y=(1,1), w=(2,1), m=1, M=4 across the four
  //     difference-of-ratios forms.
  const WeightedSpace w21{std::vector<double>{2.0, 1.0}};
  const Vector x = rv({1, 4});
  const Vector y = rv({1, 1});
  const RatioBand band{1.0, 4.0};
  const auto band_rep = km_band(x, y, band, w21);
  const auto pair_rep = cor_km_pair(x, y, band.pair(), w21);
  const auto chain_rep = prop_sgn_chain(x, y, band.pair(), w21);
  const auto re_rep = km_band_re(x, y, band, w21);
  double worst_b = std::abs(band_rep.slack);
  worst_b = std::max(worst_b, std::abs(pair_rep.slack));
  worst_b = std::max(worst_b, std::abs(chain_rep.slack));
  if (re_rep.links.empty()) {
    pass = false;
  } else {
    worst_b = std::max(worst_b, std::abs(re_rep.links[0].slack));
  }
  if (worst_b > 1e-12 || !band_rep.equality || !pair_rep.equality ||
      !chain_rep.equality)
    pass = false;
  detail << ", band-family worst slack " << worst_b;

  // (c) additive witness with cos(theta) = 0.9, r^2 = 0.2.
  const auto rep_c = thm_additive(rv({0.9, std::sqrt(0.19)}), rv({1, 0}),
                                  std::sqrt(0.2), unit2);
  if (std::abs(rep_c.lhs - 0.1) > 1e-12 || std::abs(rep_c.rhs - 0.1) > 1e-12 ||
      !rep_c.equality)
    pass = false;
  detail << ", additive lhs " << rep_c.lhs << " rhs " << rep_c.rhs;

  criterion(3, "equality witnesses", pass, detail.str());
}

// 4. The two forms of the disc condition are the same quantity:
//    Re<Gy-x, x-gy> = |G-g|^2 ||y||^2 / 4 - ||x-(G+g)/2 y||^2 to 1e-12*scale.
void criterion_4() {
  Rng rng(424242);
  bool pass = true;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t dim = 1 + i % 8;
    const bool cf = rng.coin();
    const WeightedSpace s = gen_space(rng, dim);
    const Vector x = gen_vector(rng, dim, cf);
    const Vector y = gen_vector(rng, dim, cf);
    const ScalarPair p{rng.scalar(cf), rng.scalar(cf)};

    const double quad = inner_product(combine(p.Gamma, y, {-1, 0}, x),
                                      combine({1, 0}, x, -p.gamma, y), s)
                            .real();
    const double diff = std::abs(p.Gamma - p.gamma);
    const double radius_sq = 0.25 * diff * diff * norm_squared(y, s);
    const double dist_sq =
        norm_squared(subtract(x, scaled(0.5 * (p.Gamma + p.gamma), y)), s);
    const double scale = scale_of({quad, radius_sq, dist_sq});
    const double err = std::abs(quad - (radius_sq - dist_sq)) / scale;
    worst = std::max(worst, err);
    if (err > 1e-12) pass = false;
  }
  std::ostringstream detail;
  detail << "10000 instances, worst residual/scale " << worst;
  criterion(4, "pair condition equivalence identity", pass, detail.str());
}

// 5. Route consistency at 1e-12*scale on 1e3 instances each:
//    band form vs pair form, and discrete form vs band-through-discretize.
void criterion_5() {
  Rng rng(5555);
  bool pass = true;
  double worst = 0.0;

  for (int i = 0; i < 1000; ++i) {
    const BandInstance inst = gen_band(rng, 1 + i % 8, rng.coin());
    const auto a = km_band(inst.x, inst.y, inst.band, inst.space);
    const auto b = cor_km_pair(inst.x, inst.y, inst.band.pair(), inst.space);
    if (a.precondition_failed() || b.precondition_failed()) {
      pass = false;
      continue;
    }
    const double err = std::max(std::abs(a.lhs - b.lhs), std::abs(a.rhs - b.rhs)) /
                       a.scale;
    worst = std::max(worst, err);
    if (err > 1e-12) pass = false;
  }

  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 1 + i % 8;
    const PositiveInstance inst = gen_positive(rng, dim);
    const auto got = discrete_km(inst.x, inst.y, inst.weights);

    // The same data routed through sampled functions and discretize.
    std::vector<double> nodes(dim);
    for (std::size_t k = 0; k < dim; ++k) nodes[k] = static_cast<double>(k);
    Vector xf(dim), yf(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      xf[k] = Scalar{inst.x[k], 0.0};
      yf[k] = Scalar{inst.y[k], 0.0};
    }
    const std::vector<double> unit_mu(dim, 1.0);
    const SampledFunction fs{nodes, xf, inst.weights, unit_mu};
    const SampledFunction gs{nodes, yf, inst.weights, unit_mu};
    const Discretized d = discretize(fs, gs);
    const auto ref = km_band(d.f, d.g, extract_band(d.f, d.g, d.space), d.space);
    if (got.precondition_failed() || ref.precondition_failed()) {
      pass = false;
      continue;
    }
    const double err = std::max(std::abs(got.lhs - ref.lhs),
                                std::abs(got.rhs - ref.rhs)) /
                       got.scale;
    worst = std::max(worst, err);
    if (err > 1e-12) pass = false;
  }

  std::ostringstream detail;
  detail << "2x1000 instances, worst mismatch/scale " << worst;
  criterion(5, "band/pair and discrete/band consistency", pass, detail.str());
}

// 6. Desk numbers: 1/6 <= (sqrt(2)-1)^2 at 1e-12, and the midpoint
//    quadrature instance 0.0625 <= 0.0629403 at 1e-6.
void criterion_6() {
  bool pass = true;
  const auto km = discrete_km({1, 2}, {1, 1}, {1, 1});
  const double want_rhs = (std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0);
  if (std::abs(km.lhs - 1.0 / 6.0) > 1e-12 ||
      std::abs(km.rhs - want_rhs) > 1e-12 || km.holds != true)
    pass = false;

  const QuadratureRule rule = midpoint_rule(0.0, 1.0, 2);
  Vector fv(2);
  for (int k = 0; k < 2; ++k) fv[k] = Scalar{rule.nodes[k] + 1.0, 0.0};
  const SampledFunction f{rule.nodes, fv, {1.0, 1.0}, rule.weights};
  const SampledFunction g{rule.nodes, rv({1, 1}), {1.0, 1.0}, rule.weights};
  const auto quad = real_nonneg_km(f, g);
  if (std::abs(quad.lhs - 0.0625) > 1e-6 ||
      std::abs(quad.rhs - 0.0629403) > 1e-6 || quad.holds != true)
    pass = false;

  std::ostringstream detail;
  detail << "discrete " << km.lhs << " <= " << km.rhs << "; quadrature "
         << quad.lhs << " <= " << quad.rhs;
  criterion(6, "Klamkin-McLenaghan desk numbers", pass, detail.str());
}

// 7. Tightness of the real-part form on complex data: [Re<x,a>]^2 never
//    exceeds |<x,a>|^2 and both multiplied-out forms hold.
void criterion_7() {
  Rng rng(777);
  bool pass = true;
  int done = 0;
  while (done < 1000) {
    const BallInstance inst = gen_ball(rng, 1 + done % 8, true);
    const Scalar z = inner_product(inst.x, inst.a, inst.space);
    if (std::abs(z.imag()) <= 1e-12 * std::abs(z)) continue;
    ++done;
    const auto [abs_rep, re_rep] =
        km_quadratic_forms(inst.x, inst.a, inst.r, inst.space);
    if (abs_rep.precondition_failed() || abs_rep.holds != true ||
        re_rep.holds != true)
      pass = false;
    if (z.real() * z.real() > std::norm(z) * (1.0 + 1e-12)) pass = false;
  }
  criterion(7, "real-part tightness on complex data", pass,
            "1000 instances with Im<x,a> != 0");
}

// 8. CLI contract: the band equality spec exits 0 with equality = true;
//    verify --seed 42 --n 10000 exits 0 and is byte-reproducible.
void criterion_8() {
  const fs::path dir = fs::temp_directory_path() / "schwarz_acceptance";
  fs::create_directories(dir);
  bool pass = true;
  std::ostringstream detail;

  const fs::path spec = dir / "band_eq.json";
  {
    std::ofstream out(spec);
    out << R"({"weights": [2, 1], "x": [1, 4], "y": [1, 1],
               "params": {"m": 1, "M": 4}, "theorems": ["km_band"]})";
  }
  const fs::path rep_out = dir / "report.json";
  const std::string report_cmd = std::string(SCHWARZ_CLI_BIN) + " report " +
                                 spec.string() + " > " + rep_out.string() +
                                 " 2> /dev/null";
  const int rep_status = std::system(report_cmd.c_str());
  const int rep_code = WIFEXITED(rep_status) ? WEXITSTATUS(rep_status) : -1;
  if (rep_code != 0) pass = false;
  {
    std::ifstream in(rep_out);
    nlohmann::json doc;
    try {
      in >> doc;
      if (doc.at("reports").at(0).at("equality") != true) pass = false;
    } catch (const std::exception&) {
      pass = false;
    }
  }
  detail << "report exit " << rep_code;

  auto run_verify = [&](const fs::path& out) {
    const std::string cmd = std::string(SCHWARZ_CLI_BIN) +
                            " verify --seed 42 --n 10000 > " + out.string() +
                            " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const fs::path v1 = dir / "verify1.txt";
  const fs::path v2 = dir / "verify2.txt";
  const int code1 = run_verify(v1);
  const int code2 = run_verify(v2);
  if (code1 != 0 || code2 != 0) pass = false;

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string text1 = slurp(v1);
  if (text1 != slurp(v2)) pass = false;
  if (text1.find("TOTAL violations=0") == std::string::npos) pass = false;
  if (text1.find("status=OK") == std::string::npos) pass = false;
  detail << ", verify exit " << code1 << "/" << code2 << ", byte-identical "
         << (text1 == slurp(v2) ? "yes" : "no");

  criterion(8, "command-line contract", pass, detail.str());
}

}  // namespace

int main() {
  std::printf("acceptance: reverse Schwarz bound toolkit\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::printf("all 8 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
