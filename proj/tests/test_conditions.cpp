// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "test_util.hpp"

using namespace schwarz;
using tu::cvec;
using tu::rvec;
using tu::space;

TEST_CASE("ball condition at the boundary") {
  const auto rep = check_ball(rvec({0.64, 0.48}), rvec({1, 0}), 0.6, true,
                              space({1, 1}));
  CHECK(rep.satisfied);
  CHECK(rep.residual == Catch::Approx(0.0).margin(1e-12));
  CHECK(rep.detail == "satisfied (boundary)");
}

TEST_CASE("ball condition with coincident points") {
  const auto rep = check_ball(rvec({1, 0}), rvec({1, 0}), 0.5, true, space({1, 1}));
  CHECK(rep.satisfied);
  CHECK(rep.residual == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("ball condition on the sharpness configuration") {
  // x = a + sqrt(eps) e at eps = 0.75 sits exactly on the enclosure boundary.
  const double root = std::sqrt(0.75);
  const auto rep = check_ball(rvec({1, root}), rvec({1, 0}), root, true,
                              space({1, 1}));
  CHECK(rep.satisfied);
  CHECK(std::abs(rep.residual) <= 1e-12);
}

TEST_CASE("strict dominance is enforced") {
  const auto rep = check_ball(rvec({1, 0}), rvec({1, 0}), 1.0, true, space({1, 1}));
  CHECK_FALSE(rep.satisfied);
  CHECK(rep.detail == "strict dominance failed");

  const auto loose = check_ball(rvec({1, 0}), rvec({1, 0}), 1.0, false, space({1, 1}));
  CHECK(loose.satisfied);
}

TEST_CASE("ball condition rejects non-positive radius") {
  CHECK_THROWS_AS(check_ball(rvec({1}), rvec({1}), 0.0, true, space({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_ball(rvec({1}), rvec({1}), -2.0, false, space({1})),
                  std::invalid_argument);
}

TEST_CASE("pair condition, quadratic form") {
  const ScalarPair p{Scalar{1, 0}, Scalar{4, 0}};
  const auto rep = check_pair_quadratic(rvec({1, 2}), rvec({1, 1}), p, space({1, 1}));
  CHECK(rep.satisfied);
  CHECK(rep.residual == Catch::Approx(2.0).margin(1e-12));

  // x = gamma y makes the right factor vanish.
  const auto trivial = check_pair_quadratic(rvec({1, 1}), rvec({1, 1}), p, space({1, 1}));
  CHECK(trivial.satisfied);
  CHECK(trivial.residual == Catch::Approx(0.0).margin(1e-15));

  const auto boundary = check_pair_quadratic(rvec({1, 4}), rvec({1, 1}), p, space({2, 1}));
  CHECK(boundary.satisfied);
  CHECK(boundary.residual == Catch::Approx(0.0).margin(1e-12));
  CHECK(boundary.detail == "satisfied (boundary)");
}

TEST_CASE("pair condition, ball form") {
  const ScalarPair p{Scalar{1, 0}, Scalar{4, 0}};
  const auto rep = check_pair_ball(rvec({1, 2}), rvec({1, 1}), p, space({1, 1}));
  CHECK(rep.satisfied);
  CHECK(rep.residual ==
        Catch::Approx(1.5 * std::sqrt(2.0) - std::sqrt(2.5)).margin(1e-12));

  // Centered point: the whole radius is margin.
  const auto center = check_pair_ball(rvec({2.5, 2.5}), rvec({1, 1}), p, space({1, 1}));
  CHECK(center.satisfied);
  CHECK(center.residual == Catch::Approx(1.5 * std::sqrt(2.0)).margin(1e-12));

  const auto boundary = check_pair_ball(rvec({1, 4}), rvec({1, 1}), p, space({2, 1}));
  CHECK(boundary.satisfied);
  CHECK(std::abs(boundary.residual) <= 1e-12 * boundary.scale);
}

TEST_CASE("quadratic and ball pair forms are the same condition") {
  // Identity: Re<Gy-x, x-gy> = |G-g|^2 ||y||^2 / 4 - ||x - (G+g)/2 y||^2.
  Rng rng(2024);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t dim = 1 + i % 5;
    const bool complex_field = rng.coin();
    const WeightedSpace s = gen_space(rng, dim);
    const Vector x = gen_vector(rng, dim, complex_field);
    const Vector y = gen_vector(rng, dim, complex_field);
    const ScalarPair p{rng.scalar(complex_field), rng.scalar(complex_field)};

    const double quad = inner_product(combine(p.Gamma, y, {-1, 0}, x),
                                      combine({1, 0}, x, -p.gamma, y), s)
                            .real();
    const double diff = std::abs(p.Gamma - p.gamma);
    const double radius_sq = 0.25 * diff * diff * norm_squared(y, s);
    const double dist_sq =
        norm_squared(subtract(x, scaled(0.5 * (p.Gamma + p.gamma), y)), s);
    const double want = radius_sq - dist_sq;
    REQUIRE(std::abs(quad - want) <=
            1e-12 * scale_of({quad, radius_sq, dist_sq}));

    // Away from the boundary the two checkers must agree on satisfaction.
    const Tolerance tol;
    const auto a = check_pair_quadratic(x, y, p, s, tol);
    const auto b = check_pair_ball(x, y, p, s, tol);
    if (std::abs(a.residual) > tol.rel * a.scale)
      REQUIRE(a.satisfied == b.satisfied);
  }
}

TEST_CASE("band condition delegates to the pair form") {
  const RatioBand b{1.0, 4.0};
  const auto band = check_band(rvec({1, 4}), rvec({1, 1}), b, space({2, 1}));
  const auto pair = check_pair_quadratic(rvec({1, 4}), rvec({1, 1}), b.pair(),
                                         space({2, 1}));
  CHECK(band.satisfied);
  CHECK(band.residual == pair.residual);

  const auto mid = check_band(rvec({1, 2}), rvec({1, 1}), RatioBand{1.0, 2.0},
                              space({1, 1}));
  CHECK(mid.satisfied);
  CHECK(mid.residual == Catch::Approx(0.0).margin(1e-12));

  CHECK_THROWS_AS(check_band(rvec({1}), rvec({1}), RatioBand{0.0, 2.0}, space({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_band(rvec({1}), rvec({1}), RatioBand{3.0, 2.0}, space({1})),
                  std::invalid_argument);
}

TEST_CASE("pointwise band condition") {
  const WeightedSpace s = space({1, 1});
  CHECK(check_pointwise(rvec({1, 2}), rvec({1, 1}), PointwiseBand{{1.0, 2.0}}, s)
            .satisfied);
  CHECK(check_pointwise(rvec({1, 1}), rvec({1, 1}), PointwiseBand{{1.0, 1.0}}, s)
            .satisfied);
  // Both ratios on the band endpoints.
  const auto rep = check_pointwise(rvec({1.25, 1.75}), rvec({1, 1}),
                                   PointwiseBand{{1.25, 1.75}}, space({0.5, 0.5}));
  CHECK(rep.satisfied);
  CHECK(rep.residual == 0.0);

  CHECK_FALSE(check_pointwise(rvec({1, 3}), rvec({1, 1}),
                              PointwiseBand{{1.0, 2.0}}, s)
                  .satisfied);
  CHECK_THROWS_AS(check_pointwise(rvec({1, 1}), rvec({1, 0}),
                                  PointwiseBand{{1.0, 2.0}}, s),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pointwise(cvec({{1, 1}, {1, 0}}), rvec({1, 1}),
                                  PointwiseBand{{1.0, 2.0}}, s),
                  std::invalid_argument);
}

TEST_CASE("pointwise conditions skip zero-weight indices") {
  const WeightedSpace s = space({1, 0});
  // g vanishes only on the zero-weight atom: fine.
  CHECK(check_pointwise(rvec({1, -5}), rvec({1, 0}), PointwiseBand{{0.5, 2.0}}, s)
            .satisfied);
}

TEST_CASE("pointwise ball and pair conditions") {
  const WeightedSpace s = space({0.5, 0.5});
  CHECK(check_pointwise(rvec({1.1, 0.9}), rvec({1, 1}), PointwiseBall{0.15}, s)
            .satisfied);
  // r not dominated by |g| at every point.
  CHECK_FALSE(check_pointwise(rvec({1.1, 0.9}), rvec({1, 1}), PointwiseBall{1.0}, s)
                  .satisfied);

  const ScalarPair p{Scalar{1, 0}, Scalar{2, 0}};
  const auto pair = check_pointwise(rvec({1, 2}), rvec({1, 1}), PointwisePair{p}, s);
  CHECK(pair.satisfied);
  CHECK(pair.residual == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("pointwise component condition handles complex data") {
  const WeightedSpace s = space({1, 1});
  const Vector g = cvec({{1, 1}, {2, 0.5}});
  const Vector f = cvec({{1.5, 1.2}, {2.2, 0.6}});
  CHECK(check_pointwise(f, g, PointwiseComponents{{1.0, 2.0}}, s).satisfied);
  const Vector out = cvec({{3, 1}, {2, 0.5}});
  CHECK_FALSE(check_pointwise(out, g, PointwiseComponents{{1.0, 2.0}}, s).satisfied);
}

TEST_CASE("pointwise band implies the integrated band condition") {
  Rng rng(512);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t dim = 1 + i % 6;
    const WeightedSpace s = gen_space(rng, dim);
    Vector g(dim), f(dim);
    const double m = rng.log_uniform(0.2, 1.5);
    const double M = m * std::exp(rng.uniform(0.0, 1.5));
    for (std::size_t k = 0; k < dim; ++k) {
      g[k] = Scalar{std::exp(0.5 * rng.normal()), 0.0};
      f[k] = Scalar{g[k].real() * rng.uniform(m, M), 0.0};
    }
    const RatioBand band{m, M};
    REQUIRE(check_pointwise(f, g, PointwiseBand{band}, s).satisfied);
    REQUIRE(check_band(f, g, band, s).satisfied);
  }
}

TEST_CASE("extract_band returns the ratio range") {
  const auto b1 = extract_band(rvec({1, 2}), rvec({1, 1}), space({1, 1}));
  CHECK(b1.m == 1.0);
  CHECK(b1.M == 2.0);

  const auto b2 = extract_band(rvec({1.5, 4.5}), rvec({1, 3}), space({1, 1}));
  CHECK(b2.m == 1.5);
  CHECK(b2.M == 1.5);

  const auto b3 = extract_band(rvec({1.25, 1.75}), rvec({1, 1}), space({0.5, 0.5}));
  CHECK(b3.m == 1.25);
  CHECK(b3.M == 1.75);
}

TEST_CASE("extract_band is the tightest admissible band") {
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const std::size_t dim = 1 + i % 6;
    const WeightedSpace s = gen_space(rng, dim);
    Vector f(dim), g(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      g[k] = Scalar{std::exp(0.4 * rng.normal()), 0.0};
      f[k] = Scalar{g[k].real() * std::exp(0.6 * rng.normal()), 0.0};
    }
    const RatioBand band = extract_band(f, g, s);
    REQUIRE(check_pointwise(f, g, PointwiseBand{band}, s, Tolerance{0.0, 0.0})
                .satisfied);
    const double delta = 1e-9 * scale_of({band.m, band.M});
    const RatioBand up{band.m + delta, band.M};
    const RatioBand down{band.m, band.M - delta};
    if (up.m <= up.M)
      REQUIRE_FALSE(
          check_pointwise(f, g, PointwiseBand{up}, s, Tolerance{0.0, 0.0}).satisfied);
    if (down.m <= down.M)
      REQUIRE_FALSE(
          check_pointwise(f, g, PointwiseBand{down}, s, Tolerance{0.0, 0.0}).satisfied);
  }
}

TEST_CASE("extract_band input validation") {
  CHECK_THROWS_AS(extract_band(cvec({{1, 1}}), rvec({1}), space({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_band(rvec({-1}), rvec({1}), space({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_band(rvec({1}), rvec({0}), space({1})),
                  std::invalid_argument);
}
