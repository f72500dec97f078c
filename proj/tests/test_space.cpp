// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <limits>

#include "test_util.hpp"

using namespace schwarz;
using tu::cvec;
using tu::rvec;
using tu::space;

TEST_CASE("inner product on weighted grids") {
  CHECK(inner_product(rvec({1, 2}), rvec({1, 1}), space({1, 1})) ==
        Scalar{3.0, 0.0});
  CHECK(inner_product(rvec({1, 0}), rvec({1, 0}), space({1, 1})) ==
        Scalar{1.0, 0.0});
  CHECK(inner_product(rvec({1, 4}), rvec({1, 1}), space({2, 1})) ==
        Scalar{6.0, 0.0});
}

TEST_CASE("inner product conjugates the second argument") {
  const Vector x = cvec({{1, 2}, {0, -1}});
  const Vector y = cvec({{3, -1}, {2, 2}});
  const WeightedSpace s = space({0.5, 2});
  const Scalar xy = inner_product(x, y, s);
  const Scalar yx = inner_product(y, x, s);
  CHECK(xy == std::conj(yx));
}

TEST_CASE("norm examples") {
  CHECK(norm(rvec({1, 2}), space({1, 1})) == Catch::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(norm(rvec({0, 0}), space({3, 0.5})) == 0.0);
  CHECK(norm(rvec({1, 4}), space({2, 1})) == Catch::Approx(std::sqrt(18.0)).epsilon(1e-15));
}

TEST_CASE("distance examples") {
  CHECK(distance(rvec({1, 0.866025403784}), rvec({1, 0}), space({1, 1})) ==
        Catch::Approx(0.866025403784).margin(1e-12));
  CHECK(distance(rvec({0.3, -2}), rvec({0.3, -2}), space({1, 2})) == 0.0);
  CHECK(distance(rvec({0.64, 0.48}), rvec({1, 0}), space({1, 1})) ==
        Catch::Approx(0.6).margin(1e-12));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(inner_product(rvec({1}), rvec({1, 2}), space({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(norm(rvec({1, 2, 3}), space({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(distance(rvec({1}), rvec({1}), space({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("weighted space invariants") {
  CHECK_THROWS_AS((WeightedSpace{std::vector<double>{}}), std::invalid_argument);
  CHECK_THROWS_AS((WeightedSpace{std::vector<double>{1.0, -0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((WeightedSpace{std::vector<double>{0.0, 0.0}}),
                  std::invalid_argument);
  const WeightedSpace s = space({0, 2, 0, 1});
  CHECK(s.positive_count() == 2);
  CHECK(s.support() == std::vector<std::size_t>{1, 3});
}

TEST_CASE("zero-weight coordinates never affect results") {
  const WeightedSpace s = space({1, 0, 2});
  const double inf = std::numeric_limits<double>::infinity();
  const Vector x = cvec({{1, 1}, {inf, -3}, {2, 0}});
  const Vector y = cvec({{0, 1}, {std::nan(""), 0}, {1, 1}});
  Vector x_clean = x, y_clean = y;
  x_clean[1] = y_clean[1] = Scalar{0, 0};

  CHECK(inner_product(x, y, s) == inner_product(x_clean, y_clean, s));
  CHECK(norm(x, s) == norm(x_clean, s));
  CHECK(distance(x, y, s) == distance(x_clean, y_clean, s));
}

TEST_CASE("non-finite data on the support is rejected") {
  const WeightedSpace s = space({1, 1});
  const Vector bad = cvec({{1, 0}, {std::nan(""), 0}});
  CHECK_THROWS_AS(norm(bad, s), std::domain_error);
  CHECK_THROWS_AS(inner_product(bad, rvec({1, 1}), s), std::domain_error);
}

TEST_CASE("forward Schwarz inequality on random instances") {
  Rng rng(1234);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t dim = 1 + i % 6;
    const WeightedSpace s = gen_space(rng, dim);
    const Vector x = gen_vector(rng, dim, rng.coin());
    const Vector y = gen_vector(rng, dim, rng.coin());
    const double lhs = std::abs(inner_product(x, y, s));
    const double rhs = norm(x, s) * norm(y, s);
    REQUIRE(lhs <= rhs + 1e-12 * scale_of({lhs, rhs}));
  }
}

TEST_CASE("parallelogram identity on random instances") {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t dim = 1 + i % 6;
    const WeightedSpace s = gen_space(rng, dim);
    const Vector x = gen_vector(rng, dim, rng.coin());
    const Vector y = gen_vector(rng, dim, rng.coin());
    const double sum = norm_squared(combine({1, 0}, x, {1, 0}, y), s);
    const double diff = norm_squared(subtract(x, y), s);
    const double twice = 2.0 * norm_squared(x, s) + 2.0 * norm_squared(y, s);
    REQUIRE(std::abs(sum + diff - twice) <= 1e-12 * scale_of({sum, diff, twice}));
  }
}

TEST_CASE("self inner product is real and non-negative") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t dim = 1 + i % 8;
    const WeightedSpace s = gen_space(rng, dim);
    const Vector x = gen_vector(rng, dim, true);
    const Scalar v = inner_product(x, x, s);
    REQUIRE(v.real() >= 0.0);
    REQUIRE(std::abs(v.imag()) <= 1e-15 * scale_of({v.real()}));
  }
}
