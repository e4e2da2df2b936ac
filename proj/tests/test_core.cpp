#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dicke/core.hpp"
#include "oracles.hpp"

using namespace dicke;

TEST_CASE("log_sum_exp examples") {
  CHECK(log_sum_exp(std::vector<double>{0.0}) == 0.0);
  CHECK(log_sum_exp(std::vector<double>{1000.0, 1000.0}) ==
        doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  const double ln4 = std::log(std::exp(0.0) + std::exp(std::log(3.0)));
  CHECK(log_sum_exp(std::vector<double>{0.0, std::log(3.0)}) ==
        doctest::Approx(ln4).epsilon(1e-15));
}

TEST_CASE("log_sum_exp errors") {
  CHECK_THROWS_WITH_AS(log_sum_exp(std::vector<double>{}), "empty sum", DomainError);
  CHECK_THROWS_WITH_AS(log_sum_exp(std::vector<double>{0.0, std::nan("")}), "invalid exponent",
                       DomainError);
  CHECK_THROWS_WITH_AS(log_sum_exp(std::vector<double>{INFINITY}), "invalid exponent",
                       DomainError);
}

TEST_CASE("log_sum_exp translation covariance and permutation invariance") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::uniform_real_distribution<double> shift(-1e5, 1e5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(1 + trial % 17);
    for (auto& v : x) v = u(rng);
    const double base = log_sum_exp(x);
    CHECK(base == doctest::Approx(testkit::reference_log_sum_exp(x)).epsilon(1e-13));

    const double c = shift(rng);
    std::vector<double> xs = x;
    for (auto& v : xs) v += c;
    CHECK(log_sum_exp(xs) == doctest::Approx(base + c).epsilon(1e-13));

    std::shuffle(x.begin(), x.end(), rng);
    CHECK(log_sum_exp(x) == doctest::Approx(base).epsilon(1e-14));
  }
}

TEST_CASE("log_sum_exp does not overflow at +-1e6") {
  CHECK(log_sum_exp(std::vector<double>{1e6, 1e6 - 1.0}) ==
        doctest::Approx(1e6 + std::log1p(std::exp(-1.0))).epsilon(1e-15));
  CHECK(log_sum_exp(std::vector<double>{-1e6, -1e6}) ==
        doctest::Approx(-1e6 + std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("LogSumAccumulator matches the batch form") {
  LogSumAccumulator acc;
  CHECK(acc.empty());
  CHECK_THROWS_WITH_AS(acc.value(), "empty sum", DomainError);
  std::vector<double> x{-3.0, 12.5, 7.0, 12.5, -100.0};
  for (double v : x) acc.add(v);
  CHECK(acc.count() == x.size());
  CHECK(acc.value() == doctest::Approx(log_sum_exp(x)).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(acc.add(std::nan("")), "invalid exponent", DomainError);
}

TEST_CASE("linear grids") {
  const auto g2 = make_linear_grid(0.0, 1.0, 2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == 0.0);
  CHECK(g2[1] == 1.0);

  const auto g3 = make_linear_grid(0.0, 1.0, 3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[1] == 0.5);
  CHECK(g3.y_max() == 1.0);

  const auto g5 = make_linear_grid(2.0, 4.0, 5);
  for (std::size_t i = 1; i < g5.size(); ++i) CHECK(g5[i] - g5[i - 1] == doctest::Approx(0.5));
  CHECK(g5.y_min() == 2.0);
  CHECK(g5.y_max() == 4.0);
}

TEST_CASE("log grids") {
  const auto g = make_log_grid(1.0, 1000.0, 4);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == 1.0);
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g[2] == doctest::Approx(100.0));
  CHECK(g[3] == 1000.0);
}

TEST_CASE("grid preconditions") {
  CHECK_THROWS_AS(make_linear_grid(1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(make_linear_grid(0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(make_log_grid(0.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(make_log_grid(2.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(IntensityGrid({0.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(IntensityGrid({-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(IntensityGrid({0.5}), DomainError);
}

TEST_CASE("parameter validation names the field") {
  ModelParams p;
  CHECK_NOTHROW(p.validate());
  p.omega = 0.0;
  CHECK_THROWS_WITH_AS(p.validate(), "omega must be finite and > 0", DomainError);
  p = {};
  p.T = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), "T must be finite and > 0", DomainError);
  p = {};
  p.Omega = -0.1;
  CHECK_THROWS_WITH_AS(p.validate(), "Omega must be finite and >= 0", DomainError);
  p = {};
  p.delta_x = 0.0;
  CHECK_THROWS_WITH_AS(p.validate(), "delta_x must be finite and > 0", DomainError);
  p = {};
  p.Omega = 0.0;
  p.lambda = 0.0;
  CHECK_NOTHROW(p.validate());
}
