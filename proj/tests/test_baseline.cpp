#include <doctest.h>

#include <cmath>
#include <tuple>

#include "dicke/baseline.hpp"
#include "dicke/core.hpp"

using namespace dicke;
using namespace dicke::baseline;

namespace {

// artanh through its logarithmic form.
double reference_T_c(double Om, double om, double lam) {
  const double u = Om * om / (lam * lam);
  const double artanh = 0.5 * std::log((1.0 + u) / (1.0 - u));
  return Om / (2.0 * om * artanh);
}

}  // namespace

TEST_CASE("critical coupling") {
  CHECK(standard_lambda_c(1.0, 1.0) == 1.0);
  CHECK(standard_lambda_c(4.0, 1.0) == 2.0);
  CHECK(standard_lambda_c(2.0, 0.5) == 1.0);
  CHECK_THROWS_AS(standard_lambda_c(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(standard_lambda_c(1.0, -2.0), DomainError);
}

TEST_CASE("critical temperature") {
  const auto t = standard_T_c(1.0, 1.0, 1.2);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(reference_T_c(1.0, 1.0, 1.2)).epsilon(1e-12));
  CHECK(*t == doctest::Approx(0.5837784576).epsilon(1e-9));

  for (auto [Om, om, lam] : {std::tuple{2.0, 0.5, 1.7}, std::tuple{0.3, 3.0, 1.0},
                             std::tuple{1.0, 4.0, 5.0}}) {
    const auto v = standard_T_c(Om, om, lam);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(reference_T_c(Om, om, lam)).epsilon(1e-12));
  }
}

TEST_CASE("no superradiance at or below the critical coupling") {
  CHECK_FALSE(standard_T_c(1.0, 1.0, 1.0).has_value());
  CHECK_FALSE(standard_T_c(1.0, 1.0, 0.5).has_value());
  CHECK_FALSE(standard_T_c(4.0, 1.0, 2.0).has_value());
}

TEST_CASE("T_c vanishes at the quantum critical point and diverges at strong coupling") {
  double prev = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto t = standard_T_c(1.0, 1.0, 1.0 + eps);
    REQUIRE(t.has_value());
    if (prev > 0.0) CHECK(*t < prev);
    prev = *t;
  }
  CHECK(prev < 0.15);
  const double lam = 1e3;
  const double om = 0.7;
  CHECK(*standard_T_c(1.3, om, lam) / (lam * lam / (2.0 * om * om)) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(standard_T_c(0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(standard_T_c(1.0, 1.0, -2.0), DomainError);
}
