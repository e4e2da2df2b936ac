#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dicke/standing_wave.hpp"
#include "dicke/tight_binding.hpp"

using namespace dicke;
using namespace dicke::tight_binding;
using std::numbers::pi;

namespace {

ModelParams params(double Omega, double lambda, double T = 0.2) {
  ModelParams p;
  p.Omega = Omega;
  p.lambda = lambda;
  p.T = T;
  return p;
}

}  // namespace

TEST_CASE("tight-binding parameters at unit field") {
  const auto tb = tb_params(params(1.0, 1.0), 1.0);
  const double B = std::sqrt(0.25 + 1.0) - 0.5;
  CHECK(tb.A == 0.5);
  CHECK(tb.B == doctest::Approx(B).epsilon(1e-15));
  CHECK(tb.B == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-15));
  CHECK(tb.sigma2 == doctest::Approx(1.0 / (2.0 * B)).epsilon(1e-15));
  CHECK(tb.sigma2 == doctest::Approx(0.809017).epsilon(1e-6));
}

TEST_CASE("A is Omega/2 and B approaches lambda sqrt(y)") {
  for (double Om : {0.0, 0.5, 3.0}) CHECK(tb_params(params(Om, 2.0), 0.3).A == 0.5 * Om);
  const auto p = params(1.0, 1.7);
  const double y = 1e10;
  CHECK(tb_params(p, y).B / (p.lambda * std::sqrt(y)) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("zero field is rejected") {
  CHECK_THROWS_WITH_AS(tb_params(params(1.0, 1.0), 0.0), "tight binding undefined at zero field",
                       DomainError);
  CHECK_THROWS_WITH_AS(tb_params(params(1.0, 0.0), 2.0), "tight binding undefined at zero field",
                       DomainError);
}

TEST_CASE("dB/dy matches central differences") {
  for (double y : {0.01, 0.5, 3.0, 400.0}) {
    const auto p = params(1.0, 1.3);
    const double h = 1e-5 * y;
    const double fd = (tb_params(p, y + h).B - tb_params(p, y - h).B) / (2.0 * h);
    CHECK(dB_dy(p, y) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("integrals at sigma^2 = 1") {
  TightBindingParams tb{0.5, 0.5, 1.0};
  const auto I = tb_integrals(tb);
  CHECK(I.E0 == doctest::Approx(0.25).epsilon(1e-15));
  const double E1 = -(1.0 / 8.0) * std::exp(-pi * pi / 4.0) * (2.0 + pi * pi);
  CHECK(I.E1 == doctest::Approx(E1).epsilon(1e-14));
  CHECK(I.E1 == doctest::Approx(-0.1258251843).epsilon(1e-9));
  CHECK(I.J0_plus == doctest::Approx(0.5 + 0.25 * (1.0 - std::exp(-1.0))).epsilon(1e-15));
  CHECK(I.J0_minus == doctest::Approx(-0.5 + 0.25 * (1.0 + std::exp(-1.0))).epsilon(1e-15));
  const double j1 = 0.25 * std::exp(-pi * pi / 4.0) * std::exp(-1.0);
  CHECK(I.J1_plus == doctest::Approx(j1).epsilon(1e-14));
  CHECK(I.J1_minus == doctest::Approx(-j1).epsilon(1e-14));
}

TEST_CASE("E1 is negative and dominates the hopping corrections") {
  for (int i = 1; i < 400; ++i) {
    const double s2 = i / 400.0;
    const auto I = tb_integrals({0.5, 1.0 / (2.0 * s2), s2});
    // For sigma^2 below about 0.0035 the tunnelling factor underflows and E1 is -0.
    CHECK(std::signbit(I.E1));
    if (I.E1 != 0.0) {
      CHECK(std::abs(I.J1_plus) < std::abs(I.E1));
      CHECK(std::abs(I.J1_minus) < std::abs(I.E1));
    }
  }
  CHECK(tb_integrals({0.5, 0.05, 10.0}).E1 < 0.0);
}

TEST_CASE("band shape") {
  const auto tb = tb_params(params(1.0, 2.0), 1.5);
  REQUIRE(in_validity_regime(tb));
  const auto minus = tb_band(tb, Branch::minus);
  const auto plus = tb_band(tb, Branch::plus);
  CHECK(minus.hop < 0.0);
  for (double k = -pi; k <= pi; k += 0.01) CHECK(minus.energy(k) >= minus.energy(0.0));
  CHECK(minus.bandwidth() == doctest::Approx(minus.energy(pi) - minus.energy(0.0)).epsilon(1e-12));
  CHECK(plus.bandwidth() == doctest::Approx(4.0 * std::abs(plus.hop)).epsilon(1e-15));
  const auto I = tb_integrals(tb);
  CHECK(plus.energy(0.0) - minus.energy(0.0) ==
        doctest::Approx((I.J0_plus - I.J0_minus) + 2.0 * (I.J1_plus - I.J1_minus)).epsilon(1e-12));
  CHECK(tb_band_energy(tb, Branch::minus, 0.3) == minus.energy(0.3));
}

TEST_CASE("validity regime is sigma^2 < 1") {
  CHECK(in_validity_regime({0.5, 0.6, 1.0 / 1.2}));
  CHECK_FALSE(in_validity_regime({0.5, 0.5, 1.0}));
}

TEST_CASE("asymptotic slope of ln g2 at large intensity") {
  const auto fit = asymptotic_slope(params(1.0, 4.0, 0.2), 1e3, 1e5);
  CHECK(fit.y.size() == 9);
  CHECK(fit.y.front() == doctest::Approx(1e3));
  CHECK(fit.y.back() == doctest::Approx(1e5));
  CHECK(std::abs(fit.slope - 0.5) <= 0.05);
}

TEST_CASE("slope depends on lambda^2 y only") {
  const auto a = asymptotic_slope(params(1.0, 1.5, 0.3), 40.0, 4000.0, {}, 5);
  const auto b = asymptotic_slope(params(1.0, 3.0, 0.3), 10.0, 1000.0, {}, 5);
  CHECK(a.slope == doctest::Approx(b.slope).epsilon(1e-10));
}

TEST_CASE("fit window errors") {
  CHECK_THROWS_WITH_AS(asymptotic_slope(params(1.0, 4.0), 10.0, 10.0), "degenerate fit window",
                       DomainError);
  // Cold, uncoupled, Omega = 0: the k integral of exp(-beta k^2/2) is below one.
  CHECK_THROWS_WITH_AS(asymptotic_slope(params(0.0, 1e-3, 0.01), 1.0, 2.0, {}, 3),
                       "window too small", DomainError);
}

TEST_CASE("minus branch at k = 0 within 10% of the exact lowest band") {
  for (double lam : {1.5, 2.0, 3.0})
    for (double y : {1.0, 4.0, 16.0}) {
      const auto p = params(1.0, lam);
      const auto tb = tb_params(p, y);
      REQUIRE(in_validity_regime(tb));
      const double tight = tb_band_energy(tb, Branch::minus, 0.0);
      const double exact =
          standing_wave::chain_eigenvalues(p.Omega, 0.5 * lam * std::sqrt(y), 0.0, 40, 1).at(0);
      CAPTURE(lam);
      CAPTURE(y);
      CAPTURE(tight);
      CAPTURE(exact);
      CHECK(std::abs(tight - exact) <= 0.1 * std::abs(exact));
    }
}
