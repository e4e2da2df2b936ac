#include <doctest.h>

#include <cmath>
#include <vector>

#include "dicke/gaussian_well.hpp"
#include "dicke/schrodinger.hpp"

using namespace dicke;
using namespace dicke::oracle;

namespace {

double norm_sum(const OracleSpectrum& s, std::size_t k) {
  double a = 0.0;
  for (double v : s.wavefunctions[k]) a += v * v;
  return a * s.spacing();
}

}  // namespace

TEST_CASE("free box has nothing below its ground level") {
  const SampledPotential flat(-1.0, 1.0, std::vector<double>(401, 0.0));
  // Lowest box level pi^2 / (2 (2)^2) ~ 1.23.
  CHECK(solve_bound_states(flat, 1.0).count() == 0);
  CHECK(solve_bound_states(flat, 1.3).count() == 1);
}

TEST_CASE("harmonic oscillator calibration") {
  const auto pot = SampledPotential::sample([](double x) { return 0.5 * x * x; }, -20.0, 20.0, 4000);
  const auto s = solve_bound_states(pot, 2.0);
  REQUIRE(s.count() >= 2);
  CHECK(std::abs(s.energies[0] - 0.5) <= 1e-4);
  CHECK(std::abs(s.energies[1] - 1.5) <= 1e-4);
}

TEST_CASE("sech^2 well U0 = 10, q = 1 agrees with the closed form") {
  const gaussian::SechWellParams w{0.5, 10.0, 1.0};
  const auto closed = gaussian::bound_energies(w, 1.0);
  REQUIRE(closed.count() == 4);
  const auto pot =
      SampledPotential::sample([&](double x) { return gaussian::sech2_potential(w, x); }, -12.0,
                               12.0, 8001);
  const auto s = solve_bound_states(pot, -0.5);
  REQUIRE(s.count() == 4);
  for (std::size_t n = 0; n < 4; ++n) CHECK(std::abs(s.energies[n] - closed.energies[n]) <= 1e-4);
}

TEST_CASE("eigenvectors are normalized and vanish at the walls") {
  const auto pot = SampledPotential::sample([](double x) { return -3.0 / std::cosh(x) / std::cosh(x); },
                                            -15.0, 15.0, 3001);
  const auto s = solve_bound_states(pot, 0.0);
  REQUIRE(s.count() >= 2);
  for (std::size_t k = 0; k < s.count(); ++k) {
    CHECK(norm_sum(s, k) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s.wavefunctions[k].front() == 0.0);
    CHECK(s.wavefunctions[k].back() == 0.0);
    if (k > 0) CHECK(s.energies[k] > s.energies[k - 1]);
  }
  CHECK(s.x.front() == -15.0);
  CHECK(s.x.back() == 15.0);
}

TEST_CASE("bound-state count is stable under domain enlargement") {
  // U0 = 3.5, q = 0.8: three levels, the shallowest still localized well inside L.
  auto v = [](double x) { return -0.5 - 3.5 / std::cosh(0.8 * x) / std::cosh(0.8 * x); };
  const double h = 0.01;
  const double L = 10.0;
  const auto a = solve_bound_states(
      SampledPotential::sample(v, -L, L, static_cast<std::size_t>(2 * L / h) + 1), -0.5);
  const auto b = solve_bound_states(
      SampledPotential::sample(v, -1.5 * L, 1.5 * L, static_cast<std::size_t>(3 * L / h) + 1), -0.5);
  CHECK(a.count() == b.count());
  CHECK(a.count() == gaussian::bound_count({0.5, 3.5, 0.8}));
}

TEST_CASE("Richardson extrapolation reduces the discretization error") {
  auto v = [](double x) { return 0.5 * x * x; };
  const auto raw = solve_bound_states(SampledPotential::sample(v, -12.0, 12.0, 301), 3.0);
  const auto ext = extrapolated_energies(v, -12.0, 12.0, 301, 3.0);
  REQUIRE(ext.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    const double exact = 0.5 + static_cast<double>(n);
    CHECK(std::abs(ext[n] - exact) < 0.1 * std::abs(raw.energies[n] - exact));
  }
}

TEST_CASE("thermal density") {
  const auto pot = SampledPotential::sample([](double x) { return -2.0 / std::cosh(x) / std::cosh(x); },
                                            -12.0, 12.0, 2401);
  const auto s = solve_bound_states(pot, 0.0);
  REQUIRE(s.count() == 2);

  SUBCASE("single state gives |psi0|^2") {
    OracleSpectrum one = s;
    one.energies.resize(1);
    one.wavefunctions.resize(1);
    const auto rho = thermal_density(one, 1.0);
    for (std::size_t i = 0; i < rho.x.size(); ++i)
      CHECK(rho.rho[i] == doctest::Approx(s.wavefunctions[0][i] * s.wavefunctions[0][i]).epsilon(1e-15));
  }
  SUBCASE("cold limit is the ground state") {
    const auto rho = thermal_density(s, 1e6);
    for (std::size_t i = 0; i < rho.x.size(); ++i)
      CHECK(rho.rho[i] == doctest::Approx(s.wavefunctions[0][i] * s.wavefunctions[0][i]).epsilon(1e-12));
  }
  SUBCASE("symmetric potential gives an even density, normalized") {
    const auto rho = thermal_density(s, 0.7);
    const std::size_t n = rho.x.size();
    double integral = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(rho.rho[i] - rho.rho[n - 1 - i]) <= 1e-8);
      if (i > 0) integral += 0.5 * (rho.x[i] - rho.x[i - 1]) * (rho.rho[i] + rho.rho[i - 1]);
    }
    CHECK(std::abs(integral - 1.0) <= 1e-8);
  }
  SUBCASE("weights follow Boltzmann factors") {
    const double beta = 1.3;
    const auto rho = thermal_density(s, beta);
    const double w1 = std::exp(-beta * (s.energies[1] - s.energies[0]));
    const std::size_t i = 1000;
    const double expect = (s.wavefunctions[0][i] * s.wavefunctions[0][i] +
                           w1 * s.wavefunctions[1][i] * s.wavefunctions[1][i]) /
                          (1.0 + w1);
    CHECK(rho.rho[i] == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(SampledPotential(0.0, 1.0, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(SampledPotential(1.0, 0.0, {0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(SampledPotential::sample([](double) { return 0.0; }, 0.0, 1.0, 2), DomainError);
  const SampledPotential flat(-1.0, 1.0, std::vector<double>(11, 0.0));
  CHECK_THROWS_AS(solve_bound_states(flat, -1.0), DomainError);
  CHECK_THROWS_AS(thermal_density(solve_bound_states(flat, 0.5), 1.0), DomainError);
}
