#include "dicke/schrodinger.hpp"

#include <algorithm>
#include <cmath>

#include "tridiagonal.hpp"

namespace dicke::oracle {

SampledPotential::SampledPotential(double x_min, double x_max, std::vector<double> values)
    : x_min_(x_min), x_max_(x_max), values_(std::move(values)) {
  if (values_.size() < 3) throw DomainError("sampled potential needs at least 3 points");
  if (!(x_max_ > x_min_) || !std::isfinite(x_min_) || !std::isfinite(x_max_)) {
    throw DomainError("sampled potential needs finite x_min < x_max");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("sampled potential has a non-finite value");
  }
}

SampledPotential SampledPotential::sample(const std::function<double(double)>& v, double x_min,
                                          double x_max, std::size_t n_points) {
  if (n_points < 3) throw DomainError("sampled potential needs at least 3 points");
  std::vector<double> values(n_points);
  const double h = (x_max - x_min) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) values[i] = v(x_min + h * static_cast<double>(i));
  return SampledPotential(x_min, x_max, std::move(values));
}

double SampledPotential::x(std::size_t i) const {
  if (i + 1 == values_.size()) return x_max_;
  return x_min_ + spacing() * static_cast<double>(i);
}

OracleSpectrum solve_bound_states(const SampledPotential& pot, double e_max) {
  const auto values = pot.values();
  const double v_min = *std::min_element(values.begin(), values.end());
  if (!(e_max >= v_min)) throw DomainError("e_max below the potential minimum");

  const std::size_t n = pot.size();
  const double h = pot.spacing();
  const double inv_h2 = 1.0 / (h * h);

  // Unknowns are the interior samples; psi vanishes on the two wall samples.
  const std::size_t m = n - 2;
  std::vector<double> diag(m);
  std::vector<double> off(m - 1, -0.5 * inv_h2);
  for (std::size_t i = 0; i < m; ++i) diag[i] = inv_h2 + values[i + 1];

  auto pairs = detail::eigenpairs_below(diag, off, e_max);

  OracleSpectrum spec;
  spec.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.x[i] = pot.x(i);
  spec.energies = std::move(pairs.values);
  spec.wavefunctions.reserve(pairs.vectors.size());
  const double norm = 1.0 / std::sqrt(h);
  for (auto& v : pairs.vectors) {
    std::vector<double> psi(n, 0.0);
    std::size_t peak = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
    }
    const double sign = v[peak] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < m; ++i) psi[i + 1] = sign * norm * v[i];
    spec.wavefunctions.push_back(std::move(psi));
  }
  return spec;
}

DensityProfile thermal_density(const OracleSpectrum& spec, double beta) {
  if (spec.count() == 0) throw DomainError("thermal density of an empty spectrum");
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  // Weights relative to the ground state, so beta -> oo is just ground-state dominance.
  const double e0 = spec.energies.front();
  std::vector<double> w(spec.count());
  double total = 0.0;
  for (std::size_t k = 0; k < spec.count(); ++k) {
    w[k] = std::exp(-beta * (spec.energies[k] - e0));
    total += w[k];
  }
  DensityProfile out;
  out.x = spec.x;
  out.rho.assign(spec.x.size(), 0.0);
  for (std::size_t k = 0; k < spec.count(); ++k) {
    const double wk = w[k] / total;
    if (wk == 0.0) continue;
    const auto& psi = spec.wavefunctions[k];
    for (std::size_t i = 0; i < psi.size(); ++i) out.rho[i] += wk * psi[i] * psi[i];
  }
  return out;
}

std::vector<double> extrapolated_energies(const std::function<double(double)>& v, double x_min,
                                          double x_max, std::size_t n_points, double e_max) {
  const auto coarse = solve_bound_states(SampledPotential::sample(v, x_min, x_max, n_points), e_max);
  const auto fine =
      solve_bound_states(SampledPotential::sample(v, x_min, x_max, 2 * n_points - 1), e_max);
  const std::size_t k = std::min(coarse.count(), fine.count());
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = (4.0 * fine.energies[i] - coarse.energies[i]) / 3.0;
  }
  return out;
}

}  // namespace dicke::oracle
