#include "dicke/observables.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "dicke/gaussian_well.hpp"

namespace dicke::observables {

double density_norm(const DensityProfile& rho) {
  if (rho.x.size() != rho.rho.size() || rho.x.size() < 2)
    throw DomainError("density grid and values differ in size");
  double s = 0.0;
  for (std::size_t i = 1; i < rho.x.size(); ++i)
    s += 0.5 * (rho.x[i] - rho.x[i - 1]) * (rho.rho[i] + rho.rho[i - 1]);
  return s;
}

double inversion_weight(const ModelParams& p, double y, double x) {
  if (y == 0.0) return -1.0;
  const double g2 = std::exp(-2.0 * x * x / (p.delta_x * p.delta_x));
  return -p.Omega / std::sqrt(p.Omega * p.Omega + 4.0 * p.lambda * p.lambda * y * g2);
}

double inversion(const ModelParams& p, double y, const DensityProfile& rho) {
  p.validate();
  if (!std::isfinite(y) || y < 0.0) throw DomainError("negative intensity");
  if (std::abs(density_norm(rho) - 1.0) > 1e-6) throw DomainError("density not normalized");
  if (y == 0.0) return -1.0;
  double W = 0.0;
  double prev = inversion_weight(p, y, rho.x[0]) * rho.rho[0];
  for (std::size_t i = 1; i < rho.x.size(); ++i) {
    const double cur = inversion_weight(p, y, rho.x[i]) * rho.rho[i];
    W += 0.5 * (rho.x[i] - rho.x[i - 1]) * (cur + prev);
    prev = cur;
  }
  return std::clamp(W, -1.0, 1.0);
}

DensityProfile density_at_saddle(const ModelParams& p, const thermo::IntensityResult& result,
                                 const DensityOptions& opt) {
  p.validate();
  const auto w = gaussian::well_params(p, result.I);
  if (gaussian::bound_count(w) == 0) throw DomainError("no bound states at I");
  const double L = opt.half_width > 0.0 ? opt.half_width : std::max(8.0 / w.q, 5.0 * p.delta_x);
  const auto pot = oracle::SampledPotential::sample(
      [&w](double x) { return gaussian::sech2_potential(w, x); }, -L, L, opt.grid_points);
  const auto spec = oracle::solve_bound_states(pot, -0.5 * p.Omega);
  if (spec.count() == 0) throw NumericalError("no bound states at I");
  return oracle::thermal_density(spec, p.beta());
}

namespace {

double interpolate(const DensityProfile& d, double x) {
  if (x < d.x.front() || x > d.x.back()) return 0.0;
  const auto it = std::upper_bound(d.x.begin(), d.x.end(), x);
  if (it == d.x.end()) return d.rho.back();
  const auto j = static_cast<std::size_t>(it - d.x.begin());
  const double t = (x - d.x[j - 1]) / (d.x[j] - d.x[j - 1]);
  return (1.0 - t) * d.rho[j - 1] + t * d.rho[j];
}

std::vector<double> gradient(const std::vector<double>& x, const std::vector<double>& v) {
  const std::size_t n = x.size();
  std::vector<double> g(n);
  g[0] = (v[1] - v[0]) / (x[1] - x[0]);
  g[n - 1] = (v[n - 1] - v[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (v[i + 1] - v[i - 1]) / (x[i + 1] - x[i - 1]);
  return g;
}

double l1(const std::vector<double>& x, const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    s += 0.5 * (x[i] - x[i - 1]) * (std::abs(a[i] - b[i]) + std::abs(a[i - 1] - b[i - 1]));
  return s;
}

}  // namespace

DensityDifference density_difference(const DensityProfile& a, const DensityProfile& b) {
  if (a.x.size() < 3 || a.x.size() != a.rho.size() || b.x.size() < 3 || b.x.size() != b.rho.size())
    throw DomainError("density profiles need at least three points");
  std::vector<double> bi(a.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) bi[i] = interpolate(b, a.x[i]);
  DensityDifference d;
  d.l1 = l1(a.x, a.rho, bi);
  d.gradient_l1 = l1(a.x, gradient(a.x, a.rho), gradient(a.x, bi));
  return d;
}

MixingAngle mixing_angle(const ModelParams& p, double y, double x) {
  const double dx2 = p.delta_x * p.delta_x;
  const double a = 2.0 * p.lambda * std::sqrt(y) * std::exp(-x * x / dx2);
  const double a1 = a * (-2.0 * x / dx2);
  const double a2 = a * (4.0 * x * x / (dx2 * dx2) - 2.0 / dx2);
  const double W = p.Omega;
  const double D = W * W + a * a;
  MixingAngle m;
  m.theta = 0.5 * std::atan2(a, W);
  if (D > 0.0) {
    m.d1 = 0.5 * W * a1 / D;
    m.d2 = 0.5 * W * (a2 * D - 2.0 * a * a1 * a1) / (D * D);
  }
  return m;
}

AdiabaticityReport adiabaticity_check(const ModelParams& p, double y,
                                      const AdiabaticityOptions& opt) {
  p.validate();
  if (!std::isfinite(y) || y < 0.0) throw DomainError("negative intensity");
  if (opt.grid_points < 3) throw DomainError("adiabaticity grid needs at least three points");

  AdiabaticityReport r;
  // V+ peaks at the mode centre.
  r.adiabatic_scale = std::sqrt(0.25 * p.Omega * p.Omega + p.lambda * p.lambda * y);
  r.momentum_scale = std::sqrt(2.0 * r.adiabatic_scale);

  const double L = opt.half_width_factor * p.delta_x;
  const std::size_t n = opt.grid_points;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(n - 1);
    const auto m = mixing_angle(p, y, x);
    r.diagonal_max = std::max(r.diagonal_max, 0.5 * m.d1 * m.d1);
    r.off_diagonal_max =
        std::max(r.off_diagonal_max, std::abs(m.d1) * r.momentum_scale + 0.5 * std::abs(m.d2));
  }
  r.max_correction_scale = std::max(r.diagonal_max, r.off_diagonal_max);
  r.ratio = r.adiabatic_scale > 0.0 ? r.max_correction_scale / r.adiabatic_scale : 0.0;
  return r;
}

std::string to_json(const AdiabaticityReport& r) {
  nlohmann::ordered_json j;
  j["max_correction_scale"] = r.max_correction_scale;
  j["adiabatic_scale"] = r.adiabatic_scale;
  j["ratio"] = r.ratio;
  j["adiabatic_ok"] = r.adiabatic_ok();
  j["momentum_scale"] = r.momentum_scale;
  j["diagonal_max"] = r.diagonal_max;
  j["off_diagonal_max"] = r.off_diagonal_max;
  j["estimator"] =
      "correction = max(max_x theta'^2/2, max_x |theta'| p + |theta''|/2), p = sqrt(2 max_x V+), "
      "ratio = correction / max_x V+";
  return j.dump(2);
}

}  // namespace dicke::observables
