#include "dicke/gaussian_well.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dicke::gaussian {

namespace {

void require_intensity(double y) {
  if (!std::isfinite(y)) throw DomainError("intensity is not finite");
  if (y < 0.0) throw DomainError("negative intensity");
}

// sqrt(Omega^2/4 + lambda^2 y) - Omega/2 without cancellation at small y.
double well_depth(double Omega, double lambda, double y) {
  const double z = lambda * lambda * y;
  if (z == 0.0) return 0.0;
  const double s = std::sqrt(0.25 * Omega * Omega + z);
  return z / (s + 0.5 * Omega);
}

}  // namespace

double q_log_argument(double Omega, double lambda, double y) {
  // 4 lambda^2 y / ((s + Omega/2)^2 - Omega^2) rewritten as 4 (s + Omega/2) / (s + 3 Omega/2)
  // using (s + Omega/2)^2 - Omega^2 = lambda^2 y + Omega (s - Omega/2).
  const double s = std::sqrt(0.25 * Omega * Omega + lambda * lambda * y);
  if (s == 0.0) return 4.0;  // Omega = 0 and y = 0: limit along y -> 0 at Omega = 0
  return 4.0 * (s + 0.5 * Omega) / (s + 1.5 * Omega);
}

SechWellParams well_params(const ModelParams& p, double y) {
  require_intensity(y);
  SechWellParams w;
  w.epsilon0 = 0.5 * p.Omega;
  w.U0 = well_depth(p.Omega, p.lambda, y);
  const double half_width_const = std::numbers::sqrt2 * std::acosh(std::numbers::sqrt2);
  w.q = half_width_const / (p.delta_x * std::sqrt(std::log(q_log_argument(p.Omega, p.lambda, y))));
  return w;
}

std::size_t bound_count(const SechWellParams& w) {
  if (!(w.U0 > 0.0)) return 0;
  const double r = std::sqrt(1.0 + 8.0 * w.U0 / (w.q * w.q));
  // Strict inequality: a level exactly at threshold is not bound.
  auto c = static_cast<std::size_t>(std::max(0.0, std::ceil(0.5 * (r - 1.0))));
  while (c > 0 && !(1.0 + 2.0 * static_cast<double>(c - 1) < r)) --c;
  while (1.0 + 2.0 * static_cast<double>(c) < r) ++c;
  return c;
}

BoundSpectrum bound_energies(const SechWellParams& w, double Omega) {
  BoundSpectrum spec;
  const std::size_t n = bound_count(w);
  if (n == 0) return spec;
  const double r = std::sqrt(1.0 + 8.0 * w.U0 / (w.q * w.q));
  const double q2_8 = 0.125 * w.q * w.q;
  spec.energies.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = r - (1.0 + 2.0 * static_cast<double>(i));
    spec.energies.push_back(-0.5 * Omega - q2_8 * d * d);
  }
  return spec;
}

double ln_g1(const ModelParams& p, double y) {
  const auto spec = bound_energies(well_params(p, y), p.Omega);
  if (spec.count() == 0) throw DomainError("no bound states; below pump floor");
  const double beta = p.beta();
  LogSumAccumulator acc;
  for (double e : spec.energies) acc.add(-beta * e);
  return acc.value();
}

double f1(const ModelParams& p, double y) { return -p.beta() * p.omega * y + ln_g1(p, y); }

namespace {

// Smallest y in (lo, hi] with bound_count >= target, given count(lo) < target <= count(hi).
double locate_count_increase(const ModelParams& p, double lo, double hi, std::size_t target,
                             double rel_tol) {
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (bound_count(well_params(p, mid)) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double minimum_intensity(const ModelParams& p, double y_cap) {
  if (!(p.lambda > 0.0)) throw DomainError("pump floor requires lambda > 0");
  if (!(y_cap > 0.0)) throw DomainError("y_cap must be positive");
  double lo = 0.0;
  double hi = std::min(1.0, y_cap);
  while (bound_count(well_params(p, hi)) < 2) {
    if (hi >= y_cap) throw NumericalError("no bound state for any y <= y_cap");
    lo = hi;
    hi = std::min(2.0 * hi, y_cap);
  }
  return locate_count_increase(p, lo, hi, 2, 1e-10);
}

std::vector<double> level_thresholds(const ModelParams& p, double y_lo, double y_hi) {
  require_intensity(y_lo);
  if (!(y_hi > y_lo)) return {};
  std::vector<double> out;
  std::size_t have = bound_count(well_params(p, y_lo));
  const std::size_t top = bound_count(well_params(p, y_hi));
  double lo = y_lo;
  for (std::size_t target = have + 1; target <= top; ++target) {
    const double y = locate_count_increase(p, lo, y_hi, target, 1e-12);
    out.push_back(y);
    lo = y;
  }
  return out;
}

double sech2_potential(const SechWellParams& w, double x) {
  const double c = std::cosh(w.q * x);
  return -w.epsilon0 - w.U0 / (c * c);
}

double adiabatic_potential(const ModelParams& p, double y, double x) {
  const double g2 = std::exp(-2.0 * x * x / (p.delta_x * p.delta_x));
  return -std::sqrt(0.25 * p.Omega * p.Omega + p.lambda * p.lambda * y * g2);
}

}  // namespace dicke::gaussian
