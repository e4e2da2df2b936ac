#include "dicke/standing_wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tridiagonal.hpp"

namespace dicke::standing_wave {

void BandSolverConfig::validate() const {
  if (momentum_cutoff < 1) throw DomainError("momentum_cutoff must be >= 1");
  if (k_points < 2) throw DomainError("k_points must be >= 2");
  if (!(band_cut > 0.0 && band_cut < 1.0)) throw DomainError("band_cut must lie in (0, 1)");
  if (n_bands < 0) throw DomainError("n_bands must be >= 0");
}

namespace {

void require_intensity(double y) {
  if (!std::isfinite(y)) throw DomainError("intensity is not finite");
  if (y < 0.0) throw DomainError("negative intensity");
}

double coupling_of(const ModelParams& p, double y) { return 0.5 * p.lambda * std::sqrt(y); }

double k_at(std::size_t i, std::size_t n) {
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n);
}

// Lowest `count` bands at every k, row-major.
std::vector<double> band_table(double Omega, double coupling, int cutoff, std::size_t nk,
                               std::size_t count) {
  std::vector<double> out(nk * count);
  for (std::size_t i = 0; i < nk; ++i) {
    const auto ev = chain_eigenvalues(Omega, coupling, k_at(i, nk), cutoff, count);
    std::copy(ev.begin(), ev.end(), out.begin() + static_cast<std::ptrdiff_t>(i * count));
  }
  return out;
}

void check_band_converged(double Omega, double coupling, int cutoff, std::size_t nk,
                          std::size_t band) {
  for (std::size_t i = 0; i < nk; ++i) {
    const double k = k_at(i, nk);
    const auto a = chain_eigenvalues(Omega, coupling, k, cutoff, band + 1);
    const auto b = chain_eigenvalues(Omega, coupling, k, cutoff + 2, band + 1);
    if (std::abs(a[band] - b[band]) > 1e-8) throw NumericalError("unconverged cutoff");
  }
}

}  // namespace

int effective_cutoff(const ModelParams& p, double y, const BandSolverConfig& cfg) {
  if (!cfg.auto_cutoff) return cfg.momentum_cutoff;
  const double t = coupling_of(p, y);
  const int needed = static_cast<int>(std::ceil(0.5 * std::sqrt(24.0 * t + 100.0)));
  return std::max(cfg.momentum_cutoff, needed);
}

std::vector<double> chain_eigenvalues(double Omega, double coupling, double k, int cutoff,
                                      std::size_t count) {
  const int lo = -2 * cutoff;
  const int hi = 2 * cutoff + 1;
  const auto dim = static_cast<std::size_t>(hi - lo + 1);
  std::vector<double> diag(dim);
  std::vector<double> off(dim - 1, coupling);
  for (int n = lo; n <= hi; ++n) {
    const double kn = k + n;
    const double internal = (n % 2 == 0) ? -0.5 * Omega : 0.5 * Omega;
    diag[static_cast<std::size_t>(n - lo)] = 0.5 * kn * kn + internal;
  }
  return detail::lowest_eigenvalues(diag, off, count);
}

BandSpectrum bloch_bands(const ModelParams& p, double y, const BandSolverConfig& cfg) {
  require_intensity(y);
  cfg.validate();
  const int cutoff = effective_cutoff(p, y, cfg);
  const auto nk = static_cast<std::size_t>(cfg.k_points);
  const std::size_t half = static_cast<std::size_t>(2 * cutoff + 1);
  const std::size_t keep =
      cfg.n_bands > 0 ? std::min(static_cast<std::size_t>(cfg.n_bands), 2 * half) : half;
  const double c = coupling_of(p, y);

  BandSpectrum out;
  out.n_bands = keep;
  out.k_grid.resize(nk);
  for (std::size_t i = 0; i < nk; ++i) out.k_grid[i] = k_at(i, nk);
  out.energies = band_table(p.Omega, c, cutoff, nk, keep);
  if (cfg.check_convergence) check_band_converged(p.Omega, c, cutoff, nk, keep - 1);
  return out;
}

double ln_g2(const ModelParams& p, double y, const BandSolverConfig& cfg) {
  require_intensity(y);
  cfg.validate();
  const int cutoff = effective_cutoff(p, y, cfg);
  const auto nk = static_cast<std::size_t>(cfg.k_points);
  const std::size_t dim = static_cast<std::size_t>(4 * cutoff + 2);
  const double c = coupling_of(p, y);
  const double beta = p.beta();
  const double ln_weight = std::log(2.0 / static_cast<double>(nk));
  const double ln_cut = std::log(cfg.band_cut);

  // E(k) = E(-k), and the grid maps onto itself under k -> -k (k = -1 pairs
  // with its periodic image). Only the representatives are diagonalized; the
  // multiplicity enters the quadrature weight.
  std::vector<std::size_t> reps;
  std::vector<double> ln_mult;
  for (std::size_t i = 0; i < nk; ++i) {
    const std::size_t mirror = (nk - i) % nk;
    if (mirror < i) continue;
    reps.push_back(i);
    ln_mult.push_back(mirror == i ? 0.0 : std::numbers::ln2);
  }
  std::vector<double> table(reps.size() * dim);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto ev = chain_eigenvalues(p.Omega, c, k_at(reps[r], nk), cutoff, dim);
    std::copy(ev.begin(), ev.end(), table.begin() + static_cast<std::ptrdiff_t>(r * dim));
  }

  LogSumAccumulator total;
  std::size_t used = 0;
  // Bands past the upper half of the chain feel the truncation; never use them.
  const std::size_t max_bands = dim / 2;
  for (std::size_t nu = 0; nu < max_bands; ++nu) {
    double band_min = table[nu];
    for (std::size_t r = 1; r < reps.size(); ++r) band_min = std::min(band_min, table[r * dim + nu]);
    // Upper bound on this band's integral: measure 2 times its largest weight.
    if (nu > 0 && std::numbers::ln2 - beta * band_min < ln_cut + total.value()) break;
    for (std::size_t r = 0; r < reps.size(); ++r)
      total.add(ln_weight + ln_mult[r] - beta * table[r * dim + nu]);
    ++used;
  }
  if (cfg.check_convergence) check_band_converged(p.Omega, c, cutoff, nk, used - 1);
  return total.value();
}

double f2(const ModelParams& p, double y, const BandSolverConfig& cfg) {
  return -p.beta() * p.omega * y + ln_g2(p, y, cfg);
}

}  // namespace dicke::standing_wave
