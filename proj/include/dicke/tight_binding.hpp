#pragma once

// Gaussian-Wannier tight-binding reduction of the standing-wave adiabatic
// potentials V+-(x) ~ +-A +- B cos^2(x), and the large-intensity law of ln g2.
//
// Lattice convention: wells sit at spacing pi, and the k used by tb_band is the
// dimensionless quasi-momentum over that lattice, k in [-pi, pi]. This is not
// the doubled-zone k of standing_wave::bloch_bands; both agree at k = 0.
//
// These closed forms are used for asymptotics and validation only, never
// inside ln_g2.

#include <cstddef>
#include <vector>

#include "dicke/core.hpp"
#include "dicke/standing_wave.hpp"

namespace dicke::tight_binding {

struct TightBindingParams {
  double A = 0.0;       // Omega / 2
  double B = 0.0;       // sqrt(Omega^2/4 + lambda^2 y) - Omega/2
  double sigma2 = 0.0;  // 1 / (2B)
};

struct TightBindingIntegrals {
  double E0 = 0.0;
  double E1 = 0.0;
  double J0_plus = 0.0;
  double J0_minus = 0.0;
  double J1_plus = 0.0;
  double J1_minus = 0.0;
};

enum class Branch { plus, minus };

struct TightBindingBand {
  double onsite = 0.0;  // E0 + J0
  double hop = 0.0;     // E1 + J1
  Branch branch = Branch::minus;

  /// onsite + 2 hop cos(k).
  double energy(double k) const;
  double bandwidth() const;
};

/// Throws DomainError("tight binding undefined at zero field") when B == 0.
TightBindingParams tb_params(const ModelParams& p, double y);

/// dB/dy = lambda^2 / (2 sqrt(Omega^2/4 + lambda^2 y)).
double dB_dy(const ModelParams& p, double y);

TightBindingIntegrals tb_integrals(const TightBindingParams& tb);

TightBindingBand tb_band(const TightBindingParams& tb, Branch branch);

/// Convenience: tb_band(tb, branch).energy(k).
double tb_band_energy(const TightBindingParams& tb, Branch branch, double k);

/// The approximation is treated as reliable for sigma^2 < 1.
inline bool in_validity_regime(const TightBindingParams& tb) { return tb.sigma2 < 1.0; }

struct AsymptoticFit {
  double slope = 0.0;  // d ln(ln g2) / d ln y, least squares
  double intercept = 0.0;
  std::vector<double> y;
  std::vector<double> ln_g2;
};

/// Fits ln(ln g2(y)) against ln y on a log-spaced window using the exact band
/// solver. The slope tends to 1/2 as the window moves to large y.
AsymptoticFit asymptotic_slope(const ModelParams& p, double y_lo, double y_hi,
                               const standing_wave::BandSolverConfig& cfg = {},
                               std::size_t points = 9);

}  // namespace dicke::tight_binding
