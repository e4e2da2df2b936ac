#pragma once

// Transverse (Gaussian mode profile) geometry.
//
// The lower adiabatic potential -sqrt(Omega^2/4 + lambda^2 y exp(-2x^2/dx^2))
// is replaced by the Poschl-Teller well -epsilon0 - U0 sech^2(q x), matched in
// asymptote, depth and FWHM. Its bound spectrum is known in closed form, which
// makes the state sum g1(y) and the free energy per particle f1(y) cheap.

#include <cstddef>
#include <vector>

#include "dicke/core.hpp"

namespace dicke::gaussian {

struct SechWellParams {
  double epsilon0 = 0.0;  // asymptotic offset, always Omega/2
  double U0 = 0.0;        // depth, zero iff y == 0
  double q = 0.0;         // inverse width
};

struct BoundSpectrum {
  std::vector<double> energies;  // strictly increasing, in [-Omega/2 - U0, -Omega/2)

  std::size_t count() const { return energies.size(); }
};

/// Argument of the logarithm inside q. Lies in [2, 4): 2 at y = 0, -> 4 as y -> oo.
double q_log_argument(double Omega, double lambda, double y);

SechWellParams well_params(const ModelParams& p, double y);

/// #{n >= 0 : 1 + 2n < sqrt(1 + 8 U0 / q^2)}. Zero when U0 == 0.
std::size_t bound_count(const SechWellParams& w);

/// E_n = -Omega/2 - (q^2/8) (-(1+2n) + sqrt(1 + 8 U0/q^2))^2 for every bound n.
BoundSpectrum bound_energies(const SechWellParams& w, double Omega);

/// ln g1(y) = ln sum_n exp(-beta E_n(y)). Throws DomainError when the well
/// holds no level at all.
double ln_g1(const ModelParams& p, double y);

/// Free energy per particle f1(y) = -beta omega y + ln g1(y).
double f1(const ModelParams& p, double y);

/// Pump floor y0: the smallest intensity at which the well holds an excited
/// level besides its ground state, i.e. U0(y0) = q(y0)^2. Returned from the
/// side where the condition holds, to relative tolerance 1e-10.
double minimum_intensity(const ModelParams& p, double y_cap = 1e6);

/// Intensities in (y_lo, y_hi] at which bound_count increases by one, each
/// located from above to relative tolerance 1e-12. f1 jumps upward there.
std::vector<double> level_thresholds(const ModelParams& p, double y_lo, double y_hi);

/// -epsilon0 - U0 sech^2(q x).
double sech2_potential(const SechWellParams& w, double x);

/// Exact lower adiabatic potential of the Gaussian mode at intensity y.
double adiabatic_potential(const ModelParams& p, double y, double x);

}  // namespace dicke::gaussian
