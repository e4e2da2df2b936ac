#pragma once

// Observables at the saddle point for the Gaussian geometry: atomic inversion,
// the thermal atomic density, and an order-of-magnitude check of the terms
// dropped by the adiabatic approximation.

#include <cstddef>
#include <string>

#include "dicke/core.hpp"
#include "dicke/schrodinger.hpp"
#include "dicke/thermo.hpp"

namespace dicke::observables {

using oracle::DensityProfile;

/// Trapezoid integral of rho over its grid.
double density_norm(const DensityProfile& rho);

/// sin^2(theta) - cos^2(theta) = -Omega / sqrt(Omega^2 + 4 lambda^2 y exp(-2x^2/dx^2)).
/// -1 at y = 0 for any Omega.
double inversion_weight(const ModelParams& p, double y, double x);

/// W = integral of inversion_weight * rho. Throws DomainError when rho is not
/// normalized to within 1e-6.
double inversion(const ModelParams& p, double y, const DensityProfile& rho);

struct DensityOptions {
  std::size_t grid_points = 4001;
  double half_width = 0.0;  // 0: max(8/q, 5 dx)
};

/// Thermal density in the sech^2 well at y = result.I.
DensityProfile density_at_saddle(const ModelParams& p, const thermo::IntensityResult& result,
                                 const DensityOptions& opt = {});

struct DensityDifference {
  double l1 = 0.0;           // integral of |rho_a - rho_b|
  double gradient_l1 = 0.0;  // integral of |rho_a' - rho_b'|
};

/// Compares two profiles on the grid of `a`; `b` is linearly interpolated and
/// taken as zero outside its own grid.
DensityDifference density_difference(const DensityProfile& a, const DensityProfile& b);

struct MixingAngle {
  double theta = 0.0;
  double d1 = 0.0;  // d theta / dx
  double d2 = 0.0;  // d^2 theta / dx^2
};

/// tan(2 theta) = 2 lambda sqrt(y) exp(-x^2/dx^2) / Omega, with analytic derivatives.
MixingAngle mixing_angle(const ModelParams& p, double y, double x);

struct AdiabaticityReport {
  double max_correction_scale = 0.0;
  double adiabatic_scale = 0.0;  // max_x |V+(x)|
  double ratio = 0.0;
  double momentum_scale = 0.0;  // sqrt(2 adiabatic_scale)
  double diagonal_max = 0.0;    // max_x (theta')^2 / 2
  double off_diagonal_max = 0.0;  // max_x |theta'| p + |theta''| / 2

  bool adiabatic_ok() const { return ratio <= 0.1; }
};

struct AdiabaticityOptions {
  std::size_t grid_points = 4001;
  double half_width_factor = 6.0;  // in units of dx
};

AdiabaticityReport adiabaticity_check(const ModelParams& p, double y,
                                      const AdiabaticityOptions& opt = {});

/// JSON object with the report fields and a description of the estimator.
std::string to_json(const AdiabaticityReport& r);

}  // namespace dicke::observables
