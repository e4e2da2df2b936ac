#pragma once

// Brute-force 1D Schrodinger eigensolver used as ground truth for the
// closed-form well spectra and for atomic densities.
//
// Kinetic term p^2/2 by central differences, hard walls at both ends of the
// sampled interval. The matrix is symmetric tridiagonal; only the eigenpairs
// below a cutoff are extracted.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dicke/core.hpp"

namespace dicke::oracle {

class SampledPotential {
 public:
  /// `values` sampled at n uniformly spaced points spanning [x_min, x_max].
  SampledPotential(double x_min, double x_max, std::vector<double> values);

  static SampledPotential sample(const std::function<double(double)>& v, double x_min,
                                 double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return values_.size(); }
  double spacing() const { return (x_max_ - x_min_) / static_cast<double>(values_.size() - 1); }
  double x(std::size_t i) const;
  std::span<const double> values() const { return values_; }

 private:
  double x_min_;
  double x_max_;
  std::vector<double> values_;
};

struct OracleSpectrum {
  std::vector<double> x;         // grid, same as the potential's
  std::vector<double> energies;  // ascending
  // One per energy, sum_i psi_i^2 h = 1, zero at both walls. Sign fixed so
  // the largest-magnitude component is positive.
  std::vector<std::vector<double>> wavefunctions;

  std::size_t count() const { return energies.size(); }
  double spacing() const { return x[1] - x[0]; }
};

/// All eigenpairs with E < e_max.
OracleSpectrum solve_bound_states(const SampledPotential& pot, double e_max);

struct DensityProfile {
  std::vector<double> x;
  std::vector<double> rho;
};

/// Boltzmann mixture sum_n w_n |psi_n|^2 with w_n proportional to exp(-beta E_n).
DensityProfile thermal_density(const OracleSpectrum& spec, double beta);

/// Energies below e_max from grids of n and 2n-1 points, combined by
/// Richardson extrapolation (the scheme is second order in h). Levels present
/// on only one of the two grids are dropped.
std::vector<double> extrapolated_energies(const std::function<double(double)>& v, double x_min,
                                          double x_max, std::size_t n_points, double e_max);

}  // namespace dicke::oracle
