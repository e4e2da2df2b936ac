#pragma once

// Longitudinal (standing-wave mode) geometry: exact Bloch bands of
//
//   h = p^2/2 + (Omega/2) sigma_z + lambda sqrt(y) cos(x) sigma_x
//
// with a real field amplitude. cos(x) sigma_x only connects |g, k+2j> with
// |e, k+2j +- 1>, so each quasi-momentum k in the doubled zone [-1, 1) couples
// a single chain of plane waves k+n, n = -2M .. 2M+1, ground state on even n
// and excited state on odd n. The chain is a symmetric tridiagonal matrix of
// dimension 2(2M+1).

#include <cstddef>
#include <vector>

#include "dicke/core.hpp"

namespace dicke::standing_wave {

struct BandSolverConfig {
  int momentum_cutoff = 16;  // M
  int k_points = 201;
  double band_cut = 1e-12;   // relative Boltzmann weight below which higher bands are dropped
  // Raise M with the lattice depth so deep lattices stay converged.
  bool auto_cutoff = true;
  // Compare the top band used against a run at M + 2; throw if it moved by > 1e-8.
  bool check_convergence = false;
  // Bands returned by bloch_bands; 0 means 2M + 1 (the lower half of the chain).
  int n_bands = 0;

  void validate() const;
};

struct BandSpectrum {
  std::vector<double> k_grid;    // uniform on [-1, 1)
  std::size_t n_bands = 0;
  std::vector<double> energies;  // row-major, energies[ik * n_bands + nu], ascending in nu

  double at(std::size_t ik, std::size_t nu) const { return energies[ik * n_bands + nu]; }
};

/// Cutoff actually used for intensity y: cfg.momentum_cutoff, raised when
/// auto_cutoff is set so that the edge plane-wave energy (2M)^2/2 stays well
/// above 12 lambda sqrt(y).
int effective_cutoff(const ModelParams& p, double y, const BandSolverConfig& cfg);

/// Lowest `count` eigenvalues of the chain at quasi-momentum k. `Omega` may be
/// negative here (used for the g <-> e relabeling symmetry).
std::vector<double> chain_eigenvalues(double Omega, double coupling, double k, int cutoff,
                                      std::size_t count);

/// Band energies on the uniform k grid.
BandSpectrum bloch_bands(const ModelParams& p, double y, const BandSolverConfig& cfg = {});

/// ln g2(y) = ln sum_nu int_{-1}^{1} dk exp(-beta E_nu(k)), periodic trapezoid rule.
double ln_g2(const ModelParams& p, double y, const BandSolverConfig& cfg = {});

/// f2(y) = -beta omega y + ln g2(y).
double f2(const ModelParams& p, double y, const BandSolverConfig& cfg = {});

}  // namespace dicke::standing_wave
