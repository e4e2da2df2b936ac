#pragma once

// Shared parameter types, intensity grids and log-domain accumulation.
//
// Units: hbar = m = k_B = 1, atomic density rho0 = 1 and photon wave number
// mu = 1. None of these conventions is stored; they are baked into the
// formulas of every solver.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

/// Violated precondition on an input (bad parameter, empty range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not deliver a result at the requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical inputs of the generalized Dicke model in scaled units.
///
/// `delta_x` is only read by the Gaussian (transverse) geometry. The
/// standing-wave geometry fixes the photon wave number to one.
struct ModelParams {
  double omega = 1.0;    // field frequency, > 0
  double Omega = 1.0;    // atomic transition frequency, >= 0
  double lambda = 1.0;   // atom-field coupling, >= 0
  double T = 1.0;        // temperature, > 0
  double delta_x = 2.0;  // Gaussian mode width, > 0

  double beta() const { return 1.0 / T; }

  /// Throws DomainError naming the first offending field.
  void validate() const;
};

inline constexpr double kPhotonWaveNumber = 1.0;

/// Strictly increasing list of scaled field intensities y = |alpha|^2 / N.
class IntensityGrid {
 public:
  explicit IntensityGrid(std::vector<double> points);

  double y_min() const { return points_.front(); }
  double y_max() const { return points_.back(); }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  std::span<const double> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<double> points_;
};

/// n equally spaced points, both endpoints included.
IntensityGrid make_linear_grid(double y_min, double y_max, std::size_t n);

/// n logarithmically spaced points in [y_min, y_max]; requires y_min > 0.
IntensityGrid make_log_grid(double y_min, double y_max, std::size_t n);

/// Streaming ln(sum_i exp(x_i)) with a running max shift.
class LogSumAccumulator {
 public:
  void add(double exponent);
  bool empty() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  double value() const;

 private:
  double max_ = 0.0;
  double scaled_sum_ = 0.0;
  std::size_t count_ = 0;
};

/// ln(sum_i exp(terms_i)) without overflow. Throws DomainError("empty sum")
/// or DomainError("invalid exponent") for NaN / infinite terms.
double log_sum_exp(std::span<const double> terms);

}  // namespace dicke
