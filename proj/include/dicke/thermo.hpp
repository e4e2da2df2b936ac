#pragma once

// Saddle-point thermodynamics for both geometries. Everything here works on
// the free energy per particle f(y) = -beta omega y + ln g(y): maximize it over
// y to get the scaled intensity I, label the phase, and follow I along
// parameter sweeps to find transitions and their order.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/core.hpp"
#include "dicke/standing_wave.hpp"

namespace dicke::thermo {

enum class Phase { normal, superradiant };
enum class Order { first, second, crossover };
enum class Geometry { gaussian, standing_wave };
enum class Axis { lambda, omega, Omega, T, delta_x };

std::string_view to_string(Phase ph);
std::string_view to_string(Order o);
std::string_view to_string(Geometry g);
std::string_view to_string(Axis a);
Geometry parse_geometry(std::string_view s);
Axis parse_axis(std::string_view s);

using FreeEnergy = std::function<double(double)>;

/// A free-energy landscape on [floor, y_cap]. `breakpoints`, when set, lists
/// the points in a window where f jumps (f is right-continuous there); the
/// maximizer keeps them on its scan grid and never refines across them.
struct Landscape {
  FreeEnergy f;
  double floor = 0.0;
  double y_cap = 1.0;
  bool auto_cap = false;  // double y_cap until f decreases there
  std::function<std::vector<double>(double, double)> breakpoints;
};

struct MaximizeOptions {
  std::size_t scan_points = 400;
  double y_rel_tol = 1e-8;  // golden-section stop, times max(1, y_cap)
  double tie_tol = 1e-9;    // in f, between distinct local maxima
  int max_cap_doublings = 16;
};

struct IntensityResult {
  double I = 0.0;
  double f_max = 0.0;
  Phase phase = Phase::normal;
  double floor = 0.0;
  double y_cap = 0.0;
};

IntensityResult maximize_intensity(const Landscape& L, const MaximizeOptions& opt = {});

/// Fixed-window form. Throws NumericalError("cap too small; f unbounded in
/// window") when f still increases at y_cap.
IntensityResult maximize_intensity(const FreeEnergy& f, double floor, double y_cap,
                                   const MaximizeOptions& opt = {});

struct ScanOptions {
  double jump_tol = 0.05;     // relative jump in I, times max(1, I)
  double kink_factor = 10.0;  // times the median slope change along the sweep
  double kink_floor = 1e-3;   // absolute floor on the kink threshold
  double resolution = 1e-4;   // relative bisection resolution
};

struct TransitionPoint {
  double parameter = 0.0;
  Order order = Order::crossover;
  double I_before = 0.0;
  double I_after = 0.0;
  // Sweep values at which I_before and I_after were solved (the final bracket).
  double parameter_before = 0.0;
  double parameter_after = 0.0;
};

/// Intensity as a function of the swept parameter.
using IntensityCurve = std::function<IntensityResult(double)>;

/// Requires a strictly monotone sweep with at least 8 points.
std::vector<TransitionPoint> scan_transition(const IntensityCurve& curve,
                                             std::span<const double> sweep,
                                             const ScanOptions& opt = {});

/// Same, reusing intensities already computed on the sweep points.
std::vector<TransitionPoint> classify_transitions(const IntensityCurve& curve,
                                                  std::span<const double> sweep,
                                                  std::span<const double> intensity,
                                                  const ScanOptions& opt = {});

// ---------------------------------------------------------------- model level

struct SolverConfig {
  standing_wave::BandSolverConfig bands;
  MaximizeOptions maximize;
  ScanOptions scan;
  double y_cap = 0.0;  // 0: default cap with automatic doubling
  std::size_t workers = 1;
};

/// 50 max(1, (beta omega)^-2) max(1, lambda^2/omega^2).
double default_y_cap(const ModelParams& p);

ModelParams with_axis(ModelParams p, Axis axis, double value);

/// Floor is the pump floor y0 for the Gaussian well and 0 for the standing wave.
Landscape make_landscape(Geometry g, const ModelParams& p, const SolverConfig& cfg = {});

IntensityResult solve_intensity(Geometry g, const ModelParams& p, const SolverConfig& cfg = {});

/// Gaussian geometry: number of bound levels at y; 0 for the standing wave.
std::size_t bound_count_at(Geometry g, const ModelParams& p, double y);

IntensityCurve intensity_curve(Geometry g, const ModelParams& base, Axis axis,
                               const SolverConfig& cfg = {});

/// All points along the sweep where the phase label changes, each bisected to
/// the relative scan resolution. Order is first when I jumps across the final
/// bracket and second otherwise.
std::vector<TransitionPoint> critical_points(Geometry g, const ModelParams& base, Axis axis,
                                             std::span<const double> sweep,
                                             const SolverConfig& cfg = {});

std::vector<TransitionPoint> critical_coupling(Geometry g, const ModelParams& base,
                                               std::span<const double> lambdas,
                                               const SolverConfig& cfg = {});

std::vector<TransitionPoint> critical_temperature(Geometry g, const ModelParams& base,
                                                  std::span<const double> temperatures,
                                                  const SolverConfig& cfg = {});

struct AxisSpec {
  Axis axis = Axis::lambda;
  std::vector<double> values;
};

/// Cells are stored row-major: row r holds axis2 value r and sweeps axis1.
struct PhaseDiagram {
  Geometry geometry = Geometry::gaussian;
  AxisSpec axis1;
  AxisSpec axis2;
  std::vector<IntensityResult> cells;
  std::vector<std::size_t> bound_count;  // Gaussian geometry only
  std::vector<std::vector<TransitionPoint>> transitions;  // one list per row

  std::size_t rows() const { return axis2.values.size(); }
  std::size_t cols() const { return axis1.values.size(); }
  const IntensityResult& at(std::size_t row, std::size_t col) const {
    return cells[row * cols() + col];
  }
};

PhaseDiagram phase_diagram(Geometry g, const AxisSpec& axis1, const AxisSpec& axis2,
                           const ModelParams& fixed, const SolverConfig& cfg = {});

}  // namespace dicke::thermo
