#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dicke/baseline.hpp"
#include "dicke/core.hpp"
#include "dicke/gaussian_well.hpp"
#include "dicke/observables.hpp"
#include "dicke/parallel.hpp"
#include "dicke/standing_wave.hpp"
#include "dicke/thermo.hpp"
#include "dicke/tight_binding.hpp"

namespace dicke::cli {

namespace {

using thermo::Axis;
using thermo::Geometry;

// Raised for configuration problems found after CLI11 parsing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct OutputFile {
  std::string path;
  std::string content;
};

struct Outcome {
  std::vector<OutputFile> files;
  std::size_t points = 0;
};

using Job = std::function<Outcome()>;

void write_atomically(const OutputFile& f) {
  namespace fs = std::filesystem;
  const fs::path target(f.path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << f.content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into '" + target.string() + "': " + ec.message());
  }
}

// ------------------------------------------------------------------ options

struct Params {
  std::optional<double> omega, Omega, lambda, T, dx;
};

struct Solver {
  int k_points = 201;
  int cutoff = 16;
  double band_cut = 1e-12;
  bool fixed_cutoff = false;
  bool check_convergence = false;
  std::size_t scan_points = 400;
  double y_cap = 0.0;
  double jump_tol = 0.05;
  double kink_factor = 10.0;
  double kink_floor = 1e-3;
  double resolution = 1e-4;
  std::size_t workers = 0;
};

struct Range {
  std::optional<double> min, max;
  std::optional<std::size_t> points;
};

void add_params(CLI::App* app, Params& p) {
  app->add_option("--omega", p.omega, "Cavity detuning omega");
  app->add_option("--Omega", p.Omega, "Atomic level splitting Omega");
  app->add_option("--lambda", p.lambda, "Atom-field coupling lambda");
  app->add_option("--T", p.T, "Temperature");
  app->add_option("--dx", p.dx, "Gaussian mode width delta_x");
}

void add_band_options(CLI::App* app, Solver& s) {
  app->add_option("--k-points", s.k_points, "Quasi-momentum grid size")->capture_default_str();
  app->add_option("--cutoff", s.cutoff, "Momentum cutoff M")->capture_default_str();
  app->add_option("--band-cut", s.band_cut, "Relative Boltzmann band truncation")
      ->capture_default_str();
  app->add_flag("--fixed-cutoff", s.fixed_cutoff, "Do not raise M with the coupling strength");
  app->add_flag("--check-convergence", s.check_convergence, "Fail when M -> M+2 moves a band");
}

void add_solver_options(CLI::App* app, Solver& s) {
  add_band_options(app, s);
  app->add_option("--scan-points", s.scan_points, "Coarse scan size of the maximizer")
      ->capture_default_str();
  app->add_option("--y-cap", s.y_cap, "Upper intensity bound (0: automatic)")
      ->capture_default_str();
  app->add_option("--jump-tol", s.jump_tol, "Relative jump threshold")->capture_default_str();
  app->add_option("--kink-factor", s.kink_factor, "Kink threshold over the median")
      ->capture_default_str();
  app->add_option("--kink-floor", s.kink_floor, "Absolute kink threshold floor")
      ->capture_default_str();
  app->add_option("--resolution", s.resolution, "Relative bisection resolution")
      ->capture_default_str();
  app->add_option("--workers", s.workers, "Worker threads (0: automatic)")->capture_default_str();
}

void add_range(CLI::App* app, const std::string& prefix, Range& r, const std::string& what) {
  app->add_option("--" + prefix + "-min", r.min, "Lower end of the " + what);
  app->add_option("--" + prefix + "-max", r.max, "Upper end of the " + what);
  app->add_option("--" + prefix + "-points", r.points, "Number of points in the " + what);
}

void add_output(CLI::App* app, std::string& out) {
  app->add_option("-o,--output", out, "Output file")->required();
}

// ---------------------------------------------------------------- validation

// Collects every missing field before reporting, so one run shows them all.
class Requirements {
 public:
  template <class T>
  const T& need(const std::optional<T>& v, const std::string& flag) {
    static const T fallback{};
    if (!v) {
      missing_.push_back(flag);
      return fallback;
    }
    return *v;
  }
  void check() const {
    if (missing_.empty()) return;
    std::string msg = "missing required field";
    msg += missing_.size() > 1 ? "s: " : ": ";
    for (std::size_t i = 0; i < missing_.size(); ++i) msg += (i ? ", " : "") + missing_[i];
    throw ConfigError(msg);
  }

 private:
  std::vector<std::string> missing_;
};

const char* flag_of(Axis a) {
  switch (a) {
    case Axis::lambda: return "--lambda";
    case Axis::omega: return "--omega";
    case Axis::Omega: return "--Omega";
    case Axis::T: return "--T";
    case Axis::delta_x: return "--dx";
  }
  return "--lambda";
}

// Fills ModelParams from the flags. Fields listed in `skip` are swept and not
// required; fields not in `used` fall back to harmless defaults.
ModelParams resolve_params(const Params& in, Requirements& req, std::vector<Axis> used,
                           const std::vector<Axis>& skip) {
  ModelParams p;
  auto pick = [&](const std::optional<double>& v, Axis a, double& dst) {
    const bool is_used = std::find(used.begin(), used.end(), a) != used.end();
    const bool is_skipped = std::find(skip.begin(), skip.end(), a) != skip.end();
    if (v) {
      dst = *v;
    } else if (is_used && !is_skipped) {
      req.need(v, flag_of(a));
    }
  };
  pick(in.omega, Axis::omega, p.omega);
  pick(in.Omega, Axis::Omega, p.Omega);
  pick(in.lambda, Axis::lambda, p.lambda);
  pick(in.T, Axis::T, p.T);
  pick(in.dx, Axis::delta_x, p.delta_x);
  return p;
}

std::vector<Axis> physics_axes(Geometry g) {
  std::vector<Axis> a{Axis::omega, Axis::Omega, Axis::lambda, Axis::T};
  if (g == Geometry::gaussian) a.push_back(Axis::delta_x);
  return a;
}

Geometry geometry_of(const std::string& s) {
  try {
    return thermo::parse_geometry(s);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("--geometry: ") + e.what());
  }
}

Axis axis_of(const std::string& s, const std::string& flag) {
  try {
    return thermo::parse_axis(s);
  } catch (const DomainError& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

std::vector<double> grid_of(const Range& r, Requirements& req, const std::string& prefix,
                            std::size_t min_points) {
  const double lo = req.need(r.min, "--" + prefix + "-min");
  const double hi = req.need(r.max, "--" + prefix + "-max");
  const std::size_t n = req.need(r.points, "--" + prefix + "-points");
  if (!r.min || !r.max || !r.points) return {};
  if (n < min_points)
    throw ConfigError("--" + prefix + "-points must be >= " + std::to_string(min_points));
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw ConfigError("--" + prefix + "-min/max must be finite");
  if (n == 1) {
    if (lo != hi) throw ConfigError("--" + prefix + ": a single point needs min == max");
    return {lo};
  }
  if (!(hi > lo)) throw ConfigError("--" + prefix + "-max must exceed --" + prefix + "-min");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

std::size_t worker_count(std::size_t requested) {
  const std::size_t cap = default_workers();
  return requested == 0 ? cap : std::min(requested, std::max<std::size_t>(cap, 1));
}

thermo::SolverConfig solver_config(const Solver& s) {
  thermo::SolverConfig c;
  c.bands.k_points = s.k_points;
  c.bands.momentum_cutoff = s.cutoff;
  c.bands.band_cut = s.band_cut;
  c.bands.auto_cutoff = !s.fixed_cutoff;
  c.bands.check_convergence = s.check_convergence;
  c.maximize.scan_points = s.scan_points;
  c.y_cap = s.y_cap;
  c.scan.jump_tol = s.jump_tol;
  c.scan.kink_factor = s.kink_factor;
  c.scan.kink_floor = s.kink_floor;
  c.scan.resolution = s.resolution;
  c.workers = worker_count(s.workers);
  try {
    c.bands.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (s.scan_points < 8) throw ConfigError("--scan-points must be >= 8");
  if (!(s.y_cap >= 0.0)) throw ConfigError("--y-cap must be >= 0");
  if (!(s.jump_tol > 0.0)) throw ConfigError("--jump-tol must be > 0");
  if (!(s.kink_factor > 0.0)) throw ConfigError("--kink-factor must be > 0");
  if (!(s.kink_floor >= 0.0)) throw ConfigError("--kink-floor must be >= 0");
  if (!(s.resolution > 0.0 && s.resolution < 1.0)) throw ConfigError("--resolution must lie in (0, 1)");
  return c;
}

void validate_params(const ModelParams& p) {
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string sidecar(const std::string& output, const std::string& suffix) {
  return output + suffix;
}

// ------------------------------------------------------------------ commands

struct FreeEnergyCmd {
  std::string geometry = "gaussian";
  Params params;
  std::vector<double> lambdas;
  Range y;
  Solver solver;
  std::string output;

  void attach(CLI::App* app) {
    app->add_option("--geometry", geometry, "gaussian or standing-wave")->capture_default_str();
    add_params(app, params);
    app->add_option("--lambdas", lambdas, "Coupling values, one curve each");
    add_range(app, "y", y, "intensity grid");
    add_solver_options(app, solver);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    const Geometry g = geometry_of(geometry);
    auto p = resolve_params(params, req, physics_axes(g), {Axis::lambda});
    if (lambdas.empty()) {
      if (params.lambda)
        lambdas = {*params.lambda};
      else
        req.need(std::optional<double>{}, "--lambdas");
    }
    const auto ys = grid_of(y, req, "y", 2);
    req.check();
    auto cfg = solver_config(solver);
    for (double l : lambdas) validate_params(thermo::with_axis(p, Axis::lambda, l));
    if (ys.front() < 0.0) throw ConfigError("--y-min must be >= 0");

    return [=, out = output, ls = lambdas]() {
      const std::size_t nl = ls.size(), ny = ys.size();
      std::vector<double> f(nl * ny);
      parallel_for(nl * ny, cfg.workers, [&](std::size_t idx) {
        const auto q = thermo::with_axis(p, Axis::lambda, ls[idx / ny]);
        const double yv = ys[idx % ny];
        f[idx] = g == Geometry::gaussian ? gaussian::f1(q, yv) : standing_wave::f2(q, yv, cfg.bands);
      });
      std::string csv = std::string("lambda,y,") + (g == Geometry::gaussian ? "f1" : "f2") + "\n";
      for (std::size_t idx = 0; idx < nl * ny; ++idx)
        csv += num(ls[idx / ny]) + "," + num(ys[idx % ny]) + "," + num(f[idx]) + "\n";
      return Outcome{{{out, csv}}, nl * ny};
    };
  }
};

struct BandsCmd {
  Params params;
  std::optional<double> y;
  int n_bands = 0;
  Solver solver;
  std::string output;

  void attach(CLI::App* app) {
    add_params(app, params);
    app->add_option("--y", y, "Scaled intensity");
    app->add_option("--n-bands", n_bands, "Bands to export (0: 2M+1)")->capture_default_str();
    add_band_options(app, solver);
    app->add_option("--workers", solver.workers, "Worker threads (0: automatic)");
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    auto p = resolve_params(params, req, {Axis::Omega, Axis::lambda}, {});
    const double yv = req.need(y, "--y");
    req.check();
    validate_params(p);
    if (!(yv >= 0.0)) throw ConfigError("--y must be >= 0");
    if (n_bands < 0) throw ConfigError("--n-bands must be >= 0");
    auto cfg = solver_config(solver);
    cfg.bands.n_bands = n_bands;

    return [=, out = output]() {
      const auto bands = standing_wave::bloch_bands(p, yv, cfg.bands);
      std::string csv = "k,nu,energy\n";
      for (std::size_t i = 0; i < bands.k_grid.size(); ++i)
        for (std::size_t nu = 0; nu < bands.n_bands; ++nu)
          csv += num(bands.k_grid[i]) + "," + std::to_string(nu + 1) + "," + num(bands.at(i, nu)) +
                 "\n";
      return Outcome{{{out, csv}}, bands.k_grid.size() * bands.n_bands};
    };
  }
};

struct PhaseDiagramCmd {
  std::string geometry = "gaussian";
  Params params;
  std::string axis1 = "lambda", axis2 = "omega";
  Range r1, r2;
  Solver solver;
  std::string output;

  void attach(CLI::App* app) {
    app->add_option("--geometry", geometry, "gaussian or standing-wave")->capture_default_str();
    add_params(app, params);
    app->add_option("--axis1", axis1, "Swept parameter along each row")->capture_default_str();
    app->add_option("--axis2", axis2, "Parameter indexing the rows")->capture_default_str();
    add_range(app, "axis1", r1, "first axis");
    add_range(app, "axis2", r2, "second axis");
    add_solver_options(app, solver);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    const Geometry g = geometry_of(geometry);
    const Axis a1 = axis_of(axis1, "--axis1"), a2 = axis_of(axis2, "--axis2");
    if (a1 == a2) throw ConfigError("--axis1 and --axis2 must differ");
    auto p = resolve_params(params, req, physics_axes(g), {a1, a2});
    const auto v1 = grid_of(r1, req, "axis1", 8);
    const auto v2 = grid_of(r2, req, "axis2", 8);
    req.check();
    const auto cfg = solver_config(solver);
    for (double a : {v1.front(), v1.back()})
      for (double b : {v2.front(), v2.back()})
        validate_params(thermo::with_axis(thermo::with_axis(p, a1, a), a2, b));

    return [=, out = output]() {
      const auto d = thermo::phase_diagram(g, {a1, v1}, {a2, v2}, p, cfg);
      const std::string n1(thermo::to_string(a1)), n2(thermo::to_string(a2));
      std::string csv = n1 + "," + n2 + ",I,phase";
      if (g == Geometry::gaussian) csv += ",bound_count";
      csv += "\n";
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t c = 0; c < d.cols(); ++c) {
          const auto& cell = d.at(r, c);
          csv += num(v1[c]) + "," + num(v2[r]) + "," + num(cell.I) + "," +
                 std::string(thermo::to_string(cell.phase));
          if (g == Geometry::gaussian) csv += "," + std::to_string(d.bound_count[r * d.cols() + c]);
          csv += "\n";
        }
      }
      std::string tr = n2 + "," + n1 + ",order,I_before,I_after\n";
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (const auto& t : d.transitions[r])
          tr += num(v2[r]) + "," + num(t.parameter) + "," + std::string(thermo::to_string(t.order)) +
                "," + num(t.I_before) + "," + num(t.I_after) + "\n";
      return Outcome{{{out, csv}, {sidecar(out, ".transitions.csv"), tr}}, d.cells.size()};
    };
  }
};

// critical-coupling and critical-temperature share everything but the axis.
struct CriticalCmd {
  Axis target;
  std::string target_flag;  // "lambda" or "T"
  std::string column;       // "lambda_c" or "T_c"
  std::string geometry = "gaussian";
  Params params;
  Range range;
  std::string sweep_axis;
  Range sweep;
  Solver solver;
  std::string output;

  CriticalCmd(Axis a, std::string flag, std::string col)
      : target(a), target_flag(std::move(flag)), column(std::move(col)) {}

  void attach(CLI::App* app) {
    app->add_option("--geometry", geometry, "gaussian or standing-wave")->capture_default_str();
    add_params(app, params);
    add_range(app, target_flag, range, "search range");
    app->add_option("--sweep-axis", sweep_axis, "Outer parameter, one search per value");
    add_range(app, "sweep", sweep, "outer sweep");
    add_solver_options(app, solver);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    const Geometry g = geometry_of(geometry);
    if (sweep_axis.empty()) req.need(std::optional<std::string>{}, "--sweep-axis");
    req.check();
    const Axis outer = axis_of(sweep_axis, "--sweep-axis");
    if (outer == target) throw ConfigError("--sweep-axis must differ from the searched parameter");
    auto p = resolve_params(params, req, physics_axes(g), {target, outer});
    const auto inner = grid_of(range, req, target_flag, 2);
    const auto outer_vals = grid_of(sweep, req, "sweep", 1);
    req.check();
    const auto cfg = solver_config(solver);
    if (!(inner.front() > 0.0))
      throw ConfigError("--" + target_flag + "-min must be > 0");
    for (double o : {outer_vals.front(), outer_vals.back()})
      validate_params(thermo::with_axis(thermo::with_axis(p, outer, o), target, inner.front()));

    return [=, out = output, tgt = target, col = column]() {
      std::vector<std::vector<thermo::TransitionPoint>> found(outer_vals.size());
      // Parallelism lives inside critical_points; outer values run in order.
      for (std::size_t i = 0; i < outer_vals.size(); ++i)
        found[i] = thermo::critical_points(g, thermo::with_axis(p, outer, outer_vals[i]), tgt,
                                           inner, cfg);
      std::string csv = std::string(thermo::to_string(outer)) + "," + col + ",order\n";
      for (std::size_t i = 0; i < outer_vals.size(); ++i)
        for (const auto& t : found[i])
          csv += num(outer_vals[i]) + "," + num(t.parameter) + "," +
                 std::string(thermo::to_string(t.order)) + "\n";
      return Outcome{{{out, csv}}, outer_vals.size() * inner.size()};
    };
  }
};

struct DensityCmd {
  Params params;
  std::optional<double> y;
  std::size_t grid_points = 4001;
  double half_width = 0.0;
  Solver solver;
  std::string output;

  void attach(CLI::App* app) {
    add_params(app, params);
    app->add_option("--y", y, "Intensity (default: the saddle point I)");
    app->add_option("--grid-points", grid_points, "Spatial grid size")->capture_default_str();
    app->add_option("--half-width", half_width, "Half width of the box (0: automatic)")
        ->capture_default_str();
    add_solver_options(app, solver);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    auto p = resolve_params(params, req, physics_axes(Geometry::gaussian), {});
    req.check();
    validate_params(p);
    const auto cfg = solver_config(solver);
    if (grid_points < 3) throw ConfigError("--grid-points must be >= 3");
    if (y && !(*y > 0.0)) throw ConfigError("--y must be > 0");
    observables::DensityOptions opt{grid_points, half_width};

    return [=, out = output, yo = y]() {
      thermo::IntensityResult r;
      if (yo) {
        r.I = *yo;
      } else {
        r = thermo::solve_intensity(Geometry::gaussian, p, cfg);
      }
      const auto rho = observables::density_at_saddle(p, r, opt);
      std::string csv = "x,rho\n";
      for (std::size_t i = 0; i < rho.x.size(); ++i) csv += num(rho.x[i]) + "," + num(rho.rho[i]) + "\n";
      return Outcome{{{out, csv}}, rho.x.size()};
    };
  }
};

struct AdiabaticCmd {
  Params params;
  std::optional<double> y;
  std::size_t grid_points = 4001;
  std::string output;

  void attach(CLI::App* app) {
    add_params(app, params);
    app->add_option("--y", y, "Scaled intensity");
    app->add_option("--grid-points", grid_points, "Spatial grid size")->capture_default_str();
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    auto p = resolve_params(params, req, {Axis::Omega, Axis::lambda, Axis::delta_x}, {});
    const double yv = req.need(y, "--y");
    req.check();
    validate_params(p);
    if (!(yv > 0.0)) throw ConfigError("--y must be > 0");
    if (grid_points < 3) throw ConfigError("--grid-points must be >= 3");
    observables::AdiabaticityOptions opt;
    opt.grid_points = grid_points;

    return [=, out = output]() {
      const auto rep = observables::adiabaticity_check(p, yv, opt);
      return Outcome{{{out, observables::to_json(rep) + "\n"}}, opt.grid_points};
    };
  }
};

struct AsymptoticsCmd {
  Params params;
  Range y;
  Solver solver;
  std::string output;

  void attach(CLI::App* app) {
    add_params(app, params);
    add_range(app, "y", y, "log-spaced fit window");
    add_band_options(app, solver);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    auto p = resolve_params(params, req, {Axis::Omega, Axis::lambda, Axis::T}, {});
    const double lo = req.need(y.min, "--y-min");
    const double hi = req.need(y.max, "--y-max");
    const std::size_t n = y.points.value_or(9);
    req.check();
    validate_params(p);
    if (!(lo > 0.0 && hi > lo)) throw ConfigError("--y-min/--y-max must satisfy 0 < min < max");
    if (n < 2) throw ConfigError("--y-points must be >= 2");
    const auto cfg = solver_config(solver);

    return [=, out = output]() {
      const auto fit = tight_binding::asymptotic_slope(p, lo, hi, cfg.bands, n);
      std::string csv = "y,ln_g2\n";
      for (std::size_t i = 0; i < fit.y.size(); ++i) csv += num(fit.y[i]) + "," + num(fit.ln_g2[i]) + "\n";
      nlohmann::ordered_json j;
      j["slope"] = fit.slope;
      j["intercept"] = fit.intercept;
      j["y_min"] = lo;
      j["y_max"] = hi;
      j["points"] = n;
      return Outcome{{{out, csv}, {sidecar(out, ".fit.json"), j.dump(2) + "\n"}}, n};
    };
  }
};

struct BaselineCmd {
  Params params;
  std::string output;

  void attach(CLI::App* app) {
    add_params(app, params);
    add_output(app, output);
  }

  Job prepare() {
    Requirements req;
    const double W = req.need(params.Omega, "--Omega");
    const double w = req.need(params.omega, "--omega");
    req.check();
    if (!(W > 0.0) || !(w > 0.0)) throw ConfigError("--Omega and --omega must be > 0");
    if (params.lambda && !(*params.lambda > 0.0)) throw ConfigError("--lambda must be > 0");

    return [=, out = output, lam = params.lambda]() {
      nlohmann::ordered_json j;
      j["Omega"] = W;
      j["omega"] = w;
      j["lambda_c"] = baseline::standard_lambda_c(W, w);
      if (lam) {
        j["lambda"] = *lam;
        const auto tc = baseline::standard_T_c(W, w, *lam);
        j["T_c"] = tc ? nlohmann::ordered_json(*tc) : nlohmann::ordered_json(nullptr);
      }
      return Outcome{{{out, j.dump(2) + "\n"}}, 1};
    };
  }
};

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Generalized Dicke model with quantized atomic motion"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file; flags override its values");
  app.allow_config_extras(CLI::config_extras_mode::error);

  FreeEnergyCmd free_energy;
  BandsCmd bands;
  PhaseDiagramCmd phase;
  CriticalCmd coupling(Axis::lambda, "lambda", "lambda_c");
  CriticalCmd temperature(Axis::T, "T", "T_c");
  DensityCmd density;
  AdiabaticCmd adiabatic;
  AsymptoticsCmd asymptotics;
  BaselineCmd base;

  std::vector<std::pair<CLI::App*, std::function<Job()>>> commands;
  auto add = [&](const char* name, const char* help, auto& cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    cmd.attach(sub);
    commands.emplace_back(sub, [&cmd] { return cmd.prepare(); });
  };
  add("free-energy", "Free energy per particle on an intensity grid", free_energy);
  add("bands", "Bloch bands of the standing-wave geometry", bands);
  add("phase-diagram", "Scaled intensity and phase on a two-parameter grid", phase);
  add("critical-coupling", "Critical couplings along a parameter sweep", coupling);
  add("critical-temperature", "Critical temperatures along a parameter sweep", temperature);
  add("density", "Thermal atomic density at the saddle point", density);
  add("adiabatic-check", "Size of the non-adiabatic corrections", adiabatic);
  add("asymptotics", "Large-intensity slope of ln g2", asymptotics);
  add("baseline", "Critical point of the standard Dicke model", base);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  for (auto& [sub, prepare] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    Job job;
    try {
      job = prepare();
    } catch (const ConfigError& e) {
      std::cerr << "error: " << name << ": " << e.what() << "\n";
      return kExitConfig;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = job();
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kExitNumerical;
    }
    try {
      for (const auto& f : outcome.files) write_atomically(f);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitNumerical;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[256];
    std::snprintf(line, sizeof line, "dicke %s: %zu points, %.2f s -> %s\n", name.c_str(),
                  outcome.points, secs, outcome.files.front().path.c_str());
    std::cerr << line;
    return kExitOk;
  }
  return kExitConfig;
}

}  // namespace dicke::cli
