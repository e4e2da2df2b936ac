#include "dicke/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dicke/gaussian_well.hpp"
#include "dicke/parallel.hpp"

namespace dicke::thermo {

// ------------------------------------------------------------------- names

std::string_view to_string(Phase ph) {
  return ph == Phase::normal ? "normal" : "superradiant";
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::first: return "first";
    case Order::second: return "second";
    case Order::crossover: return "crossover";
  }
  return "crossover";
}

std::string_view to_string(Geometry g) {
  return g == Geometry::gaussian ? "gaussian" : "standing-wave";
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::lambda: return "lambda";
    case Axis::omega: return "omega";
    case Axis::Omega: return "Omega";
    case Axis::T: return "T";
    case Axis::delta_x: return "delta_x";
  }
  return "lambda";
}

Geometry parse_geometry(std::string_view s) {
  if (s == "gaussian") return Geometry::gaussian;
  if (s == "standing-wave" || s == "standing_wave") return Geometry::standing_wave;
  throw DomainError("unknown geometry '" + std::string(s) + "'");
}

Axis parse_axis(std::string_view s) {
  if (s == "lambda") return Axis::lambda;
  if (s == "omega") return Axis::omega;
  if (s == "Omega") return Axis::Omega;
  if (s == "T") return Axis::T;
  if (s == "delta_x" || s == "dx") return Axis::delta_x;
  throw DomainError("unknown axis '" + std::string(s) + "'");
}

// ------------------------------------------------------------- maximization

namespace {

struct Sample {
  double y;
  double f;
};

double checked(const FreeEnergy& f, double y) {
  const double v = f(y);
  if (!std::isfinite(v)) throw NumericalError("free energy is not finite");
  return v;
}

bool increasing_at(const FreeEnergy& f, double floor, double cap) {
  const double d = 1e-3 * (cap - floor);
  return checked(f, cap) > checked(f, cap - d);
}

std::vector<double> scan_grid(double floor, double cap, std::size_t n,
                              const std::vector<double>& breaks) {
  n = std::max<std::size_t>(n, 8);
  const std::size_t n_lin = n / 2;
  const std::size_t n_log = n - n_lin;
  const double span = cap - floor;
  std::vector<double> y;
  y.reserve(n + breaks.size() + 1);
  for (std::size_t i = 0; i < n_lin; ++i)
    y.push_back(floor + span * static_cast<double>(i) / static_cast<double>(n_lin - 1));
  // Geometric in y - floor, from 1e-6 span up to span.
  for (std::size_t j = 0; j < n_log; ++j) {
    const double e = -6.0 + 6.0 * static_cast<double>(j) / static_cast<double>(n_log - 1);
    y.push_back(floor + span * std::pow(10.0, e));
  }
  for (double b : breaks)
    if (b > floor && b <= cap) y.push_back(b);
  y.push_back(floor);
  y.push_back(cap);
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  while (!y.empty() && y.back() > cap) y.pop_back();
  return y;
}

// Best evaluated point of a golden-section search on [a, b]; exact ties go to
// the smaller y.
Sample golden(const FreeEnergy& f, double a, double b, double tol, Sample best) {
  constexpr double g = 0.6180339887498949;
  auto keep = [&](double y, double v) {
    if (v > best.f || (v == best.f && y < best.y)) best = {y, v};
  };
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = checked(f, c);
  double fd = checked(f, d);
  keep(c, fc);
  keep(d, fd);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = checked(f, c);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = checked(f, d);
      keep(d, fd);
    }
  }
  return best;
}

}  // namespace

IntensityResult maximize_intensity(const Landscape& L, const MaximizeOptions& opt) {
  if (!L.f) throw DomainError("free energy handle is empty");
  if (!std::isfinite(L.floor) || L.floor < 0.0) throw DomainError("floor must be finite and >= 0");
  if (!(L.y_cap > L.floor)) throw DomainError("y_cap must exceed the floor");

  double cap = L.y_cap;
  for (int k = 0; increasing_at(L.f, L.floor, cap); ++k) {
    if (!L.auto_cap || k >= opt.max_cap_doublings)
      throw NumericalError("cap too small; f unbounded in window");
    cap = L.floor + 2.0 * (cap - L.floor);
  }

  std::vector<double> breaks;
  if (L.breakpoints) breaks = L.breakpoints(L.floor, cap);
  const auto y = scan_grid(L.floor, cap, opt.scan_points, breaks);
  std::vector<double> fv(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) fv[i] = checked(L.f, y[i]);

  const double tol = opt.y_rel_tol * std::max(1.0, cap);
  const std::size_t last = y.size() - 1;
  std::vector<Sample> peaks;
  for (std::size_t i = 0; i <= last; ++i) {
    const bool left_ok = i == 0 || fv[i] > fv[i - 1];
    const bool right_ok = i == last || fv[i] >= fv[i + 1];
    if (!left_ok || !right_ok) continue;
    double lo = i == 0 ? y[i] : y[i - 1];
    double hi = i == last ? y[i] : y[i + 1];
    // Stay on the smooth segment that contains y[i].
    for (double b : breaks) {
      if (b <= y[i]) lo = std::max(lo, b);
      if (b > y[i]) hi = std::min(hi, b);
    }
    Sample s{y[i], fv[i]};
    if (hi - lo > tol) s = golden(L.f, lo, hi, tol, s);
    peaks.push_back(s);
  }
  if (peaks.empty()) throw NumericalError("no maximum found on the scan grid");

  std::sort(peaks.begin(), peaks.end(), [](const Sample& a, const Sample& b) { return a.y < b.y; });
  Sample best = peaks.front();
  for (const auto& s : peaks)
    if (s.f > best.f + opt.tie_tol) best = s;

  IntensityResult r;
  r.I = best.y;
  r.f_max = best.f;
  r.floor = L.floor;
  r.y_cap = cap;
  r.phase = best.y <= L.floor + tol ? Phase::normal : Phase::superradiant;
  return r;
}

IntensityResult maximize_intensity(const FreeEnergy& f, double floor, double y_cap,
                                   const MaximizeOptions& opt) {
  Landscape L;
  L.f = f;
  L.floor = floor;
  L.y_cap = y_cap;
  return maximize_intensity(L, opt);
}

// ------------------------------------------------------------- transitions

namespace {

void require_monotone(std::span<const double> s, std::size_t min_points) {
  if (s.size() < min_points)
    throw DomainError("sweep needs at least " + std::to_string(min_points) + " points");
  for (double v : s)
    if (!std::isfinite(v)) throw DomainError("sweep value is not finite");
  const bool up = s[1] > s[0];
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (up ? !(s[i] > s[i - 1]) : !(s[i] < s[i - 1])) throw DomainError("non-monotone sweep");
  }
}

bool is_jump(double a, double b, double jump_tol) {
  return std::abs(b - a) > jump_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool resolved(double a, double b, double resolution) {
  return std::abs(b - a) <= resolution * std::max({std::abs(a), std::abs(b), 1e-300});
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

// Memoized I(parameter); the sweep values are seeded up front.
class CurveCache {
 public:
  explicit CurveCache(const IntensityCurve& c) : curve_(c) {}
  void seed(double s, double I) { memo_.emplace(s, I); }
  double operator()(double s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    const double I = curve_(s).I;
    memo_.emplace(s, I);
    return I;
  }

 private:
  const IntensityCurve& curve_;
  std::map<double, double> memo_;
};

constexpr double kKinkPersistence = 0.75;

struct Bracket {
  std::size_t lo;
  std::size_t hi;
};

}  // namespace

std::vector<TransitionPoint> classify_transitions(const IntensityCurve& curve,
                                                  std::span<const double> sweep,
                                                  std::span<const double> I,
                                                  const ScanOptions& opt) {
  require_monotone(sweep, 8);
  if (I.size() != sweep.size()) throw DomainError("intensity and sweep sizes differ");
  const std::size_t n = sweep.size();

  CurveCache eval(curve);
  for (std::size_t i = 0; i < n; ++i) eval.seed(sweep[i], I[i]);

  std::vector<TransitionPoint> out;
  std::vector<Bracket> candidates;

  // First order: a relative jump between neighbours that survives bisection
  // down to the resolution. A steep but continuous stretch loses its gap
  // after a few halvings and is left to the kink statistic.
  std::vector<bool> jump(n - 1, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!is_jump(I[i], I[i + 1], opt.jump_tol)) continue;
    double a = sweep[i], b = sweep[i + 1];
    double Ia = I[i], Ib = I[i + 1];
    while (!resolved(a, b, opt.resolution) && is_jump(Ia, Ib, opt.jump_tol)) {
      const double m = 0.5 * (a + b);
      const double Im = eval(m);
      if (std::abs(Im - Ia) <= std::abs(Im - Ib)) {
        a = m;
        Ia = Im;
      } else {
        b = m;
        Ib = Im;
      }
    }
    if (is_jump(Ia, Ib, opt.jump_tol)) {
      jump[i] = true;
      out.push_back({0.5 * (a + b), Order::first, Ia, Ib, a, b});
    }
  }

  // Second-order candidates: slope changes well above the sweep's typical one.
  auto slope = [&](std::size_t i) { return (I[i + 1] - I[i]) / (sweep[i + 1] - sweep[i]); };
  std::vector<double> stat(n, 0.0);
  std::vector<bool> valid(n, false);
  std::vector<double> pool;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (jump[i - 1] || jump[i]) continue;
    valid[i] = true;
    stat[i] = std::abs(slope(i) - slope(i - 1));
    pool.push_back(stat[i]);
  }
  const double threshold = std::max(opt.kink_factor * median(pool), opt.kink_floor);
  // A kink strictly between two nodes splits its slope change over both, in
  // proportion to where it falls; their sum recovers it. Smooth curvature only
  // doubles.
  auto strength = [&](std::size_t i, std::size_t last) {
    if (!valid[i]) return 0.0;
    const bool pair = i + 1 <= last && i + 2 < n && valid[i + 1];
    return pair ? stat[i] + stat[i + 1] : stat[i];
  };
  for (std::size_t i = 1; i + 1 < n;) {
    if (!(strength(i, n) > threshold)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 2 < n && strength(j + 1, n) > threshold) ++j;
    candidates.push_back({i - 1, j + 1});
    i = j + 1;
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Bracket& x, const Bracket& y) { return x.lo < y.lo; });
  std::vector<Bracket> merged;
  for (const auto& c : candidates) {
    if (!merged.empty() && c.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, c.hi);
    else
      merged.push_back(c);
  }

  for (const auto& c : merged) {
    // Stay on the jump-free stretch of the sweep holding the bracket, so a
    // kink next to a jump is not pulled onto the jump.
    std::size_t L = c.lo, R = c.hi;
    while (L > 0 && !jump[L - 1]) --L;
    while (R + 1 < n && !jump[R]) ++R;
    const double seg_min = std::min(sweep[L], sweep[R]);
    const double seg_max = std::max(sweep[L], sweep[R]);
    auto inside = [&](double s) { return std::clamp(s, seg_min, seg_max); };
    double lo = std::min(sweep[c.lo], sweep[c.hi]);
    double hi = std::max(sweep[c.lo], sweep[c.hi]);
    // Shrink onto the node with the largest slope change among five interior
    // nodes, using one extra point beyond each end so the kink may also sit
    // at the bracket edge.
    while (!resolved(lo, hi, opt.resolution)) {
      const double h = 0.25 * (hi - lo);
      double x[7], v[7];
      bool ok[7];
      for (int j = 0; j < 7; ++j) {
        x[j] = lo + h * (j - 1);
        ok[j] = x[j] >= seg_min && x[j] <= seg_max;
        if (ok[j]) v[j] = eval(x[j]);
      }
      int best = 2;
      double best_s = -1.0;
      for (int j = 1; j <= 5; ++j) {
        if (!ok[j - 1] || !ok[j + 1]) continue;
        const double sj = std::abs((v[j + 1] - v[j]) - (v[j] - v[j - 1])) / h;
        if (sj > best_s) {
          best_s = sj;
          best = j;
        }
      }
      lo = x[best] - h;
      hi = x[best] + h;
    }
    const double a = sweep[1] > sweep[0] ? lo : hi;
    const double b = sweep[1] > sweep[0] ? hi : lo;
    // Confirm by halving the spacing around the located point.
    const double centre = 0.5 * (lo + hi);
    const double h = std::abs(sweep[c.lo + 1] - sweep[c.lo]);
    auto corner = [&](double step) {
      const double xl = inside(centre - step), xr = inside(centre + step);
      if (xl == centre || xr == centre) return 0.0;
      const double Ic = eval(centre);
      return std::abs((eval(xr) - Ic) / (xr - centre) - (Ic - eval(xl)) / (centre - xl));
    };
    const double refined = corner(0.5 * h);
    const double Ia = eval(a), Ib = eval(b);
    if (is_jump(Ia, Ib, opt.jump_tol)) {
      out.push_back({centre, Order::first, Ia, Ib, a, b});
    } else {
      // Smooth curvature halves with the spacing; a kink keeps its full slope
      // change.
      const double coarse = corner(h);
      const bool kink = refined > threshold && refined >= kKinkPersistence * coarse;
      out.push_back({centre, kink ? Order::second : Order::crossover, Ia, Ib, a, b});
    }
  }

  const bool up = sweep[1] > sweep[0];
  std::sort(out.begin(), out.end(), [up](const TransitionPoint& x, const TransitionPoint& y) {
    return up ? x.parameter < y.parameter : x.parameter > y.parameter;
  });
  // A kink bracket next to a jump can converge onto the jump itself.
  std::vector<TransitionPoint> unique;
  for (const auto& t : out) {
    if (!unique.empty() && resolved(unique.back().parameter, t.parameter, 4.0 * opt.resolution)) {
      if (t.order == Order::first) unique.back() = t;
      continue;
    }
    unique.push_back(t);
  }
  return unique;
}

std::vector<TransitionPoint> scan_transition(const IntensityCurve& curve,
                                             std::span<const double> sweep,
                                             const ScanOptions& opt) {
  require_monotone(sweep, 8);
  std::vector<double> I(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) I[i] = curve(sweep[i]).I;
  return classify_transitions(curve, sweep, I, opt);
}

// --------------------------------------------------------------- model level

double default_y_cap(const ModelParams& p) {
  const double bw = p.beta() * p.omega;
  const double ratio = p.lambda / p.omega;
  return 50.0 * std::max(1.0, 1.0 / (bw * bw)) * std::max(1.0, ratio * ratio);
}

ModelParams with_axis(ModelParams p, Axis axis, double value) {
  switch (axis) {
    case Axis::lambda: p.lambda = value; break;
    case Axis::omega: p.omega = value; break;
    case Axis::Omega: p.Omega = value; break;
    case Axis::T: p.T = value; break;
    case Axis::delta_x: p.delta_x = value; break;
  }
  return p;
}

Landscape make_landscape(Geometry g, const ModelParams& p, const SolverConfig& cfg) {
  p.validate();
  Landscape L;
  L.auto_cap = !(cfg.y_cap > 0.0);
  double cap = L.auto_cap ? default_y_cap(p) : cfg.y_cap;
  if (g == Geometry::gaussian) {
    L.floor = gaussian::minimum_intensity(p);
    if (!(cap > L.floor)) {
      if (!L.auto_cap) throw DomainError("y_cap below the pump floor");
      cap = 2.0 * L.floor;
    }
    L.f = [p](double y) { return gaussian::f1(p, y); };
    L.breakpoints = [p](double lo, double hi) { return gaussian::level_thresholds(p, lo, hi); };
  } else {
    cfg.bands.validate();
    L.floor = 0.0;
    const auto bands = cfg.bands;
    L.f = [p, bands](double y) { return standing_wave::f2(p, y, bands); };
  }
  L.y_cap = cap;
  return L;
}

IntensityResult solve_intensity(Geometry g, const ModelParams& p, const SolverConfig& cfg) {
  return maximize_intensity(make_landscape(g, p, cfg), cfg.maximize);
}

std::size_t bound_count_at(Geometry g, const ModelParams& p, double y) {
  if (g != Geometry::gaussian) return 0;
  return gaussian::bound_count(gaussian::well_params(p, y));
}

IntensityCurve intensity_curve(Geometry g, const ModelParams& base, Axis axis,
                               const SolverConfig& cfg) {
  return [g, base, axis, cfg](double v) { return solve_intensity(g, with_axis(base, axis, v), cfg); };
}

std::vector<TransitionPoint> critical_points(Geometry g, const ModelParams& base, Axis axis,
                                             std::span<const double> sweep,
                                             const SolverConfig& cfg) {
  require_monotone(sweep, 2);
  for (double v : sweep)
    if (!(v > 0.0)) throw DomainError(std::string(to_string(axis)) + " range must be positive");

  const auto curve = intensity_curve(g, base, axis, cfg);
  std::vector<IntensityResult> res(sweep.size());
  parallel_for(sweep.size(), cfg.workers, [&](std::size_t i) { res[i] = curve(sweep[i]); });

  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
    if (res[i].phase != res[i + 1].phase) changes.push_back(i);

  std::vector<TransitionPoint> out(changes.size());
  parallel_for(changes.size(), cfg.workers, [&](std::size_t k) {
    const std::size_t i = changes[k];
    double a = sweep[i], b = sweep[i + 1];
    IntensityResult ra = res[i], rb = res[i + 1];
    while (!resolved(a, b, cfg.scan.resolution)) {
      const double m = 0.5 * (a + b);
      const auto rm = curve(m);
      if (rm.phase == ra.phase) {
        a = m;
        ra = rm;
      } else {
        b = m;
        rb = rm;
      }
    }
    const Order order = is_jump(ra.I, rb.I, cfg.scan.jump_tol) ? Order::first : Order::second;
    out[k] = {0.5 * (a + b), order, ra.I, rb.I, a, b};
  });
  return out;
}

std::vector<TransitionPoint> critical_coupling(Geometry g, const ModelParams& base,
                                               std::span<const double> lambdas,
                                               const SolverConfig& cfg) {
  return critical_points(g, base, Axis::lambda, lambdas, cfg);
}

std::vector<TransitionPoint> critical_temperature(Geometry g, const ModelParams& base,
                                                  std::span<const double> temperatures,
                                                  const SolverConfig& cfg) {
  return critical_points(g, base, Axis::T, temperatures, cfg);
}

PhaseDiagram phase_diagram(Geometry g, const AxisSpec& axis1, const AxisSpec& axis2,
                           const ModelParams& fixed, const SolverConfig& cfg) {
  if (axis1.values.size() < 8 || axis2.values.size() < 8)
    throw DomainError("phase diagram needs at least 8 points per axis");
  if (axis1.axis == axis2.axis) throw DomainError("phase diagram axes must differ");
  require_monotone(axis1.values, 8);
  require_monotone(axis2.values, 8);

  PhaseDiagram d;
  d.geometry = g;
  d.axis1 = axis1;
  d.axis2 = axis2;
  const std::size_t rows = d.rows(), cols = d.cols();
  d.cells.resize(rows * cols);
  if (g == Geometry::gaussian) d.bound_count.resize(rows * cols);

  parallel_for(rows * cols, cfg.workers, [&](std::size_t idx) {
    const std::size_t r = idx / cols, c = idx % cols;
    const auto p = with_axis(with_axis(fixed, axis1.axis, axis1.values[c]), axis2.axis,
                             axis2.values[r]);
    d.cells[idx] = solve_intensity(g, p, cfg);
    if (g == Geometry::gaussian) d.bound_count[idx] = bound_count_at(g, p, d.cells[idx].I);
  });

  d.transitions.resize(rows);
  parallel_for(rows, cfg.workers, [&](std::size_t r) {
    const auto row_base = with_axis(fixed, axis2.axis, axis2.values[r]);
    std::vector<double> I(cols);
    for (std::size_t c = 0; c < cols; ++c) I[c] = d.at(r, c).I;
    d.transitions[r] =
        classify_transitions(intensity_curve(g, row_base, axis1.axis, cfg), axis1.values, I,
                             cfg.scan);
  });
  return d;
}

}  // namespace dicke::thermo
