#include "dicke/tight_binding.hpp"

#include <cmath>
#include <numbers>

namespace dicke::tight_binding {

using std::numbers::pi;

double TightBindingBand::energy(double k) const { return onsite + 2.0 * hop * std::cos(k); }

double TightBindingBand::bandwidth() const { return 4.0 * std::abs(hop); }

TightBindingParams tb_params(const ModelParams& p, double y) {
  if (!std::isfinite(y) || y < 0.0) throw DomainError("negative intensity");
  const double z = p.lambda * p.lambda * y;
  if (!(z > 0.0)) throw DomainError("tight binding undefined at zero field");
  const double s = std::sqrt(0.25 * p.Omega * p.Omega + z);
  TightBindingParams tb;
  tb.A = 0.5 * p.Omega;
  tb.B = z / (s + 0.5 * p.Omega);
  tb.sigma2 = 1.0 / (2.0 * tb.B);
  return tb;
}

double dB_dy(const ModelParams& p, double y) {
  const double s = std::sqrt(0.25 * p.Omega * p.Omega + p.lambda * p.lambda * y);
  return p.lambda * p.lambda / (2.0 * s);
}

TightBindingIntegrals tb_integrals(const TightBindingParams& tb) {
  const double s2 = tb.sigma2;
  const double tunnel = std::exp(-pi * pi / (4.0 * s2));
  const double overlap = std::exp(-s2);
  const double quarter = 1.0 / (4.0 * s2);
  TightBindingIntegrals I;
  I.E0 = quarter;
  I.E1 = -(1.0 / (8.0 * s2 * s2)) * tunnel * (2.0 * s2 + pi * pi);
  // Mass factor 1/sqrt(m) is 1 in scaled units.
  I.J0_plus = tb.A + quarter * (1.0 - overlap);
  I.J0_minus = -tb.A + quarter * (1.0 + overlap);
  I.J1_plus = quarter * tunnel * overlap;
  I.J1_minus = -quarter * tunnel * overlap;
  return I;
}

TightBindingBand tb_band(const TightBindingParams& tb, Branch branch) {
  const auto I = tb_integrals(tb);
  TightBindingBand band;
  band.branch = branch;
  if (branch == Branch::plus) {
    band.onsite = I.E0 + I.J0_plus;
    band.hop = I.E1 + I.J1_plus;
  } else {
    band.onsite = I.E0 + I.J0_minus;
    band.hop = I.E1 + I.J1_minus;
  }
  return band;
}

double tb_band_energy(const TightBindingParams& tb, Branch branch, double k) {
  return tb_band(tb, branch).energy(k);
}

AsymptoticFit asymptotic_slope(const ModelParams& p, double y_lo, double y_hi,
                               const standing_wave::BandSolverConfig& cfg, std::size_t points) {
  if (!(y_hi > y_lo)) throw DomainError("degenerate fit window");
  if (points < 2) throw DomainError("fit needs at least two points");
  const auto grid = make_log_grid(y_lo, y_hi, points);

  AsymptoticFit fit;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double y : grid) {
    const double lg = standing_wave::ln_g2(p, y, cfg);
    if (!(lg > 0.0)) throw DomainError("window too small");
    fit.y.push_back(y);
    fit.ln_g2.push_back(lg);
    const double u = std::log(y);
    const double v = std::log(lg);
    sx += u;
    sy += v;
    sxx += u * u;
    sxy += u * v;
  }
  const double n = static_cast<double>(points);
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace dicke::tight_binding
