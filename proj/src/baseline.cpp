#include "dicke/baseline.hpp"

#include <cmath>

#include "dicke/core.hpp"

namespace dicke::baseline {

namespace {
void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) throw DomainError(std::string(name) + " must be > 0");
}
}  // namespace

double standard_lambda_c(double Omega, double omega) {
  require_positive(Omega, "Omega");
  require_positive(omega, "omega");
  return std::sqrt(Omega * omega);
}

std::optional<double> standard_T_c(double Omega, double omega, double lambda) {
  require_positive(Omega, "Omega");
  require_positive(omega, "omega");
  require_positive(lambda, "lambda");
  const double u = Omega * omega / (lambda * lambda);
  if (!(u < 1.0)) return std::nullopt;
  return 1.0 / ((2.0 * omega / Omega) * std::atanh(u));
}

}  // namespace dicke::baseline
