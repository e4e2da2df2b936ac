#pragma once

// Critical point of the standard Dicke model (motionless atoms, RWA), kept as
// a reference for comparison.

#include <optional>

namespace dicke::baseline {

/// sqrt(Omega omega). Throws DomainError for non-positive input.
double standard_lambda_c(double Omega, double omega);

/// T_c = 1 / ((2 omega / Omega) artanh(Omega omega / lambda^2)), defined only
/// when Omega omega / lambda^2 < 1.
std::optional<double> standard_T_c(double Omega, double omega, double lambda);

}  // namespace dicke::baseline
