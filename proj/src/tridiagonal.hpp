#pragma once

// Thin wrappers over LAPACK's tridiagonal eigensolvers (dstevr, dsterf).

#include <cstddef>
#include <span>
#include <vector>

namespace dicke::detail {

/// The `count` lowest eigenvalues of a real symmetric tridiagonal matrix,
/// ascending. `offdiag` has size diag.size() - 1. `count` larger than the
/// dimension returns the whole spectrum.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count);

struct TridiagonalEigenpairs {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // unit 2-norm, one per value
};

/// All eigenpairs with eigenvalue strictly below `upper`.
TridiagonalEigenpairs eigenpairs_below(std::span<const double> diag,
                                       std::span<const double> offdiag, double upper);

}  // namespace dicke::detail
