#include "tridiagonal.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicke/core.hpp"

namespace dicke::detail {

namespace {

constexpr std::size_t kBisectionLimit = 3;

void check_shape(std::span<const double> diag, std::span<const double> offdiag) {
  if (diag.empty()) throw DomainError("empty tridiagonal matrix");
  if (offdiag.size() + 1 != diag.size()) {
    throw DomainError("tridiagonal off-diagonal has wrong length");
  }
}

// Gershgorin bounds, used to turn "below upper" into a finite (vl, vu] window.
double gershgorin_lower(std::span<const double> d, std::span<const double> e) {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < d.size()) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
  }
  return lo;
}

}  // namespace

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> offdiag, std::size_t count) {
  check_shape(diag, offdiag);
  const lapack_int n = static_cast<lapack_int>(diag.size());
  const lapack_int iu = static_cast<lapack_int>(std::min(count, diag.size()));
  if (iu == 0) return {};

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(offdiag.begin(), offdiag.end());
  e.push_back(0.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  lapack_int m = 0;
  // Bisection costs about as much per eigenvalue as the full root-free QR
  // costs for the whole spectrum of these small chains, so switch early.
  if (static_cast<std::size_t>(iu) > kBisectionLimit) {
    e.pop_back();
    const lapack_int info = LAPACKE_dsterf(n, d.data(), e.data());
    if (info != 0) throw NumericalError("dsterf failed with info " + std::to_string(info));
    d.resize(static_cast<std::size_t>(iu));
    return d;
  }
  double dummy_z = 0.0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, iu, 0.0,
                     &m, w.data(), &dummy_z, 1, isuppz.data());
  if (info != 0) throw NumericalError("dstevr failed with info " + std::to_string(info));
  w.resize(static_cast<std::size_t>(m));
  return w;
}

TridiagonalEigenpairs eigenpairs_below(std::span<const double> diag,
                                       std::span<const double> offdiag, double upper) {
  check_shape(diag, offdiag);
  const lapack_int n = static_cast<lapack_int>(diag.size());
  const double lower = gershgorin_lower(diag, offdiag) - 1.0;
  TridiagonalEigenpairs out;
  if (!(upper > lower)) return out;

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(offdiag.begin(), offdiag.end());
  e.push_back(0.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  lapack_int m = 0;

  // Count first so the eigenvector workspace is sized to the window, not n x n.
  {
    std::vector<double> d2 = d, e2 = e;
    double dummy_z = 0.0;
    const lapack_int info =
        LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'V', n, d2.data(), e2.data(), lower, upper, 0, 0,
                       0.0, &m, w.data(), &dummy_z, 1, isuppz.data());
    if (info != 0) throw NumericalError("dstevr failed with info " + std::to_string(info));
  }
  if (m == 0) return out;

  const lapack_int want = m;
  std::vector<double> z(static_cast<std::size_t>(n) * static_cast<std::size_t>(want + 1));
  std::vector<double> w2(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0,
                                         0.0, 1, want, 0.0, &m, w2.data(), z.data(), n,
                                         isuppz.data());
  if (info != 0) throw NumericalError("dstevr failed with info " + std::to_string(info));

  for (lapack_int k = 0; k < m; ++k) {
    if (!(w2[static_cast<std::size_t>(k)] < upper)) break;
    out.values.push_back(w2[static_cast<std::size_t>(k)]);
    const auto first = z.begin() + static_cast<std::ptrdiff_t>(k) * n;
    out.vectors.emplace_back(first, first + n);
  }
  return out;
}

}  // namespace dicke::detail
