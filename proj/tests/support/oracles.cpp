#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <lapacke.h>

namespace testkit {

TwoLevelResult two_level_inversion(const dicke::ModelParams& p, double y, double L,
                                   std::size_t n) {
  const lapack_int N = static_cast<lapack_int>(2 * n);
  const lapack_int kd = 2;
  const lapack_int ldab = kd + 1;
  const double h = 2.0 * L / static_cast<double>(n + 1);
  const double t = -0.5 / (h * h);
  const double c0 = p.lambda * std::sqrt(y);

  // Column-major upper band storage: A(i, j) -> ab[kd + i - j + j * ldab].
  std::vector<double> ab(static_cast<std::size_t>(ldab) * N, 0.0);
  auto set = [&](lapack_int i, lapack_int j, double v) { ab[kd + i - j + j * ldab] = v; };
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -L + h * static_cast<double>(i + 1);
    const auto g = static_cast<lapack_int>(2 * i);
    set(g, g, 1.0 / (h * h) - 0.5 * p.Omega);
    set(g + 1, g + 1, 1.0 / (h * h) + 0.5 * p.Omega);
    set(g, g + 1, c0 * std::exp(-x * x / (p.delta_x * p.delta_x)));
    if (i + 1 < n) {
      set(g, g + 2, t);
      set(g + 1, g + 3, t);
    }
  }

  std::vector<double> q(static_cast<std::size_t>(N) * N);
  std::vector<double> w(N);
  std::vector<double> z(static_cast<std::size_t>(N) * N);
  std::vector<lapack_int> ifail(N);
  lapack_int m = 0;
  const double vl = -0.5 * p.Omega - c0 - 1.0;
  const double vu = -0.5 * p.Omega;
  const lapack_int info = LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'V', 'V', 'U', N, kd, ab.data(), ldab,
                                         q.data(), N, vl, vu, 0, 0, 0.0, &m, w.data(), z.data(),
                                         N, ifail.data());
  if (info != 0) throw std::runtime_error("dsbevx failed");

  TwoLevelResult r;
  r.bound = static_cast<std::size_t>(m);
  r.energies.assign(w.begin(), w.begin() + m);
  if (m == 0) return r;
  const double beta = p.beta();
  double zsum = 0.0;
  double wsum = 0.0;
  for (lapack_int s = 0; s < m; ++s) {
    const double b = std::exp(-beta * (w[s] - w[0]));
    double sz = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ag = z[2 * i + static_cast<std::size_t>(s) * N];
      const double ae = z[2 * i + 1 + static_cast<std::size_t>(s) * N];
      sz += ae * ae - ag * ag;
      norm += ae * ae + ag * ag;
    }
    zsum += b;
    wsum += b * sz / norm;
  }
  r.W = wsum / zsum;
  return r;
}

std::vector<double> dense_bloch_eigenvalues(double Omega, double coupling, double k, int N) {
  const int planes = 2 * N + 1;
  const int dim = 2 * planes;
  std::vector<double> a(static_cast<std::size_t>(dim) * dim, 0.0);
  auto idx = [planes](int comp, int n) { return comp * planes + (n + (planes - 1) / 2); };
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * dim + j]; };
  for (int n = -N; n <= N; ++n) {
    const double kin = 0.5 * (k + n) * (k + n);
    at(idx(0, n), idx(0, n)) = kin - 0.5 * Omega;
    at(idx(1, n), idx(1, n)) = kin + 0.5 * Omega;
    for (int d : {-1, 1}) {
      if (n + d < -N || n + d > N) continue;
      at(idx(0, n), idx(1, n + d)) = 0.5 * coupling;
      at(idx(1, n + d), idx(0, n)) = 0.5 * coupling;
    }
  }
  std::vector<double> w(dim);
  if (LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', dim, a.data(), dim, w.data()) != 0)
    throw std::runtime_error("dsyev failed");
  return w;
}

double reference_log_sum_exp(std::vector<double> x) {
  if (x.empty()) throw std::invalid_argument("empty");
  std::sort(x.begin(), x.end());
  const double top = x.back();
  double s = 0.0;
  for (double v : x) s += std::exp(v - top);
  return top + std::log(s);
}

double dense_ln_g2(const dicke::ModelParams& p, double y, int N, int k_points) {
  std::vector<double> terms;
  const double c = p.lambda * std::sqrt(y);
  const double dk = 1.0 / k_points;
  for (int i = 0; i < k_points; ++i) {
    const double k = -0.5 + dk * i;
    for (double e : dense_bloch_eigenvalues(p.Omega, c, k, N))
      terms.push_back(-p.beta() * e + std::log(dk));
  }
  return reference_log_sum_exp(std::move(terms));
}

}  // namespace testkit
