#pragma once

#include <vector>

#include "wallosc/specfun.hpp"

namespace wallosc::spectrum {

/// The dimensionless problem instance: a harmonic well with a hard wall at
/// q = -q0, where q0 >= 0 is the wall-to-minimum distance in units of L.
struct WellConfig {
  double q0 = 0.0;
};

/// One bound state. Energies are in units of hbar*omega.
struct EigenSolution {
  int n = 0;              ///< quantum number (ascending-root index)
  double epsilon = 0.0;   ///< energy; n + 1/2 < epsilon <= 2n + 3/2
  double weber_order = 0.0; ///< m = epsilon - 1/2, the Weber-function order
  double norm = 0.0;      ///< positive normalization constant
  int node_count = 0;     ///< interior zeros of the eigenfunction (= n)
};

/// Left-hand side of the characteristic equation whose roots in m give the
/// spectrum (epsilon = m + 1/2):
///   recip_gamma((1-m)/2) F(-m/2 | 1/2 | q0^2)
///     + 2 q0 recip_gamma(-m/2) F((1-m)/2 | 3/2 | q0^2).
/// This is D_m(-sqrt(2) q0) without the nonvanishing exponential prefactor.
/// Throws UnsupportedRange for q0 > 4 (catastrophic cancellation in double).
double characteristic(double m, const WellConfig& cfg,
                      const specfun::SeriesControl& ctl = {});

/// The lowest n_max+1 bound states, found by one ordered scan of the
/// characteristic equation over m in (-0.4, 2 n_max + 1], step 0.02, each
/// sign change refined by bisection to |delta m| < tol. The k-th ascending
/// root is quantum number k; node counts are verified by sampling.
std::vector<EigenSolution> eigenvalues(int n_max, const WellConfig& cfg,
                                       double tol = 1e-10);

/// The n-th bound state (see eigenvalues()).
EigenSolution eigenvalue(int n, const WellConfig& cfg, double tol = 1e-10);

/// Normalized eigenfunction phi_n(q) = norm * (-1)^n * D_m(sqrt(2) q) for
/// q >= -q0 (DomainError below the wall). The parity factor fixes the sign
/// convention phi_n'(-q0) > 0 while keeping norm positive.
double eigenfunction(const EigenSolution& sol, const WellConfig& cfg, double q);

/// d(phi_n)/dq, using the analytic Weber-series derivative.
double eigenfunction_derivative(const EigenSolution& sol, const WellConfig& cfg,
                                double q);

/// Large-q0 ground-state asymptote: 1/2 + q0 e^{-q0^2} / (2 sqrt(pi)).
double asymptotic_epsilon0(const WellConfig& cfg);

/// Large-q0 first-excited asymptote:
/// 3/2 + q0 (2 q0^2 - 1) e^{-q0^2} / (2 sqrt(pi)).
double asymptotic_epsilon1(const WellConfig& cfg);

/// One row of a spectrum scan: energies and neighbor gaps at a single q0.
struct ScanRow {
  double q0 = 0.0;
  std::vector<double> epsilon; ///< epsilon_0 .. epsilon_{n_max}
  std::vector<double> gap;     ///< gap[n] = epsilon_{n+1} - epsilon_n
};

/// Spectrum over an ascending q0 grid (all points in [0, 4], n_max <= 6).
/// Rows are emitted in input order.
std::vector<ScanRow> spectrum_scan(const std::vector<double>& q0_grid, int n_max,
                                   double tol = 1e-10);

} // namespace wallosc::spectrum
