#pragma once

namespace wallosc::specfun {

/// Truncation control for the confluent hypergeometric series.
struct SeriesControl {
  double rel_tol = 1e-15; ///< stop once |next term| < rel_tol * |partial sum|
  int max_terms = 500;    ///< term budget before NonConvergence
};

/// 1/Gamma(x). Entire in x: the poles of Gamma at 0, -1, -2, ... map to
/// exact zeros, which the characteristic equation relies on at q0 = 0.
double recip_gamma(double x);

/// Error function, odd by construction: erf(-x) == -erf(x) bit for bit.
double erf(double x);

/// Kummer confluent hypergeometric function F(a|c|z) by direct power-series
/// summation. Terminates exactly when a is a non-positive integer.
/// Throws DomainError if c is a non-positive integer, NonConvergence if the
/// term budget runs out first. All library uses have z >= 0.
double kummer_m(double a, double c, double z, const SeriesControl& ctl = {});

/// Weber (parabolic cylinder) function D_m(z), the solution of
/// D'' + (m + 1/2 - z^2/4) D = 0 that decays as z -> +inf, assembled as
///   2^{m/2} sqrt(pi) e^{-z^2/4} [ recip_gamma((1-m)/2) F(-m/2 | 1/2 | z^2/2)
///       - sqrt(2) z recip_gamma(-m/2) F((1-m)/2 | 3/2 | z^2/2) ].
double weber_d(double m, double z, const SeriesControl& ctl = {});

/// dD_m/dz, by term-wise differentiation of the same series combination
/// (uses dF(a|c|w)/dw = (a/c) F(a+1|c+1|w)); no finite differences.
double weber_d_dz(double m, double z, const SeriesControl& ctl = {});

/// Physicists' Hermite polynomial H_n(x) via the three-term recurrence
/// (H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}).
double hermite(int n, double x);

/// Half-line Gaussian moment M_n(q0) = integral_{-q0}^{inf} q^n e^{-q^2} dq,
/// by the closed-form recursion
///   M_n = (-q0)^{n-1} e^{-q0^2} / 2 + (n-1)/2 * M_{n-2},
///   M_0 = sqrt(pi)/2 (1 + erf q0),  M_1 = e^{-q0^2} / 2.
/// Requires n >= 0 and q0 >= 0 (DomainError otherwise).
double half_gaussian_moment(int n, double q0);

/// Extended-precision variant used by the Ritz matrix assembly, where the
/// 1e-12 absolute agreement with quadrature leaves no double-rounding slack.
long double half_gaussian_moment_ld(int n, long double q0);

} // namespace wallosc::specfun
