#include "wallosc/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wallosc/errors.hpp"

namespace wallosc::specfun {

namespace {

constexpr long double kSqrtPiL = 1.772453850905516027298167483341145183L;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

} // namespace

double recip_gamma(double x) {
  // Poles of Gamma at the non-positive integers must become exact zeros.
  if (is_nonpositive_integer(x))
    return 0.0;
  if (x >= 0.5)
    return 1.0 / std::tgamma(x);
  // For x < 1/2 use 1/Gamma(x) = [prod_{j>=0} (x+j)] / Gamma(x+k) with the
  // shifted argument in [0.5, 1.5). The polynomial prefactor carries the
  // sign changes and vanishes continuously at the poles, so no Gamma pole
  // is ever evaluated and no spurious overflow can occur.
  double prod = 1.0;
  double shifted = x;
  while (shifted < 0.5) {
    prod *= shifted;
    shifted += 1.0;
  }
  return prod / std::tgamma(shifted);
}

double erf(double x) { return std::erf(x); }

double kummer_m(double a, double c, double z, const SeriesControl& ctl) {
  if (is_nonpositive_integer(c))
    throw DomainError("kummer_m: c = " + std::to_string(c) +
                      " is a non-positive integer (series undefined)");
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const double ak = a + k;
    if (ak == 0.0)
      return sum; // polynomial case: every further term carries the factor (a+k) = 0
    term *= ak / (c + k) * z / (k + 1);
    sum += term;
    if (std::abs(term) < ctl.rel_tol * std::abs(sum))
      return sum;
  }
  throw NonConvergence("kummer_m: no convergence after " + std::to_string(ctl.max_terms) +
                       " terms (a=" + std::to_string(a) + ", c=" + std::to_string(c) +
                       ", z=" + std::to_string(z) + ")");
}

double weber_d(double m, double z, const SeriesControl& ctl) {
  const double w = 0.5 * z * z;
  const double g1 = recip_gamma(0.5 * (1.0 - m));
  const double g2 = recip_gamma(-0.5 * m);
  double bracket = 0.0;
  if (g1 != 0.0)
    bracket += g1 * kummer_m(-0.5 * m, 0.5, w, ctl);
  if (g2 != 0.0)
    bracket -= std::numbers::sqrt2 * z * g2 * kummer_m(0.5 * (1.0 - m), 1.5, w, ctl);
  const double prefactor =
      std::exp2(0.5 * m) * std::sqrt(std::numbers::pi) * std::exp(-0.25 * z * z);
  return prefactor * bracket;
}

double weber_d_dz(double m, double z, const SeriesControl& ctl) {
  // D = P(z) B(w), P = 2^{m/2} sqrt(pi) e^{-z^2/4}, w = z^2/2, so
  // D' = P (B'(w) z - z/2 B), with dF(a|c|w)/dw = (a/c) F(a+1|c+1|w).
  const double w = 0.5 * z * z;
  const double g1 = recip_gamma(0.5 * (1.0 - m));
  const double g2 = recip_gamma(-0.5 * m);
  const double a1 = -0.5 * m;
  const double a2 = 0.5 * (1.0 - m);
  double bracket = 0.0;
  double dbracket_dz = 0.0;
  if (g1 != 0.0) {
    bracket += g1 * kummer_m(a1, 0.5, w, ctl);
    dbracket_dz += g1 * (a1 / 0.5) * kummer_m(a1 + 1.0, 1.5, w, ctl) * z;
  }
  if (g2 != 0.0) {
    const double f2 = kummer_m(a2, 1.5, w, ctl);
    bracket -= std::numbers::sqrt2 * z * g2 * f2;
    dbracket_dz -= std::numbers::sqrt2 * g2 *
                   (f2 + z * z * (a2 / 1.5) * kummer_m(a2 + 1.0, 2.5, w, ctl));
  }
  const double prefactor =
      std::exp2(0.5 * m) * std::sqrt(std::numbers::pi) * std::exp(-0.25 * z * z);
  return prefactor * (dbracket_dz - 0.5 * z * bracket);
}

double hermite(int n, double x) {
  if (n < 0)
    throw DomainError("hermite: negative degree " + std::to_string(n));
  if (n == 0)
    return 1.0;
  double h_prev = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

long double half_gaussian_moment_ld(int n, long double q0) {
  if (n < 0)
    throw DomainError("half_gaussian_moment: negative order " + std::to_string(n));
  if (q0 < 0.0L)
    throw DomainError("half_gaussian_moment: q0 must be >= 0");
  const long double decay = std::exp(-q0 * q0);
  if (n == 0)
    return 0.5L * kSqrtPiL * (1.0L + std::erf(q0));
  if (n == 1)
    return 0.5L * decay;
  long double m = (n % 2 == 0) ? 0.5L * kSqrtPiL * (1.0L + std::erf(q0)) : 0.5L * decay;
  for (int k = 2 + (n % 2); k <= n; k += 2)
    m = 0.5L * std::pow(-q0, k - 1) * decay + 0.5L * (k - 1) * m;
  return m;
}

double half_gaussian_moment(int n, double q0) {
  return static_cast<double>(half_gaussian_moment_ld(n, static_cast<long double>(q0)));
}

} // namespace wallosc::specfun
