#pragma once

#include <cstddef>
#include <vector>

namespace wallosc::quad {

/// Nodes and weights of the 64-point Gauss-Legendre rule on [-1, 1],
/// generated once in long double by Newton iteration on P_64.
struct GaussLegendre64 {
  std::vector<long double> x;
  std::vector<long double> w;
};

const GaussLegendre64& gauss_legendre64();

/// Composite 64-point Gauss-Legendre integration of f over [a, b] split into
/// `panels` equal panels. Spectral accuracy per panel for smooth integrands.
template <class F>
double integrate(F&& f, double a, double b, int panels) {
  const auto& rule = gauss_legendre64();
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k)
      acc += static_cast<double>(rule.w[k]) * f(mid + half * static_cast<double>(rule.x[k]));
    total += acc * half;
  }
  return total;
}

/// Long-double composite rule for the extended-precision assembly paths.
template <class F>
long double integrate_ld(F&& f, long double a, long double b, int panels) {
  const auto& rule = gauss_legendre64();
  const long double width = (b - a) / panels;
  long double total = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double lo = a + p * width;
    const long double mid = lo + 0.5L * width;
    const long double half = 0.5L * width;
    long double acc = 0.0L;
    for (std::size_t k = 0; k < rule.x.size(); ++k)
      acc += rule.w[k] * f(mid + half * rule.x[k]);
    total += acc * half;
  }
  return total;
}

} // namespace wallosc::quad
