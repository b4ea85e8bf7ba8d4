#include "wallosc/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace wallosc::quad {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence, long double.
void legendre(int n, long double x, long double& p, long double& dp) {
  long double p_prev = 1.0L;
  long double p_cur = x;
  for (int k = 2; k <= n; ++k) {
    const long double p_next = ((2 * k - 1) * x * p_cur - (k - 1) * p_prev) / k;
    p_prev = p_cur;
    p_cur = p_next;
  }
  p = p_cur;
  dp = n * (x * p_cur - p_prev) / (x * x - 1.0L);
}

GaussLegendre64 build_rule64() {
  constexpr int n = 64;
  GaussLegendre64 rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n / 2; ++i) {
    // Chebyshev-angle initial guess, then Newton to machine precision.
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double p = 0.0L, dp = 0.0L;
    for (int it = 0; it < 60; ++it) {
      legendre(n, x, p, dp);
      const long double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-19L * std::abs(x))
        break;
    }
    legendre(n, x, p, dp);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.x[i] = -x;
    rule.w[i] = w;
    rule.x[n - 1 - i] = x;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

} // namespace

const GaussLegendre64& gauss_legendre64() {
  static const GaussLegendre64 rule = build_rule64();
  return rule;
}

} // namespace wallosc::quad
