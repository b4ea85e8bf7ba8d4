#pragma once

#include <algorithm>
#include <cmath>

namespace wallosc::detail {

// Right edge of the q-interval on which the double-precision Weber series
// still dominates its own round-off. The two Kummer terms of the bracket
// grow like e^{q^2} while their difference D_m(sqrt(2) q) decays like
// q^m e^{-q^2/2}; round-off eps*e^{q^2/2} overtakes the true value near
// q^2 = ln(1/eps) + m ln q, i.e. q ~ sqrt(36.5 + 2.2 m). Past that point
// evaluations carry no information. The true integrand q^{2m} e^{-q^2}
// left outside the window contributes < 1e-12 relative for every order the
// library reaches (m <= 13), so quadratures on [-q0, trust] are exact to
// working precision while quadratures on the nominal [-q0, q0+12] would
// integrate exponentially large noise.
inline double weber_trust_limit(double weber_order) {
  return std::sqrt(36.5 + 2.5 * std::max(0.0, weber_order));
}

inline double integration_upper(double weber_order, double q0) {
  return std::min(q0 + 12.0, weber_trust_limit(weber_order));
}

} // namespace wallosc::detail
