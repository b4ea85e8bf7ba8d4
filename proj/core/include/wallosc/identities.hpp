#pragma once

#include <utility>

#include "wallosc/spectrum.hpp"

namespace wallosc::identities {

/// Observables with closed-form expectation rules for a bound state:
/// Q and Q2 are the position moments; D2 is the second-derivative operator,
/// whose expectation is computed as -integral of phi'^2 (the wall condition
/// phi(-q0) = 0 kills the boundary term of the integration by parts).
enum class Observable { Q, Q2, D2 };

enum class IdentityTag { Virial, Hypervirial, BoundaryDerivative };

/// Both sides of one exact relation evaluated independently.
/// residual = |lhs - rhs| exactly.
struct IdentityReport {
  int n = 0;
  double q0 = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  IdentityTag identity_tag = IdentityTag::Virial;
};

/// Expectation value of the observable in the given normalized bound state,
/// by Gauss-Legendre quadrature over the support of the state.
double expectation(const spectrum::EigenSolution& sol,
                   const spectrum::WellConfig& cfg, Observable observable);

/// Sensitivity of the n-th eigenvalue to the wall position, in closed form:
/// d epsilon / d q0 = -1/2 phi_n'(-q0)^2 for the normalized eigenfunction.
/// Always strictly negative: pushing the wall outward lowers every level.
double depsilon_dq0(int n, const spectrum::WellConfig& cfg);

/// Central finite difference [eps_n(q0+h) - eps_n(q0-h)] / (2h) on the exact
/// solver, used as the independent cross-check of depsilon_dq0.
/// Requires h < q0 and q0 + h within the solver's supported range.
double depsilon_dq0_fd(int n, const spectrum::WellConfig& cfg, double h = 1e-4);

/// Virial of the wall force: lhs = <D^2> + <q^2>, rhs = q0 * d epsilon/d q0.
IdentityReport check_virial(int n, const spectrum::WellConfig& cfg);

/// Wall-asymmetry relation: lhs = <q>, rhs = -d epsilon/d q0 (> 0 for every
/// finite q0: the repulsive wall shifts the state outward).
IdentityReport check_hypervirial(int n, const spectrum::WellConfig& cfg);

/// Boundary-derivative formula against its finite-difference cross-check:
/// lhs = analytic d epsilon/d q0, rhs = central difference of the solved
/// eigenvalue. Requires 0 < h < q0.
IdentityReport boundary_derivative_report(int n, const spectrum::WellConfig& cfg,
                                          double h = 1e-4);

/// Consistency checks on states built from Hermite functions restricted to
/// [b, inf) with b one of the zeros of H_n (ascending, 0-based zero_index;
/// n in {1, 2}): phi = N H_n(x) e^{-x^2/2} is then an exact eigenfunction of
/// the wall-at-b problem, and two boundary identities must hold:
///   first:  integral of (phi'^2 - x^2 phi^2)  =  -1/2 b phi'(b)^2  (virial)
///   second: integral of x phi^2               =  +1/2 phi'(b)^2    (hypervirial)
/// The reports store q0 = -b (the wall-coordinate convention of the rest of
/// the module) and n = the Hermite index.
std::pair<IdentityReport, IdentityReport> hermite_zero_check(int n,
                                                             int zero_index);

} // namespace wallosc::identities
