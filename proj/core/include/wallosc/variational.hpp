#pragma once

#include <vector>

#include <Eigen/Dense>

namespace wallosc::variational {

/// Rayleigh-Ritz problem in the non-orthogonal basis
/// f_j(q) = (q + q0) q^j e^{-q^2/2}, j = 0..N-1, on [-q0, inf).
/// The (q + q0) factor enforces the wall condition f_j(-q0) = 0.
///
/// Invariants: 1 <= basis_size <= 20. Beyond N = 20 the monomial-times-
/// Gaussian basis is numerically dependent and the overlap conditioning
/// check would reject it anyway.
struct RitzProblem {
  int basis_size = 1;
  double q0 = 0.0;
};

/// Result of the generalized secular problem H c = w S c.
///
/// `values` holds the N roots w_0^[N] .. w_{N-1}^[N] ascending (units of the
/// oscillator quantum); each is an upper bound to the corresponding exact
/// eigenvalue. Column n of `coefficients` holds the expansion coefficients
/// c_j of root n, normalized so that c^T S c = 1. `overlap_condition` is the
/// spectral condition number of S.
struct RitzResult {
  std::vector<double> values;
  Eigen::MatrixXd coefficients;
  double overlap_condition = 0.0;
};

/// Basis function f_j(q) = (q + q0) q^j e^{-q^2/2}.
double basis_function(int j, double q0, double q);

/// Overlap matrix S_ij = integral of f_i f_j over [-q0, inf), evaluated in
/// closed form: expanding (q + q0)^2 q^{i+j} e^{-q^2} reduces every entry to
/// half-Gaussian moments, S_ij = M_{i+j+2} + 2 q0 M_{i+j+1} + q0^2 M_{i+j}.
/// Symmetric positive definite by construction.
///
/// Throws IllConditioned if the spectral condition number exceeds 1e12
/// (the basis is too large to be numerically independent).
Eigen::MatrixXd overlap_matrix(const RitzProblem& p);

/// Hamiltonian matrix in the manifestly symmetric form
/// H_ij = integral of [ 1/2 f_i' f_j' + 1/2 q^2 f_i f_j ] over [-q0, inf),
/// equal to the operator form f_i (-1/2 d^2/dq^2 + q^2/2) f_j because
/// f(-q0) = 0 and the Gaussian decay kill the boundary terms. Reduced to
/// half-Gaussian moments of order up to i + j + 4.
Eigen::MatrixXd hamiltonian_matrix(const RitzProblem& p);

/// Solves the symmetric-definite generalized eigenproblem H c = w S c by
/// factoring S and reducing to a standard symmetric problem. Returns all N
/// roots ascending with their coefficient vectors.
///
/// Throws IllConditioned if the overlap matrix fails its conditioning check.
RitzResult ritz_values(const RitzProblem& p);

} // namespace wallosc::variational
