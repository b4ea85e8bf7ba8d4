#include "wallosc/variational.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wallosc/errors.hpp"
#include "wallosc/specfun.hpp"

namespace wallosc::variational {

namespace {

constexpr int kMaxBasis = 20;
constexpr double kConditionLimit = 1e12;

void require_valid(const RitzProblem& p) {
  if (p.basis_size < 1 || p.basis_size > kMaxBasis)
    throw DomainError("basis size must be in [1, " + std::to_string(kMaxBasis) +
                      "], got " + std::to_string(p.basis_size));
  if (!(p.q0 >= 0.0))
    throw DomainError("q0 must be >= 0, got " + std::to_string(p.q0));
}

/// Half-Gaussian moments M_0 .. M_max in one pass, in extended precision:
/// the matrix entries combine moments of opposite-sign coefficients, so the
/// assembly is kept in long double and rounded once at the end.
std::vector<long double> moment_table(double q0, int max_order) {
  std::vector<long double> m(max_order + 1);
  for (int k = 0; k <= max_order; ++k)
    m[k] = specfun::half_gaussian_moment_ld(k, q0);
  return m;
}

/// f_j'(q) = A_j(q) e^{-q^2/2} with the polynomial
/// A_j(q) = (j+1) q^j + j q0 q^{j-1} - q0 q^{j+1} - q^{j+2}.
/// Returned as (coefficient, power) pairs, zero coefficients dropped.
std::vector<std::pair<long double, int>> derivative_poly(int j, double q0) {
  std::vector<std::pair<long double, int>> terms;
  terms.emplace_back(static_cast<long double>(j + 1), j);
  if (j > 0)
    terms.emplace_back(static_cast<long double>(j) * q0, j - 1);
  if (q0 != 0.0)
    terms.emplace_back(static_cast<long double>(-q0), j + 1);
  terms.emplace_back(-1.0L, j + 2);
  return terms;
}

Eigen::MatrixXd assemble_overlap(const RitzProblem& p) {
  const int n = p.basis_size;
  const long double q0 = p.q0;
  const auto m = moment_table(p.q0, 2 * n + 2);
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int k = i + j;
      const long double value =
          m[k + 2] + 2.0L * q0 * m[k + 1] + q0 * q0 * m[k];
      s(i, j) = static_cast<double>(value);
      s(j, i) = s(i, j);
    }
  return s;
}

/// Overlap matrix plus its spectral condition number, so ritz_values can
/// report the number without diagonalizing S twice.
std::pair<Eigen::MatrixXd, double> overlap_with_condition(const RitzProblem& p) {
  Eigen::MatrixXd s = assemble_overlap(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NonConvergence("overlap-matrix eigenvalue iteration failed");
  const double smallest = es.eigenvalues()(0);
  const double largest = es.eigenvalues()(p.basis_size - 1);
  if (!(smallest > 0.0))
    throw IllConditioned("overlap matrix lost positive definiteness at N = " +
                         std::to_string(p.basis_size) +
                         "; the basis is numerically dependent");
  const double condition = largest / smallest;
  if (condition > kConditionLimit)
    throw IllConditioned("overlap condition number " +
                         std::to_string(condition) + " exceeds 1e12 at N = " +
                         std::to_string(p.basis_size) +
                         "; reduce the basis size");
  return {std::move(s), condition};
}

} // namespace

double basis_function(int j, double q0, double q) {
  if (j < 0)
    throw DomainError("basis index must be >= 0");
  return (q + q0) * std::pow(q, j) * std::exp(-0.5 * q * q);
}

Eigen::MatrixXd overlap_matrix(const RitzProblem& p) {
  require_valid(p);
  return overlap_with_condition(p).first;
}

Eigen::MatrixXd hamiltonian_matrix(const RitzProblem& p) {
  require_valid(p);
  const int n = p.basis_size;
  const long double q0 = p.q0;
  const auto m = moment_table(p.q0, 2 * n + 2);
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    const auto a_i = derivative_poly(i, p.q0);
    for (int j = i; j < n; ++j) {
      const auto a_j = derivative_poly(j, p.q0);
      // Kinetic part: 1/2 integral of A_i A_j e^{-q^2}.
      long double kinetic = 0.0L;
      for (const auto& [ci, pi] : a_i)
        for (const auto& [cj, pj] : a_j)
          kinetic += ci * cj * m[pi + pj];
      // Potential part: 1/2 integral of q^2 (q+q0)^2 q^{i+j} e^{-q^2}.
      const int k = i + j + 2;
      const long double potential =
          m[k + 2] + 2.0L * q0 * m[k + 1] + q0 * q0 * m[k];
      h(i, j) = static_cast<double>(0.5L * (kinetic + potential));
      h(j, i) = h(i, j);
    }
  }
  return h;
}

RitzResult ritz_values(const RitzProblem& p) {
  require_valid(p);
  auto [s, condition] = overlap_with_condition(p);
  const Eigen::MatrixXd h = hamiltonian_matrix(p);
  // Definite-pair reduction: factor S, transform to a standard symmetric
  // problem, back-transform the vectors. Eigen normalizes them so that
  // C^T S C = I, which is exactly the c^T S c = 1 convention.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(
      h, s, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success)
    throw NonConvergence("generalized eigenvalue iteration failed at N = " +
                         std::to_string(p.basis_size));
  RitzResult result;
  result.values.assign(ges.eigenvalues().data(),
                       ges.eigenvalues().data() + p.basis_size);
  result.coefficients = ges.eigenvectors();
  result.overlap_condition = condition;
  return result;
}

} // namespace wallosc::variational
