#pragma once

#include <vector>

#include "wallosc/spectrum.hpp"

namespace wallosc::oracle {

/// Uniform finite-difference grid on [q_min, q_max] with Dirichlet conditions
/// at both ends. The `points` interior nodes sit at q_min + i*h, i = 1..points,
/// with spacing h = (q_max - q_min) / (points + 1).
///
/// Invariants: q_max >= q0 + 8 (tail truncation below the target accuracy),
/// points >= 200.
struct GridSpec {
  double q_min = 0.0;
  double q_max = 0.0;
  int points = 0;
};

/// Grid used by the Richardson driver: q_max = q0 + 12, points = 4000.
/// Tail truncation ~ e^{-72} is negligible; h ~ 4e-3 gives O(h^2) ~ 1.6e-5
/// before extrapolation.
GridSpec default_grid(const spectrum::WellConfig& cfg);

/// Lowest n_max+1 eigenvalues of the standard second-order central-difference
/// discretization of -1/2 phi'' + 1/2 q^2 phi on the given grid, computed by
/// Sturm-sequence bisection on the symmetric tridiagonal matrix
/// (diagonal 1/h^2 + q_i^2/2, off-diagonal -1/(2 h^2)).
///
/// Error is O(h^2) plus an e^{-(q_max-q0)^2/2} truncation term. The solver is
/// deliberately independent of the closed-form machinery so it can serve as a
/// cross-check.
std::vector<double> fd_eigenvalues(const spectrum::WellConfig& cfg, int n_max,
                                   const GridSpec& grid);

/// Sign-change count of the n-th finite-difference eigenvector (computed by
/// inverse iteration). Validation helper: the count must equal n.
int fd_node_count(const spectrum::WellConfig& cfg, int n, const GridSpec& grid);

/// Runs fd_eigenvalues on the default grid at h and h/2 and Richardson-
/// extrapolates, (4 E_{h/2} - E_h) / 3, removing the O(h^2) term. Target
/// absolute accuracy 1e-7. Valid for any q0 >= 0, including beyond the
/// closed-form q0 <= 4 limit.
///
/// Throws GridTooCoarse if the two refinement levels disagree so much that
/// the extrapolated value cannot be trusted at the target accuracy.
std::vector<double> fd_eigenvalues_richardson(const spectrum::WellConfig& cfg,
                                              int n_max);

} // namespace wallosc::oracle
