#include "wallosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wallosc/errors.hpp"

namespace wallosc::oracle {

namespace {

/// Diagonal of the central-difference Hamiltonian: 1/h^2 + q_i^2 / 2 at the
/// interior nodes q_i = q_min + i h. The off-diagonal is the constant
/// -1/(2 h^2), stored once as its square where the Sturm recurrence needs it.
std::vector<double> hamiltonian_diagonal(const GridSpec& grid) {
  const double h = (grid.q_max - grid.q_min) / (grid.points + 1);
  std::vector<double> diag(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double q = grid.q_min + (i + 1) * h;
    diag[i] = 1.0 / (h * h) + 0.5 * q * q;
  }
  return diag;
}

/// Number of eigenvalues of the tridiagonal matrix strictly below x, via the
/// Sturm sequence of leading-minor pivot ratios. Off-diagonal passed squared.
int sturm_count_below(const std::vector<double>& diag, double offdiag_sq,
                      double x) {
  // Keep pivots away from exact zero so the recurrence can continue; the
  // substitution flips at most the count at one isolated x, which bisection
  // tolerates.
  constexpr double kPivotFloor = 1e-300;
  int count = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    pivot = diag[i] - x - (i == 0 ? 0.0 : offdiag_sq / pivot);
    if (std::abs(pivot) < kPivotFloor)
      pivot = -kPivotFloor;
    if (pivot < 0.0)
      ++count;
  }
  return count;
}

/// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double sturm_bisect(const std::vector<double>& diag, double offdiag,
                    int k) {
  const double offdiag_sq = offdiag * offdiag;
  // Gershgorin bounds for the spectrum.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double d : diag) {
    lo = std::min(lo, d - 2.0 * std::abs(offdiag));
    hi = std::max(hi, d + 2.0 * std::abs(offdiag));
  }
  // Absolute width target far below the O(h^2) discretization error; the
  // eigenvalues of interest are O(10), so ~45 halvings from an O(1/h^2)
  // bracket suffice and the loop cap is generous.
  constexpr double kWidthTol = 1e-13;
  for (int it = 0; it < 120 && hi - lo > kWidthTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(diag, offdiag_sq, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void require_valid(const spectrum::WellConfig& cfg, int n_max,
                   const GridSpec& grid) {
  if (!(cfg.q0 >= 0.0))
    throw DomainError("q0 must be >= 0, got " + std::to_string(cfg.q0));
  if (n_max < 0)
    throw DomainError("n_max must be >= 0");
  if (grid.points < 200)
    throw DomainError("grid must have at least 200 interior points, got " +
                      std::to_string(grid.points));
  if (!(grid.q_max >= cfg.q0 + 8.0))
    throw DomainError("grid must extend to q0 + 8 or beyond (tail truncation); "
                      "got q_max = " +
                      std::to_string(grid.q_max));
  if (!(grid.q_min < grid.q_max))
    throw DomainError("grid requires q_min < q_max");
  if (n_max >= grid.points)
    throw DomainError("grid too small for the requested number of levels");
}

} // namespace

GridSpec default_grid(const spectrum::WellConfig& cfg) {
  return GridSpec{-cfg.q0, cfg.q0 + 12.0, 4000};
}

std::vector<double> fd_eigenvalues(const spectrum::WellConfig& cfg, int n_max,
                                   const GridSpec& grid) {
  require_valid(cfg, n_max, grid);
  const double h = (grid.q_max - grid.q_min) / (grid.points + 1);
  const std::vector<double> diag = hamiltonian_diagonal(grid);
  const double offdiag = -0.5 / (h * h);
  std::vector<double> values(n_max + 1);
  for (int k = 0; k <= n_max; ++k)
    values[k] = sturm_bisect(diag, offdiag, k);
  return values;
}

int fd_node_count(const spectrum::WellConfig& cfg, int n, const GridSpec& grid) {
  require_valid(cfg, n, grid);
  const double h = (grid.q_max - grid.q_min) / (grid.points + 1);
  const std::vector<double> diag = hamiltonian_diagonal(grid);
  const double offdiag = -0.5 / (h * h);
  const double lambda = sturm_bisect(diag, offdiag, n);

  // Inverse iteration: a couple of tridiagonal solves of (T - lambda I) v = u
  // converge onto the eigenvector because lambda is accurate to ~1e-13.
  const int size = grid.points;
  std::vector<double> v(size);
  for (int i = 0; i < size; ++i)
    v[i] = std::sin(1.0 + i); // deterministic start with no special structure

  std::vector<double> c(size); // forward-eliminated off-diagonal
  std::vector<double> d(size); // forward-eliminated right-hand side
  for (int iter = 0; iter < 3; ++iter) {
    // Thomas algorithm with a floor on the (intentionally near-singular)
    // pivots; the solve only needs to amplify the eigenvector direction.
    double pivot = diag[0] - lambda;
    if (std::abs(pivot) < 1e-300)
      pivot = 1e-300;
    c[0] = offdiag / pivot;
    d[0] = v[0] / pivot;
    for (int i = 1; i < size; ++i) {
      pivot = diag[i] - lambda - offdiag * c[i - 1];
      if (std::abs(pivot) < 1e-300)
        pivot = 1e-300;
      c[i] = offdiag / pivot;
      d[i] = (v[i] - offdiag * d[i - 1]) / pivot;
    }
    v[size - 1] = d[size - 1];
    for (int i = size - 2; i >= 0; --i)
      v[i] = d[i] - c[i] * v[i + 1];
    double norm = 0.0;
    for (double x : v)
      norm = std::max(norm, std::abs(x));
    for (double& x : v)
      x /= norm;
  }

  // Count strict sign changes, ignoring components in the round-off floor
  // (the far tail decays below any meaningful sign).
  int changes = 0;
  double prev = 0.0;
  for (double x : v) {
    if (std::abs(x) <= 1e-8)
      continue;
    if (prev != 0.0 && (x < 0.0) != (prev < 0.0))
      ++changes;
    prev = x;
  }
  return changes;
}

std::vector<double> fd_eigenvalues_richardson(const spectrum::WellConfig& cfg,
                                              int n_max) {
  const GridSpec coarse = default_grid(cfg);
  // Halving h doubles the interval count: points + 1 -> 2 (points + 1).
  const GridSpec fine{coarse.q_min, coarse.q_max, 2 * coarse.points + 1};
  const std::vector<double> at_h = fd_eigenvalues(cfg, n_max, coarse);
  const std::vector<double> at_half_h = fd_eigenvalues(cfg, n_max, fine);
  std::vector<double> values(n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    // The level difference is ~3/4 of the O(h^2) error; if it is not small,
    // the leading-order error model (and thus the extrapolation) is invalid.
    if (std::abs(at_h[k] - at_half_h[k]) > 1e-3)
      throw GridTooCoarse(
          "finite-difference refinement levels disagree by " +
          std::to_string(std::abs(at_h[k] - at_half_h[k])) + " for n = " +
          std::to_string(k) + "; the O(h^2) error model does not hold");
    values[k] = (4.0 * at_half_h[k] - at_h[k]) / 3.0;
  }
  return values;
}

} // namespace wallosc::oracle
