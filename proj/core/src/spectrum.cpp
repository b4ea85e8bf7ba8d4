#include "wallosc/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "wallosc/errors.hpp"
#include "wallosc/quadrature.hpp"
#include "wallosc/specfun.hpp"
#include "weber_trust.hpp"

namespace wallosc::spectrum {

namespace {

constexpr double kScanStart = -0.4; // no root can lie at or below this (epsilon > 1/2 - margin)
constexpr double kScanStep = 0.02;  // below the minimum root spacing (level gaps >= 1 in m)
constexpr double kMaxQ0 = 4.0;

void require_supported(const WellConfig& cfg) {
  if (!(cfg.q0 >= 0.0))
    throw DomainError("q0 must be >= 0, got " + std::to_string(cfg.q0));
  if (cfg.q0 > kMaxQ0)
    throw UnsupportedRange(
        "closed-form path supports q0 <= 4 (two-term cancellation loses all "
        "double-precision digits beyond); q0 = " +
        std::to_string(cfg.q0) + ". Use the finite-difference oracle instead.");
}

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

/// Bisection refinement of a sign change of the characteristic equation.
double refine_root(double lo, double hi, double f_lo, const WellConfig& cfg,
                   double tol) {
  // Stop at the requested width or when the bracket is a few ulps wide,
  // whichever comes first, so very tight tolerances still terminate.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width < tol || width < 8.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(1.0, std::abs(mid)))
      return mid;
    const double f_mid = characteristic(mid, cfg);
    if (f_mid == 0.0)
      return mid;
    if ((f_lo < 0.0) != (f_mid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Count strict sign changes of D_m(sqrt(2) q) sampled on (-q0, q0 + 8).
/// Works on the Kummer bracket (D without its positive prefactor) so a
/// round-off floor can be applied: the bracket's two terms grow like e^w
/// (w = q^2) while their true difference only grows polynomially, so any
/// sample inside the e^w round-off band is skipped as signless. All true
/// nodes lie in the classically allowed region, far away from that band.
int count_nodes(double m, const WellConfig& cfg) {
  constexpr int samples = 400;
  const double lo = -cfg.q0;
  const double hi = cfg.q0 + 8.0;
  const double step = (hi - lo) / samples;
  const double g1 = specfun::recip_gamma(0.5 * (1.0 - m));
  const double g2 = specfun::recip_gamma(-0.5 * m);
  int changes = 0;
  double prev = 0.0; // the boundary value is an exact zero; skip it as a sign source
  for (int i = 1; i <= samples; ++i) {
    const double z = std::numbers::sqrt2 * (lo + i * step);
    const double w = 0.5 * z * z;
    double bracket = 0.0;
    if (g1 != 0.0)
      bracket += g1 * specfun::kummer_m(-0.5 * m, 0.5, w);
    if (g2 != 0.0)
      bracket -= std::numbers::sqrt2 * z * g2 * specfun::kummer_m(0.5 * (1.0 - m), 1.5, w);
    if (std::abs(bracket) <= 1e-12 * std::exp(w))
      continue;
    if (prev != 0.0 && (bracket < 0.0) != (prev < 0.0))
      ++changes;
    prev = bracket;
  }
  return changes;
}

double normalization(double m, const WellConfig& cfg) {
  // |phi|^2 decays like e^{-q^2}; everything beyond the series trust window
  // is below working precision (see weber_trust.hpp), so integrating up to
  // it is exact to double precision while avoiding the round-off band.
  // One panel per unit keeps the 64-point rule spectral.
  const double lo = -cfg.q0;
  const double hi = detail::integration_upper(m, cfg.q0);
  const int panels = std::max(6, static_cast<int>(std::ceil(hi - lo)));
  const double integral = quad::integrate(
      [&](double q) {
        const double d = specfun::weber_d(m, std::numbers::sqrt2 * q);
        return d * d;
      },
      lo, hi, panels);
  return 1.0 / std::sqrt(integral);
}

} // namespace

double characteristic(double m, const WellConfig& cfg,
                      const specfun::SeriesControl& ctl) {
  require_supported(cfg);
  const double z = cfg.q0 * cfg.q0;
  const double g1 = specfun::recip_gamma(0.5 * (1.0 - m));
  const double g2 = specfun::recip_gamma(-0.5 * m);
  double value = 0.0;
  if (g1 != 0.0)
    value += g1 * specfun::kummer_m(-0.5 * m, 0.5, z, ctl);
  if (g2 != 0.0)
    value += 2.0 * cfg.q0 * g2 * specfun::kummer_m(0.5 * (1.0 - m), 1.5, z, ctl);
  return value;
}

std::vector<EigenSolution> eigenvalues(int n_max, const WellConfig& cfg, double tol) {
  require_supported(cfg);
  if (n_max < 0)
    throw DomainError("n_max must be >= 0");
  if (!(tol > 0.0))
    throw DomainError("tol must be > 0");

  const int wanted = n_max + 1;
  const double scan_end = 2.0 * n_max + 1.0;
  std::vector<EigenSolution> states;
  states.reserve(wanted);

  double m_prev = kScanStart;
  double f_prev = characteristic(m_prev, cfg);
  for (int k = 1; static_cast<int>(states.size()) < wanted; ++k) {
    const double m_cur = kScanStart + k * kScanStep;
    if (m_cur > scan_end + 0.5 * kScanStep)
      throw RootNotFound("characteristic-equation scan reached m = " +
                         std::to_string(scan_end) + " with only " +
                         std::to_string(states.size()) + " of " +
                         std::to_string(wanted) + " roots (q0 = " +
                         std::to_string(cfg.q0) + ")");
    const double f_cur = characteristic(m_cur, cfg);
    double root = std::numeric_limits<double>::quiet_NaN();
    if (f_cur == 0.0) {
      root = m_cur;
    } else if (f_prev != 0.0 && (f_cur < 0.0) != (f_prev < 0.0)) {
      root = refine_root(m_prev, m_cur, f_prev, cfg, tol);
    }
    if (!std::isnan(root)) {
      EigenSolution sol;
      sol.n = static_cast<int>(states.size());
      sol.epsilon = root + 0.5;
      // Derive the order back from epsilon so the pair is consistent to the
      // last bit, not merely to rounding of two separate sums.
      sol.weber_order = sol.epsilon - 0.5;
      if (!(sol.epsilon > sol.n + 0.5 && sol.epsilon <= 2.0 * sol.n + 1.5))
        throw RootNotFound("root m = " + std::to_string(root) +
                           " violates the level-" + std::to_string(sol.n) +
                           " bounds; scan resolution too coarse for q0 = " +
                           std::to_string(cfg.q0));
      sol.node_count = count_nodes(root, cfg);
      if (sol.node_count != sol.n)
        throw RootNotFound("eigenfunction for root m = " + std::to_string(root) +
                           " has " + std::to_string(sol.node_count) +
                           " nodes, expected " + std::to_string(sol.n));
      sol.norm = normalization(root, cfg);
      states.push_back(sol);
    }
    m_prev = m_cur;
    f_prev = f_cur;
  }
  return states;
}

EigenSolution eigenvalue(int n, const WellConfig& cfg, double tol) {
  return eigenvalues(n, cfg, tol).back();
}

double eigenfunction(const EigenSolution& sol, const WellConfig& cfg, double q) {
  if (q < -cfg.q0)
    throw DomainError("eigenfunction evaluated at q = " + std::to_string(q) +
                      " below the wall at " + std::to_string(-cfg.q0));
  return sol.norm * parity_sign(sol.n) *
         specfun::weber_d(sol.weber_order, std::numbers::sqrt2 * q);
}

double eigenfunction_derivative(const EigenSolution& sol, const WellConfig& cfg,
                                double q) {
  if (q < -cfg.q0)
    throw DomainError("eigenfunction derivative evaluated at q = " +
                      std::to_string(q) + " below the wall at " +
                      std::to_string(-cfg.q0));
  return sol.norm * parity_sign(sol.n) * std::numbers::sqrt2 *
         specfun::weber_d_dz(sol.weber_order, std::numbers::sqrt2 * q);
}

double asymptotic_epsilon0(const WellConfig& cfg) {
  const double q0 = cfg.q0;
  return 0.5 + q0 * std::exp(-q0 * q0) / (2.0 * std::sqrt(std::numbers::pi));
}

double asymptotic_epsilon1(const WellConfig& cfg) {
  const double q0 = cfg.q0;
  return 1.5 + q0 * (2.0 * q0 * q0 - 1.0) * std::exp(-q0 * q0) /
                   (2.0 * std::sqrt(std::numbers::pi));
}

std::vector<ScanRow> spectrum_scan(const std::vector<double>& q0_grid, int n_max,
                                   double tol) {
  if (n_max < 0 || n_max > 6)
    throw DomainError("spectrum_scan supports n_max in [0, 6], got " +
                      std::to_string(n_max));
  for (std::size_t i = 0; i < q0_grid.size(); ++i) {
    if (!(q0_grid[i] >= 0.0 && q0_grid[i] <= kMaxQ0))
      throw DomainError("spectrum_scan grid point " + std::to_string(q0_grid[i]) +
                        " outside [0, 4]");
    if (i > 0 && !(q0_grid[i] > q0_grid[i - 1]))
      throw DomainError("spectrum_scan grid must be strictly ascending");
  }
  std::vector<ScanRow> rows;
  rows.reserve(q0_grid.size());
  for (double q0 : q0_grid) {
    const WellConfig cfg{q0};
    const auto states = eigenvalues(n_max, cfg, tol);
    ScanRow row;
    row.q0 = q0;
    row.epsilon.reserve(states.size());
    for (const auto& s : states)
      row.epsilon.push_back(s.epsilon);
    for (std::size_t n = 0; n + 1 < row.epsilon.size(); ++n)
      row.gap.push_back(row.epsilon[n + 1] - row.epsilon[n]);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace wallosc::spectrum
