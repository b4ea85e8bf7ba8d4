#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "support/oracles.hpp"
#include "wallosc/errors.hpp"
#include "wallosc/spectrum.hpp"

namespace sp = wallosc::spectrum;

namespace {

// Exact eigenvalues pinned by locating the characteristic roots in extended
// precision; independently confirmed by the Richardson-extrapolated
// finite-difference solver to well below the tolerance asserted here.
struct ReferenceLevel {
  double q0;
  int n;
  double epsilon;
};
const std::vector<ReferenceLevel> kReferenceLevels = {
    {0.5, 0, 1.0303828958152865},
    {1.0, 0, 0.73423387173354333},
    {1.0, 1, 2.1974628386291482},
    {1.55, 0, 0.56924536839933951},
};

} // namespace

TEST_SUITE("spectrum") {

TEST_CASE("characteristic function at q0 = 0") {
  const sp::WellConfig cfg{0.0};
  // At q0 = 0 the second term carries an explicit factor q0 and the first is
  // a bare reciprocal gamma, so the eigenorders are exact zeros.
  CHECK(sp::characteristic(1.0, cfg) == 0.0);
  CHECK(sp::characteristic(3.0, cfg) == 0.0);
  CHECK(sp::characteristic(0.5, cfg) ==
        doctest::Approx(0.27581566283020931).epsilon(1e-14));
}

TEST_CASE("characteristic rejects unsupported wall positions") {
  CHECK_THROWS_AS(sp::characteristic(1.0, sp::WellConfig{4.5}),
                  wallosc::UnsupportedRange);
  CHECK_THROWS_AS(sp::characteristic(1.0, sp::WellConfig{-0.1}),
                  wallosc::DomainError);
}

TEST_CASE("half-line spectrum: epsilon_n(0) = 2n + 3/2") {
  const sp::WellConfig cfg{0.0};
  for (int n = 0; n <= 3; ++n) {
    const auto sol = sp::eigenvalue(n, cfg);
    CHECK(std::abs(sol.epsilon - (2.0 * n + 1.5)) < 1e-9);
    CHECK(sol.n == n);
    CHECK(sol.node_count == n);
    CHECK(sol.weber_order == sol.epsilon - 0.5);
    CHECK(sol.norm > 0.0);
  }
}

TEST_CASE("reference eigenvalues") {
  for (const auto& ref : kReferenceLevels) {
    const auto sol = sp::eigenvalue(ref.n, sp::WellConfig{ref.q0}, 1e-12);
    CHECK(std::abs(sol.epsilon - ref.epsilon) < 1e-10);
    CHECK(sol.node_count == ref.n);
  }
}

TEST_CASE("adsorption-scale ground state: epsilon_0(1.55) rounds to 0.57") {
  const auto sol = sp::eigenvalue(0, sp::WellConfig{1.55});
  CHECK(std::round(sol.epsilon * 100.0) / 100.0 == 0.57);
}

TEST_CASE("wall at a Hermite zero reproduces the restricted Hermite level") {
  // With the wall at 1/sqrt(2), a zero of H_2, the restricted n = 2 Hermite
  // function solves the problem exactly as the first excited state.
  const auto sol =
      sp::eigenvalue(1, sp::WellConfig{1.0 / std::numbers::sqrt2}, 1e-12);
  CHECK(std::abs(sol.epsilon - 2.5) < 1e-9);
}

TEST_CASE("eigenvalues decrease with q0 and respect the level bounds") {
  double previous[4] = {std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
  for (double q0 = 0.0; q0 <= 4.0; q0 += 0.5) {
    const auto states = sp::eigenvalues(3, sp::WellConfig{q0});
    for (int n = 0; n <= 3; ++n) {
      const double eps = states[n].epsilon;
      CHECK(eps < previous[n]);
      CHECK(eps > n + 0.5);
      CHECK(eps <= 2.0 * n + 1.5);
      CHECK(states[n].node_count == n);
      previous[n] = eps;
    }
  }
}

TEST_CASE("eigenfunction boundary value and sign convention") {
  for (double q0 : {0.5, 1.0, 1.55, 2.0}) {
    const sp::WellConfig cfg{q0};
    const auto states = sp::eigenvalues(3, cfg, 1e-12);
    for (const auto& sol : states) {
      CHECK(std::abs(sp::eigenfunction(sol, cfg, -q0)) < 1e-8);
      CHECK(sp::eigenfunction_derivative(sol, cfg, -q0) > 0.0);
    }
  }
}

TEST_CASE("eigenfunction refuses points behind the wall") {
  const sp::WellConfig cfg{1.0};
  const auto sol = sp::eigenvalue(0, cfg);
  CHECK_THROWS_AS(sp::eigenfunction(sol, cfg, -1.1), wallosc::DomainError);
  CHECK_THROWS_AS(sp::eigenfunction_derivative(sol, cfg, -1.1),
                  wallosc::DomainError);
}

TEST_CASE("eigenfunctions are normalized (independent quadrature)") {
  // The reference integral stops at q = 6: the true density beyond is below
  // 1e-13 of the total for these low-lying states.
  for (double q0 : {0.0, 1.0, 2.0}) {
    const sp::WellConfig cfg{q0};
    const auto states = sp::eigenvalues(1, cfg, 1e-12);
    for (const auto& sol : states) {
      const long double integral = testsupport::integrate(
          [&](long double q) {
            const double phi =
                sp::eigenfunction(sol, cfg, static_cast<double>(q));
            return static_cast<long double>(phi) * phi;
          },
          static_cast<long double>(-q0), 6.0L);
      CHECK(std::abs(static_cast<double>(integral) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("asymptotic formulas: frozen direct evaluations") {
  CHECK(sp::asymptotic_epsilon0(sp::WellConfig{2.5}) ==
        doctest::Approx(0.50136142764397044).epsilon(1e-15));
  CHECK(sp::asymptotic_epsilon0(sp::WellConfig{3.0}) ==
        doctest::Approx(0.50010443978896006).epsilon(1e-15));
  CHECK(sp::asymptotic_epsilon0(sp::WellConfig{3.5}) ==
        doctest::Approx(0.50000472449843021).epsilon(1e-15));
  CHECK(sp::asymptotic_epsilon1(sp::WellConfig{3.0}) ==
        doctest::Approx(1.501775476412321).epsilon(1e-15));
  CHECK(sp::asymptotic_epsilon0(sp::WellConfig{100.0}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sp::asymptotic_epsilon1(sp::WellConfig{100.0}) ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("asymptotic error is positive, below the correction, and shrinking") {
  // The formulas underestimate the exact levels: the signed error stays
  // within the correction term itself (roughly 0.8 of it for the ground
  // state, 0.6-0.8 for the first excited level) and decreases with q0.
  double prev_err0 = std::numeric_limits<double>::infinity();
  double prev_err1 = std::numeric_limits<double>::infinity();
  for (double q0 : {2.5, 3.0, 3.5}) {
    const sp::WellConfig cfg{q0};
    const double e0 = sp::eigenvalue(0, cfg, 1e-12).epsilon;
    const double e1 = sp::eigenvalue(1, cfg, 1e-12).epsilon;
    const double corr0 = sp::asymptotic_epsilon0(cfg) - 0.5;
    const double corr1 = sp::asymptotic_epsilon1(cfg) - 1.5;
    const double err0 = e0 - sp::asymptotic_epsilon0(cfg);
    const double err1 = e1 - sp::asymptotic_epsilon1(cfg);
    CHECK(err0 > 0.0);
    CHECK(err0 < corr0);
    CHECK(err1 > 0.0);
    CHECK(err1 < corr1);
    CHECK(err0 < prev_err0);
    CHECK(err1 < prev_err1);
    prev_err0 = err0;
    prev_err1 = err1;
  }
  // Ground-state agreement at q0 = 3 is inside 1e-4 absolute.
  CHECK(std::abs(sp::eigenvalue(0, sp::WellConfig{3.0}).epsilon -
                 sp::asymptotic_epsilon0(sp::WellConfig{3.0})) < 1e-4);
}

TEST_CASE("spectrum_scan structure, endpoints, and gap ordering") {
  const std::vector<double> grid = {0.0, 0.5, 1.0, 2.0, 3.0, 4.0};
  const auto rows = sp::spectrum_scan(grid, 3, 1e-10);
  REQUIRE(rows.size() == grid.size());
  for (int n = 0; n <= 3; ++n)
    CHECK(std::abs(rows[0].epsilon[n] - (2.0 * n + 1.5)) < 1e-9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].epsilon.size() == 4);
    REQUIRE(rows[i].gap.size() == 3);
    CHECK(rows[i].q0 == grid[i]);
    for (int n = 0; n <= 2; ++n) {
      CHECK(rows[i].gap[n] ==
            doctest::Approx(rows[i].epsilon[n + 1] - rows[i].epsilon[n])
                .epsilon(1e-15));
      CHECK(rows[i].gap[n] >= 1.0);
      if (rows[i].q0 > 0.0 && n > 0)
        CHECK(rows[i].gap[n] > rows[i].gap[n - 1]);
    }
    if (i > 0)
      for (int n = 0; n <= 3; ++n)
        CHECK(rows[i].epsilon[n] < rows[i - 1].epsilon[n]);
  }
}

TEST_CASE("spectrum_scan at q0 = 4 approaches the free oscillator") {
  // Every level sits above n + 1/2 and approaches it exponentially, the
  // higher levels more slowly: the excess grows roughly like q0^{2n+1} e^{-q0^2}.
  const auto rows = sp::spectrum_scan({4.0}, 3, 1e-10);
  const double bounds[4] = {1e-5, 1e-5, 1.2e-4, 9e-4};
  for (int n = 0; n <= 3; ++n) {
    const double excess = rows[0].epsilon[n] - (n + 0.5);
    CHECK(excess > 0.0);
    CHECK(excess < bounds[n]);
  }
}

TEST_CASE("spectrum_scan validates its inputs") {
  CHECK_THROWS_AS(sp::spectrum_scan({0.0, 4.2}, 1, 1e-10),
                  wallosc::DomainError);
  CHECK_THROWS_AS(sp::spectrum_scan({1.0, 0.5}, 1, 1e-10),
                  wallosc::DomainError);
  CHECK_THROWS_AS(sp::spectrum_scan({1.0}, 7, 1e-10), wallosc::DomainError);
  CHECK_THROWS_AS(sp::spectrum_scan({1.0}, -1, 1e-10), wallosc::DomainError);
}

} // TEST_SUITE
