#include <cmath>
#include <numbers>

#include <doctest.h>

#include "support/oracles.hpp"
#include "wallosc/errors.hpp"
#include "wallosc/identities.hpp"
#include "wallosc/spectrum.hpp"

namespace id = wallosc::identities;
namespace sp = wallosc::spectrum;

namespace {

sp::EigenSolution solve(int n, const sp::WellConfig& cfg) {
  return sp::eigenvalue(n, cfg, 1e-12);
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("half-line ground state has <q^2> = 3/2") {
  const sp::WellConfig cfg{0.0};
  const auto sol = solve(0, cfg);
  CHECK(id::expectation(sol, cfg, id::Observable::Q2) ==
        doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("expectations against independent quadrature") {
  // Upper limit 6: inside the range where the eigenfunction evaluation is
  // accurate in double precision, with a tail below 1e-14 of the integral.
  const sp::WellConfig cfg{1.0};
  for (int n = 0; n <= 1; ++n) {
    const auto sol = solve(n, cfg);
    const long double q_ref = testsupport::integrate(
        [&](long double q) {
          const double phi = sp::eigenfunction(sol, cfg, static_cast<double>(q));
          return q * phi * phi;
        },
        -1.0L, 6.0L, 1e-13L);
    CHECK(std::abs(id::expectation(sol, cfg, id::Observable::Q) -
                   static_cast<double>(q_ref)) < 1e-9);
    const long double q2_ref = testsupport::integrate(
        [&](long double q) {
          const double phi = sp::eigenfunction(sol, cfg, static_cast<double>(q));
          return q * q * phi * phi;
        },
        -1.0L, 6.0L, 1e-13L);
    CHECK(std::abs(id::expectation(sol, cfg, id::Observable::Q2) -
                   static_cast<double>(q2_ref)) < 1e-9);
  }
}

TEST_CASE("expectation signs") {
  for (double q0 : {0.0, 1.0, 3.0}) {
    const sp::WellConfig cfg{q0};
    for (int n = 0; n <= 2; ++n) {
      const auto sol = solve(n, cfg);
      CHECK(id::expectation(sol, cfg, id::Observable::Q) > 0.0);
      CHECK(id::expectation(sol, cfg, id::Observable::Q2) > 0.0);
      CHECK(id::expectation(sol, cfg, id::Observable::D2) < 0.0);
    }
  }
}

TEST_CASE("wall sensitivity closed form") {
  const sp::WellConfig cfg{1.0};
  CHECK(id::depsilon_dq0(0, cfg) ==
        doctest::Approx(-0.43839003990094376).epsilon(1e-10));
  CHECK(id::depsilon_dq0(1, cfg) ==
        doctest::Approx(-0.92529226974623635).epsilon(1e-10));
}

TEST_CASE("wall sensitivity is negative and fades with distance") {
  for (double q0 : {0.5, 1.0, 1.55, 2.0, 3.0})
    for (int n = 0; n <= 3; ++n)
      CHECK(id::depsilon_dq0(n, sp::WellConfig{q0}) < 0.0);
  CHECK(std::abs(id::depsilon_dq0(0, sp::WellConfig{4.0})) < 1e-5);
}

TEST_CASE("closed-form sensitivity matches the finite-difference solver") {
  for (double q0 : {0.5, 1.0, 1.55, 2.0, 3.0}) {
    const sp::WellConfig cfg{q0};
    for (int n = 0; n <= 3; ++n) {
      const double analytic = id::depsilon_dq0(n, cfg);
      const double fd = id::depsilon_dq0_fd(n, cfg);
      CHECK(std::abs(analytic - fd) / std::abs(analytic) < 1e-6);
    }
  }
}

TEST_CASE("virial identity holds across the well range") {
  for (double q0 : {0.0, 0.5, 1.0, 1.55, 2.0, 3.0}) {
    const sp::WellConfig cfg{q0};
    for (int n = 0; n <= 3; ++n) {
      const auto report = id::check_virial(n, cfg);
      CHECK(report.n == n);
      CHECK(report.q0 == q0);
      CHECK(report.identity_tag == id::IdentityTag::Virial);
      CHECK(report.residual == std::abs(report.lhs - report.rhs));
      CHECK(report.residual < 1e-6);
    }
  }
}

TEST_CASE("virial identity is trivial on the half line") {
  // At q0 = 0 both sides vanish: the states are pure oscillator
  // eigenfunctions with <T> = <V>, and the wall term carries a factor q0.
  const auto report = id::check_virial(1, sp::WellConfig{0.0});
  CHECK(report.rhs == 0.0);
  CHECK(std::abs(report.lhs) < 1e-8);
}

TEST_CASE("virial sides vanish for a distant wall") {
  const auto report = id::check_virial(0, sp::WellConfig{4.0});
  CHECK(std::abs(report.lhs) < 1e-5);
  CHECK(std::abs(report.rhs) < 1e-5);
  CHECK(report.residual < 1e-6);
}

TEST_CASE("hypervirial identity holds across the well range") {
  for (double q0 : {0.0, 0.5, 1.0, 1.55, 2.0, 3.0}) {
    const sp::WellConfig cfg{q0};
    for (int n = 0; n <= 3; ++n) {
      const auto report = id::check_hypervirial(n, cfg);
      CHECK(report.n == n);
      CHECK(report.q0 == q0);
      CHECK(report.identity_tag == id::IdentityTag::Hypervirial);
      CHECK(report.residual == std::abs(report.lhs - report.rhs));
      CHECK(report.lhs > 0.0);
      CHECK(report.residual < 1e-6);
    }
  }
}

TEST_CASE("half-line hypervirial reduces to <q> = 2/sqrt(pi)") {
  const auto report = id::check_hypervirial(0, sp::WellConfig{0.0});
  const double mean = 2.0 / std::sqrt(std::numbers::pi);
  CHECK(std::abs(report.lhs - mean) < 1e-8);
  CHECK(std::abs(report.rhs - mean) < 1e-8);
}

TEST_CASE("boundary-derivative report cross-checks the closed form") {
  for (double q0 : {0.5, 1.0, 2.0}) {
    const sp::WellConfig cfg{q0};
    for (int n = 0; n <= 3; ++n) {
      const auto report = id::boundary_derivative_report(n, cfg);
      CHECK(report.identity_tag == id::IdentityTag::BoundaryDerivative);
      CHECK(report.lhs == doctest::Approx(id::depsilon_dq0(n, cfg)).epsilon(1e-12));
      CHECK(report.residual == std::abs(report.lhs - report.rhs));
      CHECK(report.residual < 1e-6);
    }
  }
}

TEST_CASE("finite-difference sensitivity rejects bad step sizes") {
  CHECK_THROWS_AS(id::depsilon_dq0_fd(0, sp::WellConfig{1.0}, 0.0),
                  wallosc::DomainError);
  CHECK_THROWS_AS(id::depsilon_dq0_fd(0, sp::WellConfig{1.0}, -1e-4),
                  wallosc::DomainError);
  CHECK_THROWS_AS(id::depsilon_dq0_fd(0, sp::WellConfig{0.0}),
                  wallosc::DomainError);
}

TEST_CASE("hermite-zero wall placements satisfy both identities") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // H_1: single zero at the origin; the restricted state is the half-line
  // ground state, so the hypervirial side is exactly 2/sqrt(pi).
  {
    const auto [virial, hyper] = id::hermite_zero_check(1, 0);
    CHECK(virial.n == 1);
    CHECK(virial.q0 == 0.0);
    CHECK(std::abs(virial.lhs) < 1e-10);
    CHECK(std::abs(virial.rhs) < 1e-10);
    CHECK(virial.residual < 1e-10);
    CHECK(hyper.identity_tag == id::IdentityTag::Hypervirial);
    CHECK(std::abs(hyper.lhs - 2.0 / std::sqrt(std::numbers::pi)) < 1e-10);
    CHECK(hyper.residual < 1e-10);
  }

  // H_2: zeros at -+1/sqrt(2), reported in ascending order.
  {
    const auto [virial, hyper] = id::hermite_zero_check(2, 0); // b = -1/sqrt(2)
    CHECK(virial.q0 == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(virial.lhs == doctest::Approx(0.807411452013).epsilon(1e-10));
    CHECK(virial.residual < 1e-10);
    CHECK(hyper.lhs == doctest::Approx(1.14185222585).epsilon(1e-10));
    CHECK(hyper.residual < 1e-10);
  }
  {
    const auto [virial, hyper] = id::hermite_zero_check(2, 1); // b = +1/sqrt(2)
    CHECK(virial.q0 == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
    CHECK(virial.lhs == doctest::Approx(-1.20796322523).epsilon(1e-10));
    CHECK(virial.residual < 1e-10);
    CHECK(hyper.lhs == doctest::Approx(1.70831797596).epsilon(1e-10));
    CHECK(hyper.residual < 1e-10);
  }
}

TEST_CASE("hermite-zero check validates its arguments") {
  CHECK_THROWS_AS(id::hermite_zero_check(0, 0), wallosc::InvalidZeroIndex);
  CHECK_THROWS_AS(id::hermite_zero_check(3, 0), wallosc::InvalidZeroIndex);
  CHECK_THROWS_AS(id::hermite_zero_check(1, 1), wallosc::InvalidZeroIndex);
  CHECK_THROWS_AS(id::hermite_zero_check(2, 2), wallosc::InvalidZeroIndex);
  CHECK_THROWS_AS(id::hermite_zero_check(2, -1), wallosc::InvalidZeroIndex);
}

} // TEST_SUITE
