#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "spinphase/reductions.hpp"

using namespace spinphase;

TEST_CASE("coincident-direction limit recovers the constant matrices") {
  for (const auto& conv :
       {phase_convention::old_phase(), phase_convention::new_phase()}) {
    const limit_report rep = pauli_limit(conv);
    INFO("convention " << conv.name());
    CHECK(rep.points == 400);
    CHECK(rep.checks.size() == 8);
    CHECK(rep.max_residual() <= rep.tolerance);
    CHECK(rep.passed());
  }
}

TEST_CASE("equatorial-pole limit recovers the standard generalized forms") {
  const limit_report rep = standard_generalized_limit();
  CHECK(rep.checks.size() == 3);
  CHECK(rep.max_residual() <= rep.tolerance);
  CHECK(rep.passed());
}

TEST_CASE("azimuth scan finds the old-convention alignment at phi = pi") {
  const azimuth_scan scan = best_standard_azimuth(phase_convention::old_phase());
  CHECK(std::abs(scan.predicted_phi - pi) < 1e-12);
  CHECK(std::abs(scan.best_phi - scan.predicted_phi) <= two_pi / 720 + 1e-12);
  CHECK(scan.predicted_residual <= 1e-12);
  CHECK(std::abs(scan.global_phase - cplx(1.0, 0.0)) < 1e-10);
  CHECK(scan.phase_spread < 1e-10);
}

TEST_CASE("azimuth scan finds the new-convention alignment at phi = pi/2") {
  const azimuth_scan scan = best_standard_azimuth(phase_convention::new_phase());
  CHECK(std::abs(scan.predicted_phi - 0.5 * pi) < 1e-12);
  CHECK(std::abs(scan.best_phi - scan.predicted_phi) <= two_pi / 720 + 1e-12);
  CHECK(scan.predicted_residual <= 1e-12);
  CHECK(std::abs(scan.global_phase - cplx(0.0, 1.0)) < 1e-10);
}

TEST_CASE("azimuth prediction shifts with the custom phase offsets") {
  const azimuth_scan scan =
      best_standard_azimuth(phase_convention::custom(1.0, 2.0));
  // Optimum at pi + alpha_plus - alpha_minus, wrapped into [0, 2pi).
  CHECK(std::abs(scan.predicted_phi - (pi - 1.0)) < 1e-12);
  CHECK(scan.predicted_residual <= 1e-12);
  CHECK(std::abs(scan.global_phase - std::polar(1.0, -1.0)) < 1e-10);
}

TEST_CASE("azimuth scan rejects an empty scan") {
  CHECK_THROWS_AS(best_standard_azimuth(phase_convention::old_phase(), 0),
                  invalid_config_error);
}
