#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"

using namespace spinphase;

TEST_CASE("construction normalizes the angle ranges") {
  const direction folded(-0.3, 1.0);
  CHECK(folded.theta == Catch::Approx(0.3));
  CHECK(folded.phi == Catch::Approx(1.0 + pi));

  const direction over(pi + 0.5, 0.2);
  CHECK(over.theta == Catch::Approx(pi - 0.5));
  CHECK(over.phi == Catch::Approx(0.2 + pi));

  const direction wrapped(1.0, -0.5);
  CHECK(wrapped.phi == Catch::Approx(two_pi - 0.5));

  const direction rewrapped = normalize_direction(0.7, 1.3 + two_pi);
  CHECK(rewrapped.theta == Catch::Approx(0.7));
  CHECK(rewrapped.phi == Catch::Approx(1.3));
}

TEST_CASE("poles compare equal regardless of azimuth") {
  CHECK(direction(0.0, 1.0) == direction(0.0, 4.0));
  CHECK(direction(pi, 0.3) == direction(pi, 5.0));
  CHECK(direction(0.0, 1.0) != direction(pi, 1.0));
  CHECK(direction(0.0, 2.5).at_pole());
  // The raw azimuth is preserved for convention-sensitive phase work.
  CHECK(direction(0.0, 2.5).phi == Catch::Approx(2.5));
}

TEST_CASE("non-finite angles are rejected") {
  CHECK_THROWS_AS(direction(std::nan(""), 0.0), non_finite_error);
  CHECK_THROWS_AS(direction(0.0, std::numeric_limits<double>::infinity()),
                  non_finite_error);
}

TEST_CASE("spin projection matrix") {
  const direction n(0.8, 2.1);
  const mat2c s = spin_projection(n);
  CHECK(is_hermitian(s));
  CHECK(std::abs(s.m11 + s.m22) < 1e-15);
  CHECK(std::abs(s.m11.real() - std::cos(0.8)) < 1e-15);
  CHECK(std::abs(s.m21 - std::sin(0.8) * std::polar(1.0, 2.1)) < 1e-15);
  CHECK(std::abs(s.m11 * s.m22 - s.m12 * s.m21 - cplx(-1.0)) < 1e-15);
  CHECK(norm_inf(s * s - mat2c::identity()) < 1e-15);
}

TEST_CASE("angle parsing") {
  CHECK(parse_angle("1.57") == Catch::Approx(1.57));
  CHECK(parse_angle("90deg") == Catch::Approx(0.5 * pi));
  CHECK(parse_angle("-45deg") == Catch::Approx(-0.25 * pi));
  CHECK_THROWS_AS(parse_angle("fast"), invalid_config_error);
  CHECK_THROWS_AS(parse_angle("1.2rad"), invalid_config_error);
  CHECK_THROWS_AS(parse_angle(""), invalid_config_error);
}
