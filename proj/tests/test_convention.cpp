#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"

using namespace spinphase;

namespace {
void check_eigenbasis(const basis_pair& p, const direction& n) {
  const mat2c s = spin_projection(n);
  CHECK(norm(s * p.xi_plus - p.xi_plus) < 1e-14);
  CHECK(norm(s * p.xi_minus + p.xi_minus) < 1e-14);
  CHECK(std::abs(norm(p.xi_plus) - 1.0) < 1e-14);
  CHECK(std::abs(norm(p.xi_minus) - 1.0) < 1e-14);
  CHECK(std::abs(inner(p.xi_plus, p.xi_minus)) < 1e-14);
}
}  // namespace

TEST_CASE("old convention basis pair") {
  const direction n(1.1, 2.4);
  const basis_pair p = basis_pair_for(n, phase_convention::old_phase());
  check_eigenbasis(p, n);
  CHECK(std::abs(p.xi_plus.x - cplx(std::cos(0.55))) < 1e-15);
  CHECK(std::abs(p.xi_plus.y - std::polar(1.0, 2.4) * std::sin(0.55)) < 1e-15);
  CHECK(std::abs(p.xi_minus.x - cplx(std::sin(0.55))) < 1e-15);
  CHECK(std::abs(p.xi_minus.y + std::polar(1.0, 2.4) * std::cos(0.55)) < 1e-15);
}

TEST_CASE("new convention moves the azimuth phase to the up component") {
  const direction n(1.1, 2.4);
  const basis_pair p = basis_pair_for(n, phase_convention::new_phase());
  check_eigenbasis(p, n);
  CHECK(std::abs(p.xi_plus.x - std::polar(1.0, -2.4) * std::cos(0.55)) < 1e-15);
  CHECK(std::abs(p.xi_plus.y - cplx(std::sin(0.55))) < 1e-15);
  // The down vector matches the old convention.
  const basis_pair q = basis_pair_for(n, phase_convention::old_phase());
  CHECK(norm(p.xi_minus - q.xi_minus) < 1e-15);
}

TEST_CASE("custom convention multiplies the old pair by fixed phases") {
  const direction n(0.7, 5.1);
  const phase_convention conv = phase_convention::custom(0.4, -1.1);
  const basis_pair p = basis_pair_for(n, conv);
  const basis_pair q = basis_pair_for(n, phase_convention::old_phase());
  check_eigenbasis(p, n);
  CHECK(norm(p.xi_plus - std::polar(1.0, 0.4) * q.xi_plus) < 1e-15);
  CHECK(norm(p.xi_minus - std::polar(1.0, -1.1) * q.xi_minus) < 1e-15);
  CHECK_THROWS_AS(phase_convention::custom(std::nan(""), 0.0), non_finite_error);
}

TEST_CASE("convention names and equality") {
  CHECK(phase_convention::old_phase().name() == "old");
  CHECK(phase_convention::new_phase().name() == "new");
  CHECK(phase_convention::custom(1.0, 2.0).name().rfind("custom:", 0) == 0);
  CHECK(phase_convention::old_phase() == phase_convention::old_phase());
  CHECK_FALSE(phase_convention::old_phase() == phase_convention::new_phase());
  CHECK_FALSE(phase_convention::custom(1.0, 0.0) == phase_convention::custom(0.0, 0.0));
}

TEST_CASE("relative phase recovery") {
  const direction n(1.3, 0.9);
  const basis_pair p = basis_pair_for(n, phase_convention::old_phase());
  const vec2c rotated = std::polar(1.0, -2.0) * p.xi_plus;
  CHECK(std::abs(std::polar(1.0, relative_phase(p.xi_plus, rotated)) -
                 std::polar(1.0, -2.0)) < 1e-13);
  CHECK_THROWS_AS(relative_phase(p.xi_plus, p.xi_minus), not_phase_related_error);
}

TEST_CASE("phase relation between conventions") {
  const direction n(1.0, 0.5);
  const phase_relation_result rel = phase_relation(phase_convention::old_phase(),
                                                   phase_convention::new_phase(), n);
  // The up vector gains e^{-i phi}, the down vector is unchanged.
  CHECK(std::abs(std::polar(1.0, rel.delta_plus) - std::polar(1.0, -0.5)) < 1e-13);
  CHECK(std::abs(std::polar(1.0, rel.delta_minus) - cplx(1.0)) < 1e-13);

  const basis_pair po = basis_pair_for(n, phase_convention::old_phase());
  const basis_pair pn = basis_pair_for(n, phase_convention::new_phase());
  CHECK(norm(pn.xi_plus - std::polar(1.0, rel.delta_plus) * po.xi_plus) < 1e-14);
  CHECK(norm(pn.xi_minus - std::polar(1.0, rel.delta_minus) * po.xi_minus) < 1e-14);
}
