#pragma once

// Generalized spin component operators in the basis of an arbitrary
// quantization direction b, for a component direction c, under any phase
// convention. Everything is built from amplitude matrices in a fixed order:
//
//   generalized_component -> eigenvectors_of_component -> ladder_operators
//     -> xy_from_ladder -> rotated eigenvectors
//
// so that every quantity traces back to first principles. The closed-form
// tables live in paper_tables.hpp and are never used here.

#include <utility>

#include "spinphase/amplitudes.hpp"
#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/linalg.hpp"
#include "spinphase/observable.hpp"

namespace spinphase {

// Matrix of the observable with outcome eigenvalues r measured along c, in
// the b basis: R(j, j') = sum_n conj(psi(j, n)) r_n psi(j', n) with
// psi = transition_amplitudes(b, c, conv).
inline mat2c generalized_component(const direction& b, const direction& c,
                                   const phase_convention& conv,
                                   const observable_spec& r = {}) {
  const mat2c f = transition_amplitudes(b, c, conv).psi;
  mat2c out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      out(j, k) = std::conj(f(j, 0)) * r.r1 * f(k, 0) + std::conj(f(j, 1)) * r.r2 * f(k, 1);
    }
  }
  return out;
}

// Independent route to the same matrix for r = (1, -1): change of basis of
// the spin projection, V^dagger [sigma.c] V with V's columns the b basis
// pair. Kept separate from generalized_component so the two can be checked
// against each other.
inline mat2c oracle_component(const direction& b, const direction& c,
                              const phase_convention& conv) {
  const basis_pair pb = basis_pair_for(b, conv);
  const mat2c v{pb.xi_plus.x, pb.xi_minus.x, pb.xi_plus.y, pb.xi_minus.y};
  return adjoint(v) * spin_projection(c) * v;
}

// Eigenvectors of generalized_component(b, c, conv, (1, -1)) expressed in
// the b basis: the rows of psi(c -> b).
inline std::pair<vec2c, vec2c> eigenvectors_of_component(const direction& b,
                                                         const direction& c,
                                                         const phase_convention& conv) {
  const mat2c m = transition_amplitudes(c, b, conv).psi;
  return {vec2c{m.m11, m.m12}, vec2c{m.m21, m.m22}};
}

// Ladder operators from an orthonormal eigenvector pair:
// sigma+ = 2 |plus><minus|, sigma- = 2 |minus><plus|.
inline std::pair<mat2c, mat2c> ladder_operators(const vec2c& plus, const vec2c& minus,
                                                double tol = default_tolerance) {
  const bool unit = std::abs(norm(plus) - 1.0) <= tol && std::abs(norm(minus) - 1.0) <= tol;
  if (!unit || std::abs(inner(plus, minus)) > tol) {
    throw not_orthonormal_error("ladder_operators: eigenvector pair is not orthonormal");
  }
  return {2.0 * outer(plus, minus), 2.0 * outer(minus, plus)};
}

// sigma_x = (sigma+ + sigma-)/2, sigma_y = (sigma+ - sigma-)/(2i).
inline std::pair<mat2c, mat2c> xy_from_ladder(const mat2c& sigma_plus,
                                              const mat2c& sigma_minus) {
  return {0.5 * (sigma_plus + sigma_minus),
          cplx(0.0, -0.5) * (sigma_plus - sigma_minus)};
}

// Rotation identities taking the component eigenvectors to those of the x
// and y partners: (1/sqrt2)(I -+ i sigma_{y,x}) xi_c(+-).
inline std::pair<vec2c, vec2c> rotated_eigenvectors_x(const mat2c& sigma_y,
                                                      const vec2c& xi_plus,
                                                      const vec2c& xi_minus) {
  const mat2c rot = (1.0 / std::numbers::sqrt2) *
                    (mat2c::identity() - cplx(0.0, 1.0) * sigma_y);
  return {rot * xi_plus, rot * xi_minus};
}

inline std::pair<vec2c, vec2c> rotated_eigenvectors_y(const mat2c& sigma_x,
                                                      const vec2c& xi_plus,
                                                      const vec2c& xi_minus) {
  const mat2c rot = (1.0 / std::numbers::sqrt2) *
                    (mat2c::identity() + cplx(0.0, 1.0) * sigma_x);
  return {rot * xi_plus, rot * xi_minus};
}

enum class component_axis { x, y };

namespace detail {

// Argument substitutions behind the old-convention shortcut, applied at the
// formula level (raw angles, no direction normalization).
inline std::pair<double, double> shortcut_angles(const direction& c, component_axis which) {
  if (which == component_axis::x) return {c.theta - 0.5 * pi, c.phi};
  return {0.5 * pi, c.phi - 0.5 * pi};
}

// Shortcut-substituted component under any convention, for the misuse
// diagnostics; eigenvector counterpart below. Substituting a direction into
// the component leaves the operator's own algebra intact, so the public
// shortcut guard cannot be expressed here.
inline mat2c substituted_component(const direction& b, const direction& c,
                                   const phase_convention& conv, component_axis which) {
  const auto [t, p] = shortcut_angles(c, which);
  const basis_pair pb = basis_pair_for(b, conv);
  const mat2c v{pb.xi_plus.x, pb.xi_minus.x, pb.xi_plus.y, pb.xi_minus.y};
  return adjoint(v) * spin_projection(direction(t, p)) * v;
}

inline std::pair<vec2c, vec2c> substituted_eigenvectors(const direction& b,
                                                        const direction& c,
                                                        const phase_convention& conv,
                                                        component_axis which) {
  const auto [t, p] = shortcut_angles(c, which);
  const mat2c xc = stacked_basis(basis_pair_at(t, p, conv));
  const mat2c xb = stacked_basis(basis_pair_for(b, conv));
  const mat2c m = xc * adjoint(xb);
  return {vec2c{m.m11, m.m12}, vec2c{m.m21, m.m22}};
}

}  // namespace detail

// The x/y component via the argument substitution into the component
// matrix (theta' -> theta' - pi/2 for x; theta' = pi/2, phi' -> phi' - pi/2
// for y). Valid for the old convention only, where it reproduces the
// ladder-built components; under the other conventions the substituted
// matrix is inconsistent with the convention's own ladder route, so this
// refuses them.
inline mat2c old_convention_shortcut(const direction& b, const direction& c,
                                     component_axis which,
                                     const phase_convention& conv =
                                         phase_convention::old_phase()) {
  if (conv.which != phase_convention::kind::old_phase) {
    throw convention_unsupported_error(
        "old_convention_shortcut: argument substitution only reproduces the "
        "component operators under the old phase convention");
  }
  return detail::substituted_component(b, c, conv, which);
}

struct operator_set {
  direction b{};
  direction c{};
  phase_convention convention{};
  mat2c sigma_c{}, sigma_x{}, sigma_y{};
  mat2c sigma_plus{}, sigma_minus{};
  vec2c eig_c_plus{}, eig_c_minus{};
  vec2c eig_x_plus{}, eig_x_minus{};
  vec2c eig_y_plus{}, eig_y_minus{};
};

// Full operator set along the fixed construction route. Validates the
// basic structure (Hermiticity and squaring to I) as a guard against
// internal inconsistencies.
inline operator_set build_operator_set(const direction& b, const direction& c,
                                       const phase_convention& conv,
                                       double tol = default_tolerance) {
  operator_set s;
  s.b = b;
  s.c = c;
  s.convention = conv;
  s.sigma_c = generalized_component(b, c, conv);
  std::tie(s.eig_c_plus, s.eig_c_minus) = eigenvectors_of_component(b, c, conv);
  std::tie(s.sigma_plus, s.sigma_minus) = ladder_operators(s.eig_c_plus, s.eig_c_minus, tol);
  std::tie(s.sigma_x, s.sigma_y) = xy_from_ladder(s.sigma_plus, s.sigma_minus);
  std::tie(s.eig_x_plus, s.eig_x_minus) =
      rotated_eigenvectors_x(s.sigma_y, s.eig_c_plus, s.eig_c_minus);
  std::tie(s.eig_y_plus, s.eig_y_minus) =
      rotated_eigenvectors_y(s.sigma_x, s.eig_c_plus, s.eig_c_minus);
  for (const mat2c* m : {&s.sigma_c, &s.sigma_x, &s.sigma_y}) {
    if (!is_hermitian(*m, tol) ||
        norm_inf(*m * *m - mat2c::identity()) > tol) {
      throw error("build_operator_set: component failed its structural invariants");
    }
  }
  return s;
}

}  // namespace spinphase
