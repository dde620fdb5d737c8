#pragma once

// Generalized probability amplitudes between two quantization directions.
//
// For directions a and c under one phase convention, the amplitude matrix is
//
//   psi(i, n) = <xi_n(c) | xi_i(a)>,
//
// the amplitude for preparing outcome i along a and measuring outcome n
// along c. Rows index the initial outcome (+, -), columns the final one.
// Equivalently psi = Xi_a Xi_c^dagger where Xi_d stacks xi+(d), xi-(d) as
// rows; unitarity and the composition rule below follow directly.

#include <array>

#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/linalg.hpp"
#include "spinphase/observable.hpp"

namespace spinphase {

struct amplitude_matrix {
  mat2c psi{};
  direction from{};
  direction to{};
  phase_convention convention{};
};

namespace detail {

// Xi_d: rows are xi+(d), xi-(d).
inline mat2c stacked_basis(const basis_pair& b) {
  return {b.xi_plus.x, b.xi_plus.y, b.xi_minus.x, b.xi_minus.y};
}

}  // namespace detail

inline amplitude_matrix transition_amplitudes(const direction& a, const direction& c,
                                              const phase_convention& conv) {
  const mat2c xa = detail::stacked_basis(basis_pair_for(a, conv));
  const mat2c xc = detail::stacked_basis(basis_pair_for(c, conv));
  return {xa * adjoint(xc), a, c, conv};
}

// |psi(i, n)|^2, the measurement probabilities. Convention independent.
inline std::array<std::array<double, 2>, 2> probabilities(const amplitude_matrix& m) {
  return {{{std::norm(m.psi.m11), std::norm(m.psi.m12)},
           {std::norm(m.psi.m21), std::norm(m.psi.m22)}}};
}

// Chains two amplitude sets through a shared intermediate direction:
// psi(a->b) psi(b->c) = psi(a->c). The intermediate direction drops out.
inline amplitude_matrix compose(const amplitude_matrix& x, const amplitude_matrix& p) {
  if (x.to != p.from) {
    throw direction_mismatch_error(
        "compose: intermediate directions disagree (x.to must equal p.from)");
  }
  if (x.convention != p.convention) {
    throw convention_mismatch_error("compose: phase conventions disagree");
  }
  return {x.psi * p.psi, x.from, p.to, x.convention};
}

// Residual of the reciprocity relation psi(a->c) = psi(c->a)^dagger.
inline double hermiticity_check(const direction& a, const direction& c,
                                const phase_convention& conv) {
  return norm_inf(transition_amplitudes(a, c, conv).psi -
                  adjoint(transition_amplitudes(c, a, conv).psi));
}

// Expectation value of the observable r for a system prepared with the
// given outcome along m.from and measured along m.to, via the probability
// form sum_n |psi(i, n)|^2 r_n.
inline double expectation(outcome initial, const amplitude_matrix& m,
                          const observable_spec& r) {
  const auto p = probabilities(m);
  const int i = index_of(initial);
  return p[i][0] * r.r1 + p[i][1] * r.r2;
}

}  // namespace spinphase
