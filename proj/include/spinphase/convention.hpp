#pragma once

// Eigenvector phase conventions for the spin projection [sigma.n] and the
// resulting basis pairs. Three conventions are supported:
//
//   old:    xi+ = (cos t/2, e^{i p} sin t/2),   xi- = (sin t/2, -e^{i p} cos t/2)
//   new:    xi+ = (e^{-i p} cos t/2, sin t/2),  xi- as in old
//   custom: the old pair multiplied by global phases e^{i a+}, e^{i a-}
//
// All three give orthonormal eigenpairs of [sigma.n] with eigenvalues +1, -1.

#include <cmath>
#include <string>

#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/linalg.hpp"

namespace spinphase {

struct phase_convention {
  enum class kind { old_phase, new_phase, custom_phase };

  kind which = kind::old_phase;
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;

  static phase_convention old_phase() { return {kind::old_phase, 0.0, 0.0}; }
  static phase_convention new_phase() { return {kind::new_phase, 0.0, 0.0}; }
  static phase_convention custom(double alpha_plus, double alpha_minus) {
    if (!std::isfinite(alpha_plus) || !std::isfinite(alpha_minus)) {
      throw non_finite_error("phase_convention::custom: phases must be finite");
    }
    return {kind::custom_phase, alpha_plus, alpha_minus};
  }

  friend bool operator==(const phase_convention& a, const phase_convention& b) {
    if (a.which != b.which) return false;
    if (a.which != kind::custom_phase) return true;
    return a.alpha_plus == b.alpha_plus && a.alpha_minus == b.alpha_minus;
  }
  friend bool operator!=(const phase_convention& a, const phase_convention& b) {
    return !(a == b);
  }

  std::string name() const {
    switch (which) {
      case kind::old_phase: return "old";
      case kind::new_phase: return "new";
      default:
        return "custom:" + std::to_string(alpha_plus) + "," + std::to_string(alpha_minus);
    }
  }
};

struct basis_pair {
  vec2c xi_plus{};
  vec2c xi_minus{};
  direction dir{};
  phase_convention convention{};
};

namespace detail {

// Closed-form basis evaluation at raw angles, without direction
// normalization. The argument-substitution shortcuts operate on formulas,
// where e.g. theta' - pi/2 can be negative; folding it onto [0, pi] would
// flip the sign of xi-, so the shortcut paths must evaluate here.
inline basis_pair basis_pair_at(double theta, double phi, const phase_convention& conv) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cplx ep = std::polar(1.0, phi);
  vec2c plus, minus{s, -ep * c};
  switch (conv.which) {
    case phase_convention::kind::old_phase:
      plus = {cplx(c, 0.0), ep * s};
      break;
    case phase_convention::kind::new_phase:
      plus = {std::conj(ep) * c, cplx(s, 0.0)};
      break;
    case phase_convention::kind::custom_phase: {
      plus = std::polar(1.0, conv.alpha_plus) * vec2c{cplx(c, 0.0), ep * s};
      minus = std::polar(1.0, conv.alpha_minus) * minus;
      break;
    }
  }
  basis_pair out;
  out.xi_plus = plus;
  out.xi_minus = minus;
  out.convention = conv;
  return out;
}

}  // namespace detail

// The (+1, -1) eigenvector pair of [sigma.n] under the given convention.
// Uses the stored phi verbatim, including at the poles.
inline basis_pair basis_pair_for(const direction& n, const phase_convention& conv) {
  basis_pair out = detail::basis_pair_at(n.theta, n.phi, conv);
  out.dir = n;
  return out;
}

// Unit-phase ratio delta such that v = e^{i delta} u, if one exists.
// The error is defensive: any two vectors produced by the conventions
// above for the same direction are phase related by construction.
inline double relative_phase(const vec2c& u, const vec2c& v,
                             double tol = default_tolerance) {
  const cplx lead = std::abs(u.x) >= std::abs(u.y) ? u.x : u.y;
  const cplx other = std::abs(u.x) >= std::abs(u.y) ? v.x : v.y;
  if (std::abs(lead) <= tol) {
    throw not_phase_related_error("relative_phase: reference vector is null");
  }
  const cplx z = other / lead;
  if (std::abs(std::abs(z) - 1.0) > 1e3 * tol ||
      norm_inf(v - z * u) > 1e3 * tol) {
    throw not_phase_related_error("relative_phase: vectors differ by more than a phase");
  }
  return std::arg(z);
}

struct phase_relation_result {
  double delta_plus{};
  double delta_minus{};
};

// Phases relating the basis pairs of two conventions at one direction:
// xi_b(+-) = e^{i delta(+-)} xi_a(+-), reported as principal values.
inline phase_relation_result phase_relation(const phase_convention& conv_a,
                                            const phase_convention& conv_b,
                                            const direction& n) {
  const basis_pair a = basis_pair_for(n, conv_a);
  const basis_pair b = basis_pair_for(n, conv_b);
  return {relative_phase(a.xi_plus, b.xi_plus), relative_phase(a.xi_minus, b.xi_minus)};
}

}  // namespace spinphase
