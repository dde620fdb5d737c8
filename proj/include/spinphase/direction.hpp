#pragma once

// Quantization directions as polar angles and the spin projection matrix
// sigma.n for a direction n.

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/errors.hpp"
#include "spinphase/linalg.hpp"

namespace spinphase {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

namespace detail {
inline double wrap_2pi(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}
}  // namespace detail

// A direction on the unit sphere, stored as polar angle theta in [0, pi]
// and azimuth phi in [0, 2pi). Construction normalizes: negative or
// out-of-range theta folds via (theta, phi) -> (-theta, phi + pi), and phi
// wraps mod 2pi. The stored phi is kept verbatim at the poles; equality
// ignores phi there since all azimuths describe the same axis.
struct direction {
  double theta{};
  double phi{};

  direction() = default;
  direction(double theta_, double phi_) {
    if (!std::isfinite(theta_) || !std::isfinite(phi_)) {
      throw non_finite_error("direction: angles must be finite");
    }
    double t = std::fmod(theta_, two_pi);
    if (t < 0.0) t += two_pi;
    if (t > pi) {
      t = two_pi - t;
      phi_ += pi;
    }
    theta = t;
    phi = detail::wrap_2pi(phi_);
  }

  bool at_pole() const { return theta == 0.0 || theta == pi; }

  friend bool operator==(const direction& a, const direction& b) {
    if (a.theta != b.theta) return false;
    return a.at_pole() || a.phi == b.phi;
  }
  friend bool operator!=(const direction& a, const direction& b) { return !(a == b); }
};

inline direction normalize_direction(double theta, double phi) {
  return direction(theta, phi);
}

// [sigma.n] in the standard z basis: Hermitian, traceless, determinant -1.
inline mat2c spin_projection(const direction& n) {
  const double ct = std::cos(n.theta);
  const double st = std::sin(n.theta);
  const cplx ep = std::polar(1.0, n.phi);
  return {cplx(ct, 0.0), st * std::conj(ep), st * ep, cplx(-ct, 0.0)};
}

// Parses an angle written in radians ("1.57") or degrees ("90deg").
inline double parse_angle(const std::string& text) {
  std::string body = text;
  bool degrees = false;
  if (body.size() > 3 && body.compare(body.size() - 3, 3, "deg") == 0) {
    degrees = true;
    body = body.substr(0, body.size() - 3);
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(body, &used);
  } catch (const std::exception&) {
    throw invalid_config_error("parse_angle: cannot parse '" + text + "'");
  }
  while (used < body.size() && std::isspace(static_cast<unsigned char>(body[used]))) ++used;
  if (used != body.size()) {
    throw invalid_config_error("parse_angle: trailing characters in '" + text + "'");
  }
  if (!std::isfinite(value)) {
    throw non_finite_error("parse_angle: non-finite angle");
  }
  return degrees ? value * pi / 180.0 : value;
}

}  // namespace spinphase
