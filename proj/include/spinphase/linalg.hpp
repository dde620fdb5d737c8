#pragma once

// Fixed-size complex linear algebra for two-state systems: 2-vectors,
// 2x2 matrices, and a closed-form Hermitian eigensolver with a pinned
// eigenvalue order and phase convention.

#include <array>
#include <cmath>
#include <complex>

#include "spinphase/errors.hpp"

namespace spinphase {

using cplx = std::complex<double>;

inline constexpr double default_tolerance = 1e-12;

struct vec2c {
  cplx x{}, y{};

  cplx& operator[](int i) { return i == 0 ? x : y; }
  const cplx& operator[](int i) const { return i == 0 ? x : y; }
};

struct mat2c {
  // Row-major entries a(row, col).
  cplx m11{}, m12{}, m21{}, m22{};

  cplx& operator()(int r, int c) {
    return r == 0 ? (c == 0 ? m11 : m12) : (c == 0 ? m21 : m22);
  }
  const cplx& operator()(int r, int c) const {
    return r == 0 ? (c == 0 ? m11 : m12) : (c == 0 ? m21 : m22);
  }

  static mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline vec2c operator+(const vec2c& a, const vec2c& b) { return {a.x + b.x, a.y + b.y}; }
inline vec2c operator-(const vec2c& a, const vec2c& b) { return {a.x - b.x, a.y - b.y}; }
inline vec2c operator*(const cplx& s, const vec2c& v) { return {s * v.x, s * v.y}; }

inline mat2c operator+(const mat2c& a, const mat2c& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
inline mat2c operator-(const mat2c& a, const mat2c& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
inline mat2c operator*(const cplx& s, const mat2c& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
inline mat2c operator*(const mat2c& a, const mat2c& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}
inline vec2c operator*(const mat2c& a, const vec2c& v) {
  return {a.m11 * v.x + a.m12 * v.y, a.m21 * v.x + a.m22 * v.y};
}

inline mat2c adjoint(const mat2c& a) {
  using std::conj;
  return {conj(a.m11), conj(a.m21), conj(a.m12), conj(a.m22)};
}

inline mat2c commutator(const mat2c& a, const mat2c& b) { return a * b - b * a; }
inline mat2c anticommutator(const mat2c& a, const mat2c& b) { return a * b + b * a; }

// <u|v> with the left argument conjugated.
inline cplx inner(const vec2c& u, const vec2c& v) {
  return std::conj(u.x) * v.x + std::conj(u.y) * v.y;
}

// |u><v|
inline mat2c outer(const vec2c& u, const vec2c& v) {
  using std::conj;
  return {u.x * conj(v.x), u.x * conj(v.y), u.y * conj(v.x), u.y * conj(v.y)};
}

inline double norm(const vec2c& v) { return std::sqrt(std::norm(v.x) + std::norm(v.y)); }

// Entrywise max-magnitude norms; the library's residuals are all expressed
// in this norm.
inline double norm_inf(const vec2c& v) { return std::max(std::abs(v.x), std::abs(v.y)); }
inline double norm_inf(const mat2c& a) {
  return std::max(std::max(std::abs(a.m11), std::abs(a.m12)),
                  std::max(std::abs(a.m21), std::abs(a.m22)));
}

inline bool is_unitary(const mat2c& a, double tol = default_tolerance) {
  return norm_inf(adjoint(a) * a - mat2c::identity()) <= tol;
}

inline bool is_hermitian(const mat2c& a, double tol = default_tolerance) {
  return norm_inf(a - adjoint(a)) <= tol;
}

struct eigen_pair {
  double value{};
  vec2c vector{};
};

// Multiplies v by a unit phase so its first component of magnitude > tol
// becomes real and positive.
inline vec2c phase_fix(const vec2c& v, double tol = default_tolerance) {
  cplx lead = std::abs(v.x) > tol ? v.x : v.y;
  double mag = std::abs(lead);
  if (mag == 0.0) return v;
  return (std::conj(lead) / mag) * v;
}

// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
//
// Returns the eigenpairs in descending eigenvalue order, each eigenvector
// unit-norm and phase-fixed (first nonzero component real positive). Used
// throughout as the independent oracle for eigenvector claims. When the
// spectral gap is below 1e-10 any orthonormal pair is a valid answer; the
// standard basis is returned.
inline std::array<eigen_pair, 2> hermitian_eig2(const mat2c& h,
                                                double tol = default_tolerance) {
  if (!is_hermitian(h, tol)) {
    throw not_hermitian_error("hermitian_eig2: matrix is not Hermitian within tolerance");
  }
  const double a = h.m11.real();
  const double d = h.m22.real();
  const cplx b = 0.5 * (h.m12 + std::conj(h.m21));
  const double mean = 0.5 * (a + d);
  const double diff = 0.5 * (a - d);
  const double r = std::hypot(diff, std::abs(b));
  const double lam1 = mean + r;
  const double lam2 = mean - r;

  if (2.0 * r < 1e-10) {
    return {eigen_pair{lam1, {1.0, 0.0}}, eigen_pair{lam2, {0.0, 1.0}}};
  }
  if (std::abs(b) == 0.0) {
    vec2c e1{1.0, 0.0}, e2{0.0, 1.0};
    if (a >= d) return {eigen_pair{lam1, e1}, eigen_pair{lam2, e2}};
    return {eigen_pair{lam1, e2}, eigen_pair{lam2, e1}};
  }
  // (diff + r, conj(b)) and (b, -(diff + r)) are exactly orthogonal and both
  // nonzero once |b| > 0.
  const double t = diff + r;
  vec2c v1{cplx(t, 0.0), std::conj(b)};
  vec2c v2{b, cplx(-t, 0.0)};
  v1 = (1.0 / norm(v1)) * v1;
  v2 = (1.0 / norm(v2)) * v2;
  return {eigen_pair{lam1, phase_fix(v1, tol)}, eigen_pair{lam2, phase_fix(v2, tol)}};
}

// Residual of v against the closest global-phase multiple of w:
// min over unit phases z of ||v - z*w||_inf. Also exposes the aligning
// phase angle for callers that report it.
inline double phase_aligned_residual(const vec2c& v, const vec2c& w,
                                     double* phase_out = nullptr) {
  cplx ov = inner(w, v);
  cplx z = std::abs(ov) == 0.0 ? cplx(1.0, 0.0) : ov / std::abs(ov);
  if (phase_out) *phase_out = std::arg(z);
  return norm_inf(v - z * w);
}

}  // namespace spinphase
