#include <catch2/catch_amalgamated.hpp>

#include "spinphase/linalg.hpp"
#include "spinphase/rng.hpp"

#if __has_include(<Eigen/Dense>)
#include <Eigen/Dense>
#define SPINPHASE_HAVE_EIGEN 1
#endif

using namespace spinphase;

namespace {
const cplx im(0.0, 1.0);
const mat2c px{0.0, 1.0, 1.0, 0.0};
const mat2c py{0.0, -im, im, 0.0};
const mat2c pz{1.0, 0.0, 0.0, -1.0};

mat2c random_hermitian(splitmix64& rng) {
  const double a = rng.uniform(-2.0, 2.0);
  const double d = rng.uniform(-2.0, 2.0);
  const cplx off(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
  return {cplx(a), off, std::conj(off), cplx(d)};
}
}  // namespace

TEST_CASE("matrix algebra basics") {
  CHECK(norm_inf(commutator(px, py) - 2.0 * im * pz) < 1e-15);
  CHECK(norm_inf(anticommutator(px, py)) < 1e-15);
  CHECK(norm_inf(adjoint(py) - py) < 1e-15);
  CHECK(is_unitary(px));
  CHECK(is_hermitian(pz));
  CHECK_FALSE(is_hermitian(mat2c{0.0, 1.0, 2.0, 0.0}));

  const vec2c u{1.0, im};
  const vec2c v{2.0, 0.0};
  CHECK(std::abs(inner(u, v) - cplx(2.0)) < 1e-15);
  const mat2c ow = outer(u, u);
  CHECK(std::abs(ow(0, 1) - (-im)) < 1e-15);
  CHECK(norm(u) == Catch::Approx(std::sqrt(2.0)));
  CHECK(norm_inf(u) == Catch::Approx(1.0));
}

TEST_CASE("closed-form Hermitian eigen decomposition") {
  splitmix64 rng(314);
  for (int k = 0; k < 200; ++k) {
    const mat2c h = random_hermitian(rng);
    const auto eig = hermitian_eig2(h);
    CHECK(eig[0].value >= eig[1].value);
    for (const auto& pair : eig) {
      CHECK(norm(h * pair.vector - cplx(pair.value) * pair.vector) < 1e-12);
      CHECK(std::abs(norm(pair.vector) - 1.0) < 1e-12);
    }
    CHECK(std::abs(inner(eig[0].vector, eig[1].vector)) < 1e-12);

#ifdef SPINPHASE_HAVE_EIGEN
    Eigen::Matrix2cd em;
    em << h.m11, h.m12, h.m21, h.m22;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(em);
    // Eigen reports ascending order.
    CHECK(eig[1].value == Catch::Approx(solver.eigenvalues()(0)).margin(1e-12));
    CHECK(eig[0].value == Catch::Approx(solver.eigenvalues()(1)).margin(1e-12));
#endif
  }
}

TEST_CASE("degenerate spectra fall back to the standard basis") {
  const mat2c h = 3.0 * mat2c::identity();
  const auto eig = hermitian_eig2(h);
  CHECK(eig[0].value == Catch::Approx(3.0));
  CHECK(eig[1].value == Catch::Approx(3.0));
  CHECK(norm(eig[0].vector - vec2c{1.0, 0.0}) < 1e-15);
  CHECK(norm(eig[1].vector - vec2c{0.0, 1.0}) < 1e-15);
}

TEST_CASE("phase fixing and phase-aligned residuals") {
  const vec2c v{cplx(0.0, 0.5), cplx(0.8, 0.1)};
  const vec2c fixed = phase_fix(v);
  // Same ray, leading significant component rotated onto the positive axis.
  CHECK(std::abs(std::arg(fixed.x)) < 1e-14);
  CHECK(phase_aligned_residual(v, fixed) < 1e-14);

  // v equals e^{-i 1.234} w, and the reported angle is the phase carried by
  // v relative to w.
  const vec2c w = std::polar(1.0, 1.234) * v;
  double angle = 0.0;
  CHECK(phase_aligned_residual(v, w, &angle) < 1e-14);
  CHECK(std::abs(std::polar(1.0, angle) - std::polar(1.0, -1.234)) < 1e-13);

  const vec2c other{1.0, 0.0};
  CHECK(phase_aligned_residual(v, other) > 0.1);
}
