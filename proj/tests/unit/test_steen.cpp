#include <cmath>

#include "doctest.h"
#include "dtheta/bessel.hpp"
#include "dtheta/error.hpp"
#include "dtheta/steen.hpp"
#include "support.hpp"

using namespace dtheta;
using testing::Draw;
using testing::rel;

// Meijer-G references frozen from mpmath: Z̃_{1,1}(x) = G^{3,0}_{0,3}(x²/4 | 0,0,½)/√π,
// Z̃_{3,0}(x) = 2 G^{3,0}_{0,3}(x² | 0,0,0), V(x|a) = G^{n,0}_{0,n}(x | a).

TEST_SUITE("steen") {

TEST_CASE("kernel closed forms") {
  for (double x : {0.5, 1.0, 2.0, 5.0}) {
    CAPTURE(x);
    CHECK(rel(z_tilde(1, 0, x), 2.0 * std::exp(-x * x)) < 1e-10);
    CHECK(rel(z_tilde(0, 1, x), std::exp(-x)) < 1e-10);
    CHECK(rel(z_tilde(2, 0, x), 4.0 * bessel_k(0.0, 2.0 * x)) < 1e-10);
    CHECK(rel(z_tilde(0, 2, x), 2.0 * bessel_k(0.0, 2.0 * std::sqrt(x))) < 1e-10);
    CHECK(rel(z_shifted(1, 0, x), 2.0 * std::expm1(-x * x)) < 1e-10);
    CHECK(rel(z_shifted(0, 1, x), std::expm1(-x)) < 1e-10);
  }
  CHECK_FALSE(z_tilde_closed_form(1, 1, 1.0).has_value());
  CHECK(rel(*z_tilde_closed_form(2, 0, 1.5), 4.0 * bessel_k(0.0, 3.0)) < 1e-14);
}

TEST_CASE("kernels without closed form against Meijer G") {
  const double x11[] = {1.519791020113717, 0.37385746452305604, 0.057118120829318255};
  const double x30[] = {3.4974478281836631, 0.32808321349675215, 0.014836271383388875};
  const double xs[] = {0.3, 1.0, 2.5};
  for (int i = 0; i < 3; ++i) {
    CHECK(rel(z_tilde(1, 1, xs[i]), x11[i]) < 1e-10);
    CHECK(rel(z_tilde(3, 0, xs[i]), x30[i]) < 1e-10);
  }
  CHECK(rel(z_tilde(1, 1, cplx(1.0, 0.8)), cplx(0.1178122706851777, -0.28552177398554711)) < 1e-10);
  CHECK(rel(steen_v(2.0, {0.0, 0.5, 1.0}), 0.10251197441769431) < 1e-10);
  CHECK(rel(steen_v(0.7, {0.25, -0.25, 0.1}), 0.26979108250839912) < 1e-10);
}

TEST_CASE("Steen function special cases") {
  // V(x|a) = x^a e^{−x};  V(x|a,b) = 2 x^{(a+b)/2} K_{a−b}(2√x).
  for (double x : {0.4, 1.0, 3.0}) {
    CHECK(rel(steen_v(x, {0.0}), std::exp(-x)) < 1e-10);
    CHECK(rel(steen_v(x, {1.5}), std::pow(x, 1.5) * std::exp(-x)) < 1e-10);
    CHECK(rel(steen_v(x, {0.0, 0.0}), 2.0 * bessel_k(0.0, 2.0 * std::sqrt(x))) < 1e-10);
    CHECK(rel(steen_v(x, {0.5, -0.5}), 2.0 * bessel_k(1.0, 2.0 * std::sqrt(x))) < 1e-10);
  }
  CHECK(rel(steen_v(4.0, {0.5, -0.5}), 0.0249669977745369) < 1e-10);
}

TEST_CASE("residues at zero") {
  // Γ(s/2)² = 4/s² − 4γ/s + ...: residue of Γ(s/2)² x^{−s} is −4γ − 4 log x.
  const LogPolynomial p = kernel_residue_at_zero(2, 0);
  CHECK(p.degree() == 1);
  CHECK(std::abs(p(std::exp(0.7)) - (-4.0 * kEulerGamma - 2.8)) < 1e-12);
  CHECK(std::abs(kernel_residue_at_zero(1, 0)(3.0) - 2.0) < 1e-13);
  CHECK(std::abs(kernel_residue_at_zero(0, 1)(3.0) - 1.0) < 1e-13);
  CHECK(std::abs(r0_gamma(2, 1.0) + 4.0 * kEulerGamma) < 1e-12);
  for (double x : {0.5, 2.0}) {
    const cplx expect = 4.0 * bessel_k(0.0, 2.0 * x) + 4.0 * std::log(x) + 4.0 * kEulerGamma;
    CHECK(rel(z_shifted(2, 0, x), expect) < 1e-10);
    CHECK(rel(z_shifted_via_residue(2, 0, x), expect) < 1e-10);
  }
}

TEST_CASE("shifted kernels: quadrature left of 0 equals Z̃ minus the residue") {
  Draw draw(0x5eed0201);
  for (int i = 0; i < 12; ++i) {
    const int r1 = draw.integer(0, 3), r2 = draw.integer(r1 == 0 ? 1 : 0, 2);
    const double d = r1 + 2.0 * r2;
    const cplx x = std::polar(draw.uniform(0.3, 4.0), draw.uniform(-0.6, 0.6) * (kPi * d / 4.0 - 0.2));
    CAPTURE(r1);
    CAPTURE(r2);
    CAPTURE(x);
    const cplx a = z_shifted(r1, r2, x);
    const cplx b = z_shifted_via_residue(r1, r2, x);
    CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("Mellin-Barnes value does not depend on the line") {
  for (auto [r1, r2] : {std::pair{1, 0}, {2, 0}, {1, 1}, {0, 2}, {3, 0}}) {
    const cplx x = 1.3;
    const cplx base = z_tilde(r1, r2, x, 0.5);
    for (double c : {0.25, 1.0, 2.0, 3.5}) CHECK(rel(z_tilde(r1, r2, x, c), base) < 1e-10);
  }
  CHECK_THROWS_AS(z_tilde(1, 0, 1.0, 0.0), DomainError);
}

TEST_CASE("node doubling is stable on closed-form cases") {
  for (double x : {0.5, 2.0}) {
    const IntegralResult r = z_tilde_result(2, 0, x);
    CHECK(r.converged);
    CHECK_FALSE(r.failed);
    CHECK(r.error_estimate < 1e-11 * std::max(std::abs(r.value), 1e-5 * r.abs_mass));
  }
}

TEST_CASE("sector limits") {
  // d = 1: |Arg x| must stay below π/4 − 0.1.
  CHECK_NOTHROW(z_tilde(1, 0, std::polar(2.0, 0.6)));
  CHECK_THROWS_AS(z_tilde(1, 0, std::polar(2.0, 0.75)), DomainError);
  CHECK(rel(z_tilde(1, 0, std::polar(2.0, 0.6)), 2.0 * std::exp(-std::pow(std::polar(2.0, 0.6), 2))) < 1e-10);
  // Near the edge for d = 2.
  const cplx x = std::polar(3.0, kPi / 2.0 - 0.15);
  CHECK(rel(z_tilde(0, 1, x), std::exp(-x)) < 1e-9);
}

TEST_CASE("gamma products") {
  const GammaProduct g = GammaProduct::kernel(2, 1);
  CHECK(g.rightmost_pole() == 0.0);
  CHECK(g.pole_order(0.0) == 3);
  CHECK(g.pole_order(-1.0) == 1);
  CHECK(g.pole_order(-2.0) == 3);
  CHECK(g.pole_order(0.5) == 0);
  CHECK(std::abs(g.decay_rate() - kPi) < 1e-15);
  const GammaProduct v = GammaProduct::steen({0.5, -0.5});
  CHECK(v.rightmost_pole() == 0.5);
  const cplx s(0.8, 2.0);
  const double h = 1e-6;
  const cplx fd = (g.log_value(s + h) - g.log_value(s - h)) / (2.0 * h);
  CHECK(std::abs(fd - g.log_derivative(s)) < 1e-8);
}

TEST_CASE("tail bound dominates the kernels") {
  Draw draw(0x5eed0202);
  for (int i = 0; i < 60; ++i) {
    const int r1 = draw.integer(0, 4), r2 = draw.integer(r1 == 0 ? 1 : 0, 2);
    const double y = draw.uniform(kTailBoundStart, 30.0);
    CAPTURE(r1);
    CAPTURE(r2);
    CAPTURE(y);
    CHECK(std::abs(z_tilde(r1, r2, y)) <= z_tail_bound(r1, r2, y));
    const double d = r1 + 2.0 * r2;
    const cplx yc = std::polar(y, draw.uniform(-1.0, 1.0) * (kPi * d / 4.0 - 0.3));
    CHECK(std::abs(z_tilde(r1, r2, yc)) <= z_tail_bound(r1, r2, yc));
  }
}

TEST_CASE("residue series about zero") {
  const KernelSeries ks(2, 0);
  CHECK(ks.residue(1).coeffs().empty());
  CHECK(ks.residue(2).degree() == 1);
  Draw draw(0x5eed0203);
  for (auto [r1, r2] : {std::pair{1, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 1}}) {
    const KernelSeries k(r1, r2);
    for (int i = 0; i < 4; ++i) {
      const cplx u = std::polar(draw.uniform(0.05, 0.5), draw.uniform(-0.3, 0.3));
      CHECK(rel(k.z_tilde(u), z_tilde(r1, r2, u)) < 1e-10);
      CHECK(std::abs(k.z(u) - z_shifted(r1, r2, u)) < 1e-10 * std::max(1.0, std::abs(k.z(u))));
    }
    CHECK(rel(k.z(3.0), z_shifted(r1, r2, 3.0)) < 1e-10);
  }
  CHECK(rel(KernelSeries(1, 0).z(0.2), 2.0 * std::expm1(-0.04)) < 1e-13);
}

}  // TEST_SUITE
