#include <cmath>

#include "doctest.h"
#include "dtheta/error.hpp"
#include "dtheta/field.hpp"
#include "dtheta/theta.hpp"
#include "support.hpp"

using namespace dtheta;
using testing::Draw;
using testing::rel;

TEST_SUITE("theta") {

TEST_CASE("Jacobi theta oracle") {
  // θ3(0, e^{−πx}) from mpmath.
  CHECK(rel(jacobi_w1_direct(0.5), 1.41949548808376612) < 1e-14);
  CHECK(rel(jacobi_w1_direct(2.0), 1.00373488548773909) < 1e-14);
  CHECK(rel(jacobi_w1_direct(cplx(1.0, 1.0)), 0.913579138156116821) < 1e-14);
  const auto q = field_rationals();
  for (double x : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(std::abs(w_theta(q, 1, x) - jacobi_w1_direct(x)) < 1e-9);
    CHECK(check_theta(q, 1, x).rel_error < 1e-10);
  }
  CHECK(std::abs(w_theta(q, 1, cplx(1.0, 1.0)) - jacobi_w1_direct(cplx(1.0, 1.0))) < 1e-9);
}

TEST_CASE("Ramanujan-Koshliakov oracle") {
  // γ − log 4π + log √x + 4 Σ d(n) K_0(2πn√x), summed in mpmath.
  CHECK(rel(koshliakov_w2_direct(0.5), -2.27264878480535795) < 1e-13);
  CHECK(rel(koshliakov_w2_direct(1.0), -1.95013246000097794) < 1e-13);
  CHECK(rel(koshliakov_w2_direct(2.0), -1.60700536699123538) < 1e-13);
  const auto q = field_rationals();
  for (double x : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(std::abs(w_theta(q, 2, x) - koshliakov_w2_direct(x)) < 1e-7);
    const ThetaReport r = check_theta(q, 2, x);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-8);
  }
}

TEST_CASE("theta relation across fields") {
  struct Case {
    FieldDescriptor f;
    int k;
    cplx x;
  };
  const std::vector<Case> cases{
      {field_quadratic(5), 1, 0.5},        {field_quadratic(5), 1, 2.0},
      {field_quadratic(5), 1, 4.0},        {field_quadratic(5), 1, std::polar(2.0, kPi / 3.0)},
      {field_quadratic(5), 2, 1.7},        {field_quadratic(-4), 1, 0.6},
      {field_quadratic(-4), 1, std::polar(1.5, 1.2)}, {field_cubic7(), 1, 1.3},
      {field_cubic7(), 1, cplx(0.0, 1.0)}, {field_cyclotomic5(), 1, 2.0},
      {field_quartic16(), 1, 1.2},         {field_rationals(), 3, 1.5}};
  for (const auto& c : cases) {
    CAPTURE(c.f.name());
    CAPTURE(c.k);
    CAPTURE(c.x);
    const ThetaReport r = check_theta(c.f, c.k, c.x);
    CHECK(r.converged);
    CHECK(r.rel_error < 1e-10);
  }
}

TEST_CASE("theta relation on random points of the sector") {
  Draw draw(0x5eed0301);
  const std::vector<FieldDescriptor> fields{field_rationals(), field_quadratic(5), field_quadratic(-3),
                                            field_cubic7()};
  for (int i = 0; i < 16; ++i) {
    const auto& f = fields[i % fields.size()];
    const double limit = 0.5 * kPi * f.degree() - 0.3;
    const cplx x = std::polar(std::exp(draw.uniform(-1.0, 1.0)), draw.uniform(-1.0, 1.0) * std::min(limit, 2.5));
    CAPTURE(f.name());
    CAPTURE(x);
    CHECK(check_theta(f, 1, x).rel_error < 1e-9);
  }
}

TEST_CASE("residues at 0 and 1") {
  const auto q = field_rationals();
  CHECK(std::abs(r0_theta(q, 1, 3.0) + 1.0) < 1e-12);
  CHECK(std::abs(r1_theta(q, 1, 3.0) - 1.0 / std::sqrt(3.0)) < 1e-12);
  // Double pole at 0 for k = 2: the residue is linear in log x.
  CHECK(r0_theta_polynomial(q, 2).degree() == 1);
  const auto f5 = field_quadratic(5);
  CHECK(std::abs(r0_theta(f5, 1, 2.0) - 4.0 * f5.constants().c) < 1e-11);
  for (const auto& f : {q, f5, field_cubic7(), field_cyclotomic5()})
    for (int k : {1, 2})
      for (double x : {0.4, 1.0, 3.3}) {
        CAPTURE(f.name());
        CAPTURE(k);
        const cplx a = r1_theta(f, k, x);
        const cplx b = -r0_theta(f, k, 1.0 / x) / std::sqrt(x);
        CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
      }
}

TEST_CASE("series truncation") {
  const auto f = field_cubic7();
  const SeriesResult r = s_series(f, 1, 0.8, 1e-12);
  CHECK(r.converged);
  CHECK(r.tail_bound < 1e-12);
  const SeriesResult loose = s_series(f, 1, 0.8, 1e-6);
  CHECK(loose.cutoff <= r.cutoff);
  CHECK(std::abs(loose.value - r.value) < 1e-6);
  CHECK_THROWS_AS(s_series(field_rationals(), 1, std::polar(1.0, 1.5)), DomainError);
  CHECK_THROWS_AS(s_series(field_rationals(), 1, 0.0), DomainError);
  CHECK_THROWS_AS(s_series(field_rationals(), 0, 1.0), DomainError);
}

TEST_CASE("evaluation at x = -1") {
  // The relation pairs e^{iπ} with e^{−iπ}, so only Re S + Im S = 2^{r1} C_F is forced.
  for (const auto& f : {field_cubic7(), field_cyclotomic5()}) {
    const ExactEvalReport r = exact_eval_check(f);
    CAPTURE(f.name());
    CHECK(r.branch_residual < 1e-10);
    CHECK(r.rhs == doctest::Approx(std::pow(2.0, f.r1()) * f.constants().c));
  }
  const ExactEvalReport c7 = exact_eval_check(field_cubic7());
  CHECK(c7.residual > 0.1);
  CHECK_THROWS_AS(exact_eval_check(field_quadratic(5)), DomainError);
}

}  // TEST_SUITE
