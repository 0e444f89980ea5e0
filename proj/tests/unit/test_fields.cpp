#include <cmath>
#include <numeric>

#include "doctest.h"
#include "dtheta/character.hpp"
#include "dtheta/coefficients.hpp"
#include "dtheta/constants.hpp"
#include "dtheta/error.hpp"
#include "dtheta/field.hpp"
#include "dtheta/zeta.hpp"
#include "support.hpp"

using namespace dtheta;
using testing::Draw;
using testing::rel;

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Legendre symbol by listing squares.
int legendre_brute(long long a, long long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

/// Ideal counts of Q(√5): Σ_{d|n} (d/5).
long long sqrt5_count(long long n) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) s += legendre_brute(d, 5);
  return s;
}

/// Ideal counts of the cubic field of conductor 7 from prime splitting:
/// p ≡ ±1 (mod 7) splits, 7 ramifies, everything else is inert.
long long cubic7_count(long long n) {
  long long total = 1;
  for (long long p = 2; n > 1; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (p == 7) continue;
    if (p % 7 == 1 || p % 7 == 6) total *= static_cast<long long>(e + 1) * (e + 2) / 2;
    else if (e % 3 != 0) return 0;
  }
  return total;
}

long long divisors_brute(int k, long long n) {
  if (k == 1) return 1;
  long long s = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) s += divisors_brute(k - 1, n / d);
  return s;
}

}  // namespace

TEST_SUITE("fields") {

TEST_CASE("Kronecker symbol matches Euler's criterion at primes") {
  for (long long p = 3; p < 200; p += 2) {
    if (!is_prime(p)) continue;
    for (long long a = -50; a <= 50; ++a) CHECK(kronecker_symbol(a, p) == legendre_brute(a, p));
  }
  CHECK(kronecker_symbol(5, 2) == -1);
  CHECK(kronecker_symbol(-7, 2) == 1);
  CHECK(kronecker_symbol(3, 0) == 0);
  CHECK(kronecker_symbol(-1, -1) == -1);
}

TEST_CASE("Kronecker symbol is completely multiplicative in the bottom argument") {
  Draw draw(0x5eed0101);
  for (int i = 0; i < 500; ++i) {
    const int a = draw.integer(-100, 100), m = draw.integer(1, 300), n = draw.integer(1, 300);
    CHECK(kronecker_symbol(a, static_cast<long long>(m) * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n));
  }
}

TEST_CASE("character construction and validation") {
  const auto chi = DirichletCharacter::quadratic(-4);
  CHECK(chi.modulus() == 4);
  CHECK_FALSE(chi.is_even());
  CHECK(chi.conductor() == 4);
  CHECK(std::abs(chi.value(3) + 1.0) < 1e-15);
  CHECK(std::abs(chi.value(2)) == 0.0);

  const auto cubic = DirichletCharacter::power_residue(7, 3, 1);
  CHECK(cubic.order() == 3);
  CHECK(cubic.is_even());
  CHECK((cubic * cubic).same_primitive(cubic.conjugate()));
  CHECK((cubic * cubic.conjugate()).is_principal());

  // χ_{−4} induced to modulus 20 has conductor 4.
  std::vector<int> e(20);
  for (int a = 1; a <= 20; ++a) e[a - 1] = std::gcd(a, 20) > 1 ? DirichletCharacter::kZero : (a % 4 == 1 ? 0 : 1);
  const DirichletCharacter induced(20, 2, e);
  CHECK(induced.conductor() == 4);
  CHECK(induced.primitive().same_primitive(chi));

  // Not multiplicative: χ(2)χ(2) ≠ χ(4) mod 5.
  CHECK_THROWS_AS(DirichletCharacter(5, 4, {0, 1, 3, 1, -1}), ValidationError);
  // Wrong zero pattern.
  CHECK_THROWS_AS(DirichletCharacter(4, 2, {0, 0, 1, -1}), ValidationError);
  CHECK_THROWS_AS(DirichletCharacter::quadratic(12 * 4), ValidationError);
}

TEST_CASE("character values are multiplicative on random inputs") {
  Draw draw(0x5eed0102);
  const std::vector<DirichletCharacter> chars{DirichletCharacter::quadratic(5), DirichletCharacter::quadratic(-3),
                                              DirichletCharacter::power_residue(13, 4, 1),
                                              DirichletCharacter::power_residue(7, 3, 2)};
  for (const auto& c : chars)
    for (int i = 0; i < 200; ++i) {
      const int m = draw.integer(1, 10000), n = draw.integer(1, 10000);
      CHECK(std::abs(c.value(static_cast<long long>(m) * n) - c.value(m) * c.value(n)) < 1e-12);
    }
}

TEST_CASE("builtin field signatures") {
  struct Row {
    FieldDescriptor f;
    int r1, r2;
    long long disc;
  };
  const std::vector<Row> rows{{field_rationals(), 1, 0, 1},      {field_quadratic(5), 2, 0, 5},
                              {field_quadratic(-4), 0, 1, 4},    {field_quadratic(-3), 0, 1, 3},
                              {field_cubic7(), 3, 0, 49},        {field_cyclotomic5(), 0, 2, 125},
                              {field_quartic16(), 4, 0, 2048}};
  for (const auto& r : rows) {
    CAPTURE(r.f.name());
    CHECK(r.f.r1() == r.r1);
    CHECK(r.f.r2() == r.r2);
    CHECK(r.f.disc() == r.disc);
  }
  CHECK(resolve_field("sqrt5").disc() == 5);
  CHECK(resolve_field("sqrt-1").disc() == 4);
  CHECK(resolve_field("quad:-7").r2() == 1);
  CHECK(resolve_field("zeta5").degree() == 4);
}

TEST_CASE("abelian field validation") {
  const auto chi = DirichletCharacter::power_residue(7, 3, 1);
  CHECK_THROWS_AS(make_field_abelian({DirichletCharacter::principal(), chi}), ValidationError);
  CHECK_THROWS_AS(make_field_abelian({chi, chi.conjugate()}), ValidationError);
  CHECK_THROWS_AS(make_field_abelian({DirichletCharacter::principal(), DirichletCharacter::quadratic(5),
                                      DirichletCharacter::quadratic(5)}),
                  ValidationError);
  // {1, χ5, χ−4} is not closed: χ5·χ−4 is missing.
  CHECK_THROWS_AS(make_field_abelian({DirichletCharacter::principal(), DirichletCharacter::quadratic(5),
                                      DirichletCharacter::quadratic(-4)}),
                  ValidationError);
  const auto biquad = make_field_abelian({DirichletCharacter::principal(), DirichletCharacter::quadratic(5),
                                          DirichletCharacter::quadratic(-4), DirichletCharacter::quadratic(-20)});
  CHECK(biquad.r2() == 2);
  CHECK(biquad.disc() == 400);
}

TEST_CASE("character files") {
  const auto f = make_field_abelian(load_characters(testing::data_path("sqrt5.chars")));
  CHECK(f.disc() == 5);
  CHECK(make_field_abelian(load_characters(testing::data_path("cubic7.chars"))).disc() == 49);
  try {
    load_characters(testing::data_path("truncated.chars"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    load_characters(testing::data_path("garbage.chars"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(make_field_abelian(load_characters(testing::data_path("unclosed.chars"))), ValidationError);
  CHECK_THROWS_AS(load_characters(testing::data_path("missing.chars")), ParseError);
  CHECK_THROWS_AS(parse_characters("# nothing\n"), ParseError);
}

TEST_CASE("ideal counts against prime splitting") {
  const CoefficientTable a5 = ideal_coeffs(field_quadratic(5), 3000);
  for (long long n = 1; n <= 3000; ++n) CHECK(a5[n] == sqrt5_count(n));
  const CoefficientTable a7 = ideal_coeffs(field_cubic7(), 5000);
  for (long long n = 1; n <= 5000; ++n) CHECK(a7[n] == cubic7_count(n));
  const CoefficientTable aq = ideal_coeffs(field_rationals(), 100);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(aq[n] == 1);
}

TEST_CASE("Dedekind zeta equals its Dirichlet series") {
  const auto f = field_cubic7();
  const CoefficientTable a = ideal_coeffs(f, 200000);
  for (cplx s : {cplx(3.0, 0.0), cplx(2.5, 7.0)}) {
    cplx sum = 0.0;
    for (std::size_t n = a.bound(); n >= 1; --n)
      if (a[n]) sum += static_cast<double>(a[n]) * std::pow(static_cast<double>(n), -s);
    CHECK(std::abs(dedekind_zeta(s, f) - sum) < 1e-9);
  }
}

TEST_CASE("convolution and inversion on random sequences") {
  Draw draw(0x5eed0103);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> f(301);
    f[1] = draw.integer(0, 1) ? 1 : -1;
    for (std::size_t n = 2; n < f.size(); ++n) f[n] = draw.integer(-3, 3);
    const auto g = dirichlet_inverse(f);
    const auto id = dirichlet_convolve(f, g);
    for (std::size_t n = 1; n < id.size(); ++n) CHECK(id[n] == (n == 1 ? 1 : 0));
  }
  CHECK_THROWS(dirichlet_inverse({0, 2, 1}));
}

TEST_CASE("Moebius inversion is exact to 10^4") {
  for (const auto& f : {field_rationals(), field_quadratic(5), field_cubic7()})
    for (int k = 1; k <= 3; ++k) {
      const auto a = power_coeffs(f, k, 10000);
      const auto mu = moebius_coeffs(f, k, 10000);
      const auto id = dirichlet_convolve(a.values, mu.values);
      bool ok = true;
      for (std::size_t n = 1; n <= 10000; ++n) ok = ok && id[n] == (n == 1 ? 1 : 0);
      CHECK(ok);
    }
}

TEST_CASE("coefficient tables are multiplicative and bounded") {
  Draw draw(0x5eed0104);
  const auto f = field_quadratic(5);
  const auto a1 = ideal_coeffs(f, 100);
  for (int k = 1; k <= 3; ++k) {
    const auto a = power_coeffs(f, k, 20000);
    const auto mu = moebius_coeffs(f, k, 20000);
    const auto dk = divisor_function(2 * k, 20000);
    for (int i = 0; i < 300; ++i) {
      const int m = draw.integer(1, 140), n = draw.integer(1, 140);
      if (std::gcd(m, n) != 1) continue;
      CHECK(a[m * n] == a[m] * a[n]);
      CHECK(mu[m * n] == mu[m] * mu[n]);
    }
    for (std::size_t n = 1; n <= 20000; ++n) {
      CHECK(std::abs(a[n]) <= dk[n]);
      CHECK(std::abs(mu[n]) <= dk[n]);
    }
    for (long long p : {2, 3, 5, 11, 19, 29, 31}) CHECK(mu[p] == -k * a1[p]);
  }
  // μ_Q is the Möbius function.
  const auto mq = moebius_coeffs(field_rationals(), 1, 12);
  CHECK(mq.values == std::vector<std::int64_t>{0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0});
  // μ_{Q,2}(p²) = 1.
  CHECK(moebius_coeffs(field_rationals(), 2, 9)[9] == 1);
}

TEST_CASE("generalised divisor function") {
  for (int k = 1; k <= 4; ++k) {
    const auto d = divisor_function(k, 200);
    for (long long n = 1; n <= 200; ++n) CHECK(d[n] == divisors_brute(k, n));
  }
}

TEST_CASE("coefficient-file fields") {
  const auto table = parse_coefficients("# Q(sqrt 5)\n1 1\n4 1\n5 1\n9 1\n11 2\n");
  CHECK(table.size() == 12);
  CHECK(table[2] == 0);
  CHECK(table[11] == 2);
  CHECK_THROWS_AS(parse_coefficients("2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1 1\n3 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coefficients(""), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1 2\n"), ValidationError);

  const auto ref = ideal_coeffs(field_quadratic(5), 4000);
  const auto f = make_field_from_table(ref.values, 2, 0, 5, "sqrt5-table");
  CHECK_FALSE(f.is_abelian());
  CHECK(ideal_coeffs(f, 100).values == ideal_coeffs(field_quadratic(5), 100).values);
  CHECK(std::abs(dedekind_zeta(4.0, f) - dedekind_zeta(4.0, field_quadratic(5))) < 1e-9);
  CHECK_THROWS_AS(dedekind_zeta(1.2, f), UnsupportedError);
  CHECK_THROWS_AS(ideal_coeffs(f, 5000), UnsupportedError);
  CHECK_THROWS_AS(laurent_constant(f), UnsupportedError);
}

TEST_CASE("class number formula constants") {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(rel(residue_constant(field_quadratic(5)), 2.0 * std::log(phi) / std::sqrt(5.0)) < 1e-13);
  CHECK(rel(laurent_constant(field_quadratic(5)), -0.5 * std::log(phi)) < 1e-11);
  CHECK(rel(laurent_constant(field_rationals()), -0.5) < 1e-12);
  CHECK(rel(residue_constant(field_rationals()), 1.0) < 1e-15);
  // Imaginary quadratic: C = −h/w.
  CHECK(rel(laurent_constant(field_quadratic(-4)), -0.25) < 1e-11);
  CHECK(rel(laurent_constant(field_quadratic(-3)), -1.0 / 6.0) < 1e-11);
  CHECK(rel(residue_constant(field_quadratic(-4)), kPi / 4.0) < 1e-13);
  // Regulators from the units (mpmath): cubic7 R = 0.5254546821225724, h = 1, w = 2;
  // Q(ζ5) R = 2 log φ, h = 1, w = 10.
  const double r7 = 0.52545468212257239;
  CHECK(rel(laurent_constant(field_cubic7()), -r7 / 2.0) < 1e-10);
  CHECK(rel(residue_constant(field_cubic7()), 8.0 * r7 / (2.0 * 7.0)) < 1e-12);
  CHECK(rel(laurent_constant(field_cyclotomic5()), -2.0 * std::log(phi) / 10.0) < 1e-10);
  // H_F = 2^{r1}(2π)^{r2} h R/(w √D) for Q(ζ5).
  CHECK(rel(residue_constant(field_cyclotomic5()), 4.0 * kPi * kPi * 2.0 * std::log(phi) / (10.0 * std::sqrt(125.0))) <
        1e-12);
  for (const auto& f : {field_quartic16(), field_cyclotomic5(), field_cubic7(), field_quadratic(13)})
    CHECK(f.constants().c < 0.0);
}

}  // TEST_SUITE
