#include "dtheta/zeta.hpp"

#include <array>
#include <cmath>

#include "dtheta/error.hpp"
#include "dtheta/gamma.hpp"
#include "dtheta/laurent.hpp"

namespace dtheta {
namespace {

// B_{2k} / (2k)!, k = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

// (e^u − 1)/u without cancellation near u = 0.
cplx expm1_over(cplx u) {
  if (std::abs(u) < 0.5) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 2; k < 24; ++k) {
      term *= u / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(u) - 1.0) / u;
}

cplx hurwitz_impl(cplx s, double a, int depth, bool regular) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (depth < 1 || depth > 12) throw DomainError("hurwitz_zeta: Bernoulli depth must be in 1..12");
  if (!is_finite(s)) throw DomainError("hurwitz_zeta: non-finite argument");
  if (!regular && s == cplx(1.0)) throw DomainError("hurwitz_zeta: pole at s = 1");

  const int m = std::max(16, static_cast<int>(std::ceil(2.0 * std::abs(s))) + 8);
  cplx sum = 0.0;
  for (int n = 0; n < m; ++n) sum += std::exp(-s * std::log(n + a));

  const double big_n = m + a;
  const double log_n = std::log(big_n);
  const cplx n_pow = std::exp(-s * log_n);  // N^{-s}
  if (regular) {
    // (N^{1-s} − 1)/(s − 1) = −log N · (e^u − 1)/u with u = (1−s) log N.
    sum += -log_n * expm1_over((1.0 - s) * log_n);
  } else {
    sum += n_pow * big_n / (s - 1.0);
  }
  sum += 0.5 * n_pow;

  // Σ B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{-s-2k+1}
  cplx rising = s;
  cplx power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int k = 1; k <= depth; ++k) {
    sum += kBernoulliOverFactorial[k - 1] * rising * power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_n2;
  }
  if (!is_finite(sum)) throw NumericError("hurwitz_zeta: non-finite result");
  return sum;
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a, int depth) { return hurwitz_impl(s, a, depth, false); }

cplx hurwitz_zeta_regular(cplx s, double a, int depth) { return hurwitz_impl(s, a, depth, true); }

cplx riemann_zeta(cplx s) {
  // Left of the line the Euler-Maclaurin head cancels; reflect instead.
  if (s.real() < -0.5) {
    const cplx one_minus = 1.0 - s;
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus)) *
           std::sin(0.5 * kPi * s) * hurwitz_zeta(one_minus, 1.0);
  }
  return hurwitz_zeta(s, 1.0);
}

cplx dirichlet_l(cplx s, const DirichletCharacter& chi) {
  const int q = chi.modulus();
  if (q == 1) return riemann_zeta(s);
  const bool principal = chi.is_principal();
  cplx sum = 0.0;
  for (int a = 1; a <= q; ++a) {
    const cplx v = chi.value(a);
    if (v == cplx(0.0)) continue;
    const double frac = static_cast<double>(a) / q;
    sum += v * (principal ? hurwitz_zeta(s, frac) : hurwitz_zeta_regular(s, frac));
  }
  return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

cplx zeta_derivative(cplx s, int order) {
  if (order < 1 || order > 2) throw DomainError("zeta_derivative: order must be 1 or 2");
  const double dist = std::abs(s - 1.0);
  if (dist < 1e-12) throw DomainError("zeta_derivative: pole at s = 1");
  const double radius = std::min(0.05, 0.5 * dist);
  return taylor_derivative([](cplx z) { return riemann_zeta(z); }, s, order, radius);
}

}  // namespace dtheta
