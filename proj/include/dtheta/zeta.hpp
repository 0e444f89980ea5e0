#pragma once

#include "dtheta/character.hpp"
#include "dtheta/complex.hpp"

namespace dtheta {

inline constexpr int kDefaultBernoulliDepth = 12;

/// Hurwitz zeta ζ(s, a) = Σ_{n≥0} (n+a)^{-s}, a in (0, 1], continued to all
/// s ≠ 1 by Euler–Maclaurin with `depth` Bernoulli terms (1..12).
cplx hurwitz_zeta(cplx s, double a, int depth = kDefaultBernoulliDepth);

/// ζ(s, a) − 1/(s−1), analytic at s = 1 (value there is −ψ(a)).
cplx hurwitz_zeta_regular(cplx s, double a, int depth = kDefaultBernoulliDepth);

cplx riemann_zeta(cplx s);

/// L(s, χ) = q^{-s} Σ_a χ(a) ζ(s, a/q). Non-principal characters go through
/// the regular Hurwitz variant so s = 1 is an ordinary point.
cplx dirichlet_l(cplx s, const DirichletCharacter& chi);

/// ζ^{(order)}(s) from Laurent coefficients on a circle of radius 0.05
/// (shrunk near the pole at 1). order is 1 or 2.
cplx zeta_derivative(cplx s, int order = 1);

}  // namespace dtheta
