#pragma once

#include "dtheta/complex.hpp"

namespace dtheta {

/// Modified Bessel function K_ν(z) for real ν and |Arg z| < π.
/// Half-integer orders use the terminating closed form; other orders use the
/// integral K_ν(z) = √(π/2z) e^{-z}/Γ(ν+½) ∫_0^∞ e^{-u} u^{ν-½}(1+u/2z)^{ν-½} du
/// in the variable u = e^v with the trapezoidal rule.
cplx bessel_k(double nu, cplx z);

/// Large-|z| asymptotic expansion √(π/2z) e^{-z} Σ_{k<terms} a_k(ν)/z^k.
cplx bessel_k_asymptotic(double nu, cplx z, int terms);

}  // namespace dtheta
