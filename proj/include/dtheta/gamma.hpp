#pragma once

#include "dtheta/complex.hpp"

namespace dtheta {

/// Γ(s) for complex s (Lanczos g=7, 9 terms; reflection for Re(s) < 1/2).
/// Throws DomainError at the poles s = 0, -1, -2, ...
cplx complex_gamma(cplx s);

/// A logarithm of Γ(s). The imaginary part is not reduced to the principal
/// branch; exp(log_gamma(s)) == Γ(s) is the only guarantee. Use this when
/// Γ(s) would over- or underflow, or when multiplying many gamma factors.
cplx log_gamma(cplx s);

/// Digamma ψ(s) = Γ'(s)/Γ(s).
cplx digamma(cplx s);

/// Trigamma ψ'(s).
cplx trigamma(cplx s);

/// True if s is (numerically exactly) a non-positive integer.
bool is_gamma_pole(cplx s);

}  // namespace dtheta
