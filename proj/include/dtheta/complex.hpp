#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace dtheta {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// exp(z) with the real part clamped so that deep underflow returns 0
/// rather than NaN from inf*0 in the imaginary part.
inline cplx safe_exp(cplx z) {
  if (z.real() < -745.0) return {0.0, 0.0};
  return std::exp(z);
}

}  // namespace dtheta
