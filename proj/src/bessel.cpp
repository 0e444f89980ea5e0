#include "dtheta/bessel.hpp"

#include <cmath>

#include "dtheta/error.hpp"
#include "dtheta/gamma.hpp"

namespace dtheta {
namespace {

cplx prefactor(cplx z) { return std::sqrt(kPi / (2.0 * z)) * std::exp(-z); }

}  // namespace

cplx bessel_k(double nu, cplx z) {
  if (z == cplx(0.0)) throw DomainError("bessel_k: z = 0");
  if (!is_finite(z) || !std::isfinite(nu)) throw DomainError("bessel_k: non-finite argument");
  const double theta = std::abs(std::arg(z));
  if (theta >= kPi - 1e-12) throw DomainError("bessel_k: z on the negative real axis");
  nu = std::abs(nu);

  const double twice = 2.0 * nu;
  if (std::abs(twice - std::round(twice)) < 1e-14 && std::lround(twice) % 2 == 1) {
    const int n = static_cast<int>(std::lround(nu - 0.5));
    // Σ_{k=0}^{n} (n+k)!/(k!(n−k)!) (2z)^{-k}
    cplx sum = 0.0, inv = 1.0 / (2.0 * z), pw = 1.0;
    double coef = 1.0;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) coef *= static_cast<double>((n + k) * (n - k + 1)) / k;
      sum += coef * pw;
      pw *= inv;
    }
    return prefactor(z) * sum;
  }

  const double alpha = nu + 0.5;
  const double beta = nu - 0.5;
  const cplx two_z = 2.0 * z;
  // Strip of analyticity in v: exp(−e^v) needs |Im v| < π/2, and the factor
  // (1+e^v/2z)^β has a branch point at Im v = ±(π − |Arg z|).
  const double strip = std::min(0.5 * kPi, kPi - theta);
  const double h = 2.0 * kPi * 0.9 * strip / 42.0;
  const double v_lo = -42.0 / alpha;
  cplx sum = 0.0;
  double peak = 0.0;
  int quiet = 0;
  for (int j = 0;; ++j) {
    const double v = v_lo + j * h;
    const double u = std::exp(v);
    const cplx term = std::exp(-u + alpha * v + beta * std::log(1.0 + u / two_z));
    const double mag = std::abs(term);
    sum += term;
    peak = std::max(peak, mag);
    if (v > 0.0 && mag < 1e-18 * peak) {
      if (++quiet > 3) break;
    } else {
      quiet = 0;
    }
    if (j > 200000) throw NumericError("bessel_k: integral did not terminate");
  }
  const cplx value = prefactor(z) * h * sum * std::exp(-log_gamma(cplx(alpha)));
  if (!is_finite(value)) throw NumericError("bessel_k: non-finite result");
  return value;
}

cplx bessel_k_asymptotic(double nu, cplx z, int terms) {
  if (z == cplx(0.0)) throw DomainError("bessel_k_asymptotic: z = 0");
  const double mu = 4.0 * nu * nu;
  cplx sum = 0.0, term = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
    sum += term;
  }
  return prefactor(z) * sum;
}

}  // namespace dtheta
