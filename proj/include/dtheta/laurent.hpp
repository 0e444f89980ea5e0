#pragma once

#include <functional>
#include <vector>

#include "dtheta/complex.hpp"

namespace dtheta {

using ComplexFunction = std::function<cplx(cplx)>;

/// Polynomial in log x: Σ coeffs[j] (log x)^j, principal logarithm.
class LogPolynomial {
 public:
  LogPolynomial() = default;
  explicit LogPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx operator()(cplx x) const;
  /// Coefficients of p(−log x), i.e. the polynomial evaluated at 1/x.
  LogPolynomial reflected() const;

 private:
  std::vector<cplx> coeffs_;
};

struct LaurentResult {
  int lowest = 0;
  /// coeffs[i] is c_{lowest + i}.
  std::vector<cplx> coeffs;
  double error_estimate = 0.0;
  bool converged = false;
  int points = 0;

  cplx operator[](int j) const;
};

/// Laurent coefficients c_lo..c_hi of f about s0 from trapezoidal sums on the
/// circle |s − s0| = radius, starting with 64 points and doubling (up to
/// max_points) until the change is below 1e-13 of the sample scale.
/// Throws DomainError if a sample is non-finite or exceeds 1e300.
LaurentResult laurent_coefficients(const ComplexFunction& f, cplx s0, double radius, int lo, int hi,
                                   int max_points = 1024);

/// Residue of f(s)·x^{-κ s} at s0 as a polynomial in log x, i.e. the
/// factor multiplying x^{-κ s0}: p_j = c_{-1-j} (−κ)^j / j!, where c are the
/// Laurent coefficients of f alone at s0 (pole order ≤ order).
LogPolynomial residue_polynomial(const LaurentResult& laurent, int order, double kappa);

/// f^{(order)}(s) from Taylor coefficients on a circle of the given radius.
cplx taylor_derivative(const ComplexFunction& f, cplx s, int order, double radius);

}  // namespace dtheta
