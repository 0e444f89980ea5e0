#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtheta/complex.hpp"
#include "dtheta/field.hpp"

namespace dtheta {

/// ξ_F(s) = ½ s(s−1) Ω_F(s).
cplx xi_completed(const FieldDescriptor& field, cplx s);

/// Ξ_F(t) = ξ_F(½ + it), real; NumericError if |Im| > 1e-9 (1 + |Re|).
double big_xi(const FieldDescriptor& field, double t);

/// Ξ_F(t)·e^{πd|t|/4}, evaluated in log space so it does not underflow.
/// Same sign as Ξ_F(t).
double big_xi_scaled(const FieldDescriptor& field, double t);

struct ScanResult {
  std::vector<std::pair<double, double>> brackets;
  std::vector<double> zeros;
  /// |Ξ̃(γ)| at each refined zero.
  std::vector<double> residuals;
  double step = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::vector<std::string> warnings;
};

/// Sign changes of Ξ̃ on the grid t_min + i·step, each refined by bisection.
ScanResult scan_zeros(const FieldDescriptor& field, double t_min, double t_max, double step = 0.02,
                      double tol = 1e-9);

/// Bisection on a sign-change bracket to width < tol. Throws NumericError
/// (lost bracket) if Ξ̃ has the same sign at both ends.
double refine_zero(const FieldDescriptor& field, double lo, double hi, double tol = 1e-9);

struct PhiReport {
  cplx z = 0.0;
  /// ∫_0^T Ξ_F(t)/(t² + ¼) cos(zt) dt.
  cplx lhs = 0.0;
  /// −(π/2)[e^{−z/2} W_{F,1}(e^{−2z}) + 2^{r1} C_F (e^{−z/2} + e^{z/2})].
  cplx rhs = 0.0;
  double residual = 0.0;
  double height = 0.0;
};

/// The integral identity behind Hardy's method. |Im z| < πd/4 − 0.2.
/// height ≤ 0 picks T from the majorant (1+t)^d D^{1/4} e^{−(πd/4 − |Im z|)t}.
PhiReport phi_identity_check(const FieldDescriptor& field, cplx z, double height = 0.0, double tol = 1e-10);

}  // namespace dtheta
