#pragma once

#include "dtheta/complex.hpp"
#include "dtheta/field.hpp"
#include "dtheta/laurent.hpp"

namespace dtheta {

struct SeriesResult {
  cplx value = 0.0;
  /// Number of non-zero terms evaluated.
  int terms_used = 0;
  /// Largest n included.
  std::size_t cutoff = 0;
  /// Certified bound on the neglected tail.
  double tail_bound = 0.0;
  bool converged = true;
};

/// S_{F,k}(x) = Σ_n a_{F,k}(n) Z̃_{kr1,kr2}(2^{k r2} π^{kd/2} n √x / D^{k/2}).
/// Requires |Arg x| < πd/2 − 0.2. The cutoff N makes the tail, bounded by
/// n^{log2(kd)}·z_tail_bound, smaller than tol/10.
SeriesResult s_series(const FieldDescriptor& field, int k, cplx x, double tol = 1e-12);

/// The same series with √x given directly (any branch inside the sector
/// |Arg √x| < πd/4 − 0.1), e.g. e^{−z} for x = e^{−2z}.
SeriesResult s_series_at_root(const FieldDescriptor& field, int k, cplx root, double tol = 1e-12);

/// Residue of Ω_F(s)^k x^{-s/2} at s = 0 as a polynomial in log x.
LogPolynomial r0_theta_polynomial(const FieldDescriptor& field, int k);
cplx r0_theta(const FieldDescriptor& field, int k, cplx x);

/// Residue of Ω_F(s)^k x^{-s/2} at s = 1 (contour at 1, independent of R_0).
cplx r1_theta(const FieldDescriptor& field, int k, cplx x);

/// W_{F,k}(x) = S_{F,k}(x) − R_0(x).
cplx w_theta(const FieldDescriptor& field, int k, cplx x, double tol = 1e-12);

struct ThetaReport {
  cplx x = 0.0;
  /// W(1/x).
  cplx lhs = 0.0;
  /// √x W(x).
  cplx rhs = 0.0;
  double rel_error = 0.0;
  int terms_used = 0;
  bool converged = true;
};

double relative_error(cplx lhs, cplx rhs);

/// W(1/x) against √x·W(x).
ThetaReport check_theta(const FieldDescriptor& field, int k, cplx x, double tol = 1e-12);

struct ExactEvalReport {
  /// Σ a_F(n) Z̃_{r1,r2}(2^{r2} π^{d/2} n i/√D).
  cplx lhs = 0.0;
  /// 2^{r1} C_F.
  double rhs = 0.0;
  /// |lhs − rhs|.
  double residual = 0.0;
  /// |Re lhs + Im lhs − rhs|. The relation pairs e^{iπ} with e^{−iπ}, where
  /// W takes the conjugate value, so it forces only Re W(−1) = −Im W(−1).
  double branch_residual = 0.0;
  int terms_used = 0;
};

/// The theta series at x = −1 (√x = i) against 2^{r1}C_F; needs d ≥ 3.
ExactEvalReport exact_eval_check(const FieldDescriptor& field, double tol = 1e-12);

/// 1 + 2 Σ e^{−π n² x}, Re(x) > 0.
cplx jacobi_w1_direct(cplx x);

/// γ − log 4π + log √x + 4 Σ d(n) K_0(2π n √x), |Arg x| < π.
cplx koshliakov_w2_direct(cplx x);

}  // namespace dtheta
