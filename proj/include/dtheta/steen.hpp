#pragma once

#include <optional>
#include <vector>

#include "dtheta/complex.hpp"
#include "dtheta/laurent.hpp"
#include "dtheta/quadrature.hpp"

namespace dtheta {

/// G(s) = ∏ Γ(scale_j·s + shift_j)^{power_j}.
class GammaProduct {
 public:
  struct Factor {
    double scale;
    double shift;
    int power;
  };

  GammaProduct() = default;
  explicit GammaProduct(std::vector<Factor> factors);

  /// Γ(s/2)^{r1} Γ(s)^{r2}.
  static GammaProduct kernel(int r1, int r2);
  /// ∏ Γ(s + a_j).
  static GammaProduct steen(const std::vector<double>& params);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  cplx log_value(cplx s) const;
  cplx value(cplx s) const { return std::exp(log_value(s)); }
  /// d/ds log G(s).
  cplx log_derivative(cplx s) const;
  /// Exponential decay rate of |G(c+it)| in |t|: (π/2) Σ power·scale.
  double decay_rate() const;
  /// Real part of the rightmost pole.
  double rightmost_pole() const;
  /// Pole order at s (0 if regular).
  int pole_order(double s) const;
  /// Real c > rightmost pole minimising |G(c)| |x|^{-c}.
  double saddle(double log_abs_x) const;

 private:
  std::vector<Factor> factors_;
};

inline constexpr double kSectorMargin = 0.1;

/// (1/2πi) ∫_(c) G(s) x^{-s} ds. The height is chosen from the decay of
/// the integrand (at least (log(1/tol) + 20)/(decay − |Arg x|)) and panel
/// widths follow the local oscillation. c must not be a pole; when absent
/// it is the saddle point. Throws DomainError if |Arg x| > decay − 0.1.
IntegralResult mellin_barnes(const GammaProduct& g, cplx x, std::optional<double> c = std::nullopt,
                             double tol = 1e-10);

/// Steen function V(x | a_1..a_n) on the line Re(s) = c > max(−a_j).
cplx steen_v(cplx x, const std::vector<double>& params, std::optional<double> c = std::nullopt,
             double tol = 1e-10);

/// Z̃_{r1,r2}(x) = (1/2πi) ∫_(c) Γ(s/2)^{r1} Γ(s)^{r2} x^{-s} ds, c > 0.
IntegralResult z_tilde_result(int r1, int r2, cplx x, std::optional<double> c = std::nullopt,
                              double tol = 1e-10);
cplx z_tilde(int r1, int r2, cplx x, std::optional<double> c = std::nullopt, double tol = 1e-10);

/// Known closed forms: (1,0) 2e^{-x²}, (0,1) e^{-x}, (2,0) 4K_0(2x), (0,2) 2K_0(2√x).
std::optional<cplx> z_tilde_closed_form(int r1, int r2, cplx x);

/// Residue of Γ(s/2)^{r1} Γ(s)^{r2} x^{-s} at s = 0 as a polynomial in log x
/// (degree r1 + r2 − 1).
LogPolynomial kernel_residue_at_zero(int r1, int r2);

/// Residue at s = 0 of Γ(s/2)^{r1} x^{-s}.
cplx r0_gamma(int r1, cplx x);

/// Z_{r1,r2}(x) by quadrature on the line Re(s) = b in (−1, 0).
cplx z_shifted(int r1, int r2, cplx x, double b = -0.5, double tol = 1e-10);

/// Z_{r1,r2}(x) = Z̃_{r1,r2}(x) − (residue at 0).
cplx z_shifted_via_residue(int r1, int r2, cplx x, double tol = 1e-10);

/// Majorant K·A·y^{-(r1+r2−1)/d} exp(−d (y/2^{r2})^{2/d}) of |Z̃_{r1,r2}(y)|,
/// valid for y ≥ kTailBoundStart. A is the leading asymptotic constant and
/// K = kTailBoundSafety a calibrated safety factor.
double z_tail_bound(int r1, int r2, double y);
/// The same shape along a ray: the exponent uses Re((y/2^{r2})^{2/d}).
double z_tail_bound(int r1, int r2, cplx y);

inline constexpr double kTailBoundStart = 1.0;
extern const double kTailBoundSafety;

/// Residue expansion of Z about 0: Σ_{m ≥ m0} Res_{s=−m} G(s) u^{-s}, with
/// Res_{s=−m} = u^m P_m(log u). Precomputes P_m up to max_pole.
class KernelSeries {
 public:
  KernelSeries(int r1, int r2, int max_pole = 80);

  int r1() const noexcept { return r1_; }
  int r2() const noexcept { return r2_; }
  int max_pole() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  const LogPolynomial& residue(int m) const { return polys_.at(m); }

  /// Σ_{m ≥ first} u^m P_m(log u); throws NumericError if the series has
  /// not converged by max_pole.
  cplx sum(cplx u, int first) const;
  /// Z(u) for any u in the sector: the series for |u| ≤ 1, otherwise
  /// Z̃(u) − P_0(log u).
  cplx z(cplx u, double tol = 1e-12) const;
  /// Z̃(u) likewise.
  cplx z_tilde(cplx u, double tol = 1e-12) const;

 private:
  int r1_, r2_;
  GammaProduct gamma_;
  std::vector<LogPolynomial> polys_;
  std::vector<double> poly_scale_;
};

}  // namespace dtheta
