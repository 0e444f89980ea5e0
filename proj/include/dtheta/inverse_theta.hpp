#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dtheta/complex.hpp"
#include "dtheta/field.hpp"
#include "dtheta/laurent.hpp"

namespace dtheta {

/// Ordinates γ of critical-line zeros ½ + iγ, ascending and positive.
struct ZeroList {
  std::vector<double> gammas;
  /// File path or "scanned".
  std::string source;
  std::string field;

  std::size_t size() const noexcept { return gammas.size(); }
  bool empty() const noexcept { return gammas.empty(); }
  /// The first n zeros.
  ZeroList prefix(std::size_t n) const;
};

/// Throws ValidationError unless ascending, positive and separated by > 1e-6.
void validate_zeros(const std::vector<double>& gammas);

/// One decimal per line, `#` comments. An empty file gives an empty list.
ZeroList parse_zeros(const std::string& text);
ZeroList load_zeros(const std::string& path);
void write_zeros(const std::string& path, const std::vector<double>& gammas, const std::string& comment = "");

/// L_{F,−k}(x) = Σ (μ_{F,k}(n)/n) Z_{kr1,kr2}(2^{kr2} π^{kd/2} √x / (n D^{k/2})).
struct LSeriesResult {
  cplx value = 0.0;
  /// Terms summed directly; beyond it the Z expansion is summed in closed form.
  std::size_t cutoff = 0;
  /// Powers of the expansion used for the remainder.
  int expansion_terms = 0;
  double remainder_bound = 0.0;
  bool converged = true;
};

/// Requires |Arg x| < πd/2 − 0.2 and an abelian field (or a coefficient
/// file long enough for the direct part).
LSeriesResult l_series(const FieldDescriptor& field, int k, cplx x, double tol = 1e-12);

/// Residue of Λ_F(s)^k x^{−s/2} at s = 0, Λ_F(s) = γ_F(s)/ζ_F(1−s). Order
/// k·r; identically zero for r = 0.
LogPolynomial r0_inverse_polynomial(const FieldDescriptor& field, int k);
cplx r0_inverse(const FieldDescriptor& field, int k, cplx x);

/// Residue of Λ_F(s)^k x^{−s/2} at s = 1.
cplx r1_inverse(const FieldDescriptor& field, int k, cplx x);

/// Laurent data of Λ_F^k at ρ = ½ + iγ. The residue at ρ of Λ^k x^{−s/2} is
/// x^{−ρ/2}·at_rho(x); at ρ̄ it is the conjugate construction.
struct ZeroResidue {
  double gamma = 0.0;
  LogPolynomial at_rho;
  LogPolynomial at_conj;
  double radius = 0.0;
  /// |c_{−k−1}| / |c_{−k}|: ~ the offset of γ from the true zero times k.
  double excess = 0.0;

  /// R_ρ(x) + R_ρ̄(x).
  cplx pair(cplx x) const;
};

/// Throws NumericError if γ is not a simple zero (no pole of order k, or a
/// pole of higher order). neighbour_gap limits the contour radius.
ZeroResidue zero_residue(const FieldDescriptor& field, int k, double gamma, double neighbour_gap = 1.0);

std::vector<ZeroResidue> zero_residues(const FieldDescriptor& field, int k, const ZeroList& zeros);

/// The pair term R_ρ(x) + R_ρ̄(x) for a single zero.
cplx r_rho(const FieldDescriptor& field, int k, cplx x, double gamma);

struct ZeroSum {
  cplx value = 0.0;
  /// Magnitude of the last pair.
  double tail_estimate = 0.0;
  int pairs = 0;
};

/// Σ over conjugate pairs in ascending γ. DomainError on an empty list.
ZeroSum zero_sum(const std::vector<ZeroResidue>& residues, cplx x);
ZeroSum zero_sum(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros);

/// U_{F,−k}(x) = L_{F,−k}(x) + R_0(x) + ½ Σ_ρ R_ρ(x).
cplx u_inverse(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros, double tol = 1e-12);

struct InverseReport {
  cplx x = 0.0;
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double residual = 0.0;
  double rel_error = 0.0;
  int zeros_used = 0;
  double zero_tail_estimate = 0.0;
};

/// U(1/x) against √x·U(x).
InverseReport check_inverse_theta(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros,
                                  double tol = 1e-12);

struct HlrOptions {
  std::size_t cutoff = 1000000;
  /// Weight the Möbius sums by a C² bump w(n/N); otherwise subtract
  /// Σ μ(n)/n = 0 termwise and sum to N.
  bool smooth = true;
};

/// Σ μ(n)/n e^{−x/n²} against
/// √(π/x) Σ μ(n)/n e^{−π²/(n² x)} − (1/2√π) Σ_ρ (π/√x)^ρ Γ((1−ρ)/2)/ζ'(ρ).
InverseReport hlr_check(double x, const ZeroList& zeros, const HlrOptions& options = {});

/// The zero term of the identity above alone, with ζ' evaluated directly.
cplx hlr_zero_term(double x, const ZeroList& zeros);

/// Σ μ(n)/n e^{−x/n²} as used by hlr_check.
double hlr_moebius_sum(double x, const HlrOptions& options = {});

/// √α Σ μ_F(n)/n Z(α/n) − √β Σ μ_F(n)/n Z(β/n) against
/// R_0(α)/√α − R_0(β)/√β + ½[Σ_ρ R_ρ(α)/√α − Σ_ρ R_ρ(β)/√β], where
/// α = 2^{r2}π^{d/2}√x/√D, β the same at 1/x, and the residues are those of
/// α^s Γ((1−s)/2)^{r1} Γ(1−s)^{r2} / ζ_F(s). Needs d ≤ 2 and x > 0.
InverseReport dgv_check(const FieldDescriptor& field, double x, const ZeroList& zeros, double tol = 1e-12);

}  // namespace dtheta
