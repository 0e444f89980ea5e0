#include "dtheta/theta.hpp"

#include <cmath>

#include "dtheta/bessel.hpp"
#include "dtheta/coefficients.hpp"
#include "dtheta/error.hpp"
#include "dtheta/parallel.hpp"
#include "dtheta/steen.hpp"
#include "dtheta/zeta.hpp"

namespace dtheta {
namespace {

constexpr std::size_t kMaxTerms = 2000000;

void check_k(int k) {
  if (k < 1) throw DomainError("k must be >= 1");
}

cplx omega_power(const FieldDescriptor& field, int k, cplx s) {
  return std::exp(static_cast<double>(k) * log_gamma_factor(field, s)) *
         std::pow(dedekind_zeta(s, field), k);
}

}  // namespace

SeriesResult s_series(const FieldDescriptor& field, int k, cplx x, double tol) {
  if (x == cplx(0.0) || !is_finite(x)) throw DomainError("s_series: x must be finite and non-zero");
  if (std::abs(std::arg(x)) >= 0.5 * kPi * field.degree() - 0.2)
    throw DomainError("s_series: |Arg x| must be below pi*d/2 - 0.2");
  return s_series_at_root(field, k, std::sqrt(x), tol);
}

SeriesResult s_series_at_root(const FieldDescriptor& field, int k, cplx root, double tol) {
  check_k(k);
  if (root == cplx(0.0) || !is_finite(root)) throw DomainError("s_series: x must be finite and non-zero");
  const int d = field.degree();
  if (std::abs(std::arg(root)) >= 0.25 * kPi * d - 0.1)
    throw DomainError("s_series: |Arg x| must be below pi*d/2 - 0.2");
  const int kr1 = k * field.r1(), kr2 = k * field.r2();
  const double kappa = std::pow(2.0, kr2) * std::pow(kPi, 0.5 * k * d) /
                       std::pow(static_cast<double>(field.disc()), 0.5 * k);
  const cplx step = kappa * root;
  // a_{F,k}(n) <= d_{kd}(n) <= n^{log2(kd)}.
  const double growth = std::log2(static_cast<double>(k * d));

  // Tail bounds b_n for n with |y_n| >= 1, until they are negligible.
  std::vector<double> bounds{0.0};
  double peak = 0.0;
  for (std::size_t n = 1;; ++n) {
    const cplx y = step * static_cast<double>(n);
    double b = std::numeric_limits<double>::infinity();
    if (std::abs(y) >= kTailBoundStart) b = std::pow(static_cast<double>(n), growth) * z_tail_bound(kr1, kr2, y);
    bounds.push_back(b);
    if (std::isfinite(b)) peak = std::max(peak, b);
    if (std::isfinite(b) && b < 1e-6 * tol && b < 1e-3 * peak) break;
    if (n > kMaxTerms)
      throw DomainError("s_series: coefficient table exhausted (|x| too small for the requested tolerance)");
  }
  std::size_t cutoff = bounds.size() - 1;
  double tail = 0.0;
  while (cutoff > 1 && std::isfinite(bounds[cutoff]) && tail + bounds[cutoff] < 0.1 * tol) {
    tail += bounds[cutoff];
    --cutoff;
  }

  const CoefficientTable a = power_coeffs(field, k, cutoff);
  std::vector<std::size_t> active;
  for (std::size_t n = 1; n <= cutoff; ++n)
    if (a[n] != 0) active.push_back(n);

  const KernelSeries kernel(kr1, kr2);
  std::vector<cplx> terms(active.size());
  parallel_for(active.size(), [&](std::size_t i) {
    const std::size_t n = active[i];
    terms[i] = static_cast<double>(a[n]) * kernel.z_tilde(step * static_cast<double>(n), 1e-13);
  });
  SeriesResult r;
  // Smallest terms first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) r.value += *it;
  r.terms_used = static_cast<int>(active.size());
  r.cutoff = cutoff;
  r.tail_bound = tail + bounds.back();
  r.converged = r.tail_bound < tol;
  return r;
}

LogPolynomial r0_theta_polynomial(const FieldDescriptor& field, int k) {
  check_k(k);
  field.require_abelian("r0_theta");
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return omega_power(field, k, s); }, cplx(0.0), 0.25, -k, -1);
  return residue_polynomial(lr, k, 0.5);
}

cplx r0_theta(const FieldDescriptor& field, int k, cplx x) {
  if (x == cplx(0.0)) throw DomainError("r0_theta: x = 0");
  return r0_theta_polynomial(field, k)(x);
}

cplx r1_theta(const FieldDescriptor& field, int k, cplx x) {
  check_k(k);
  field.require_abelian("r1_theta");
  if (x == cplx(0.0)) throw DomainError("r1_theta: x = 0");
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return omega_power(field, k, s); }, cplx(1.0), 0.25, -k, -1);
  return residue_polynomial(lr, k, 0.5)(x) / std::sqrt(x);
}

cplx w_theta(const FieldDescriptor& field, int k, cplx x, double tol) {
  return s_series(field, k, x, tol).value - r0_theta(field, k, x);
}

double relative_error(cplx lhs, cplx rhs) {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

ThetaReport check_theta(const FieldDescriptor& field, int k, cplx x, double tol) {
  const LogPolynomial r0 = r0_theta_polynomial(field, k);
  const SeriesResult left = s_series(field, k, 1.0 / x, tol);
  const SeriesResult right = s_series(field, k, x, tol);
  ThetaReport rep;
  rep.x = x;
  rep.lhs = left.value - r0(1.0 / x);
  rep.rhs = std::sqrt(x) * (right.value - r0(x));
  rep.rel_error = relative_error(rep.lhs, rep.rhs);
  rep.terms_used = left.terms_used + right.terms_used;
  rep.converged = left.converged && right.converged;
  return rep;
}

ExactEvalReport exact_eval_check(const FieldDescriptor& field, double tol) {
  field.require_abelian("exact_eval_check");
  if (field.degree() < 3) throw DomainError("exact_eval_check: needs degree >= 3");
  const SeriesResult s = s_series(field, 1, cplx(-1.0, 0.0), tol);
  ExactEvalReport rep;
  rep.lhs = s.value;
  rep.rhs = std::pow(2.0, field.r1()) * field.constants().c;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.branch_residual = std::abs(rep.lhs.real() + rep.lhs.imag() - rep.rhs);
  rep.terms_used = s.terms_used;
  return rep;
}

cplx jacobi_w1_direct(cplx x) {
  if (!(x.real() > 0.0)) throw DomainError("jacobi_w1_direct: needs Re(x) > 0");
  cplx sum = 0.0;
  for (int n = 1;; ++n) {
    const double nn = static_cast<double>(n) * n;
    const cplx term = std::exp(-kPi * nn * x);
    sum += term;
    if (std::exp(-kPi * nn * x.real()) < 1e-18 * std::max(std::abs(sum), 1e-300)) break;
    if (n > 10000000) throw NumericError("jacobi_w1_direct: series did not converge");
  }
  return 1.0 + 2.0 * sum;
}

cplx koshliakov_w2_direct(cplx x) {
  if (x == cplx(0.0) || std::abs(std::arg(x)) >= kPi) throw DomainError("koshliakov_w2_direct: needs |Arg x| < pi");
  const cplx z = 2.0 * kPi * std::sqrt(x);
  cplx sum = 0.0;
  int quiet = 0;
  for (int n = 1;; ++n) {
    int divisors = 0;
    for (int m = 1; m * m <= n; ++m)
      if (n % m == 0) divisors += (m * m == n) ? 1 : 2;
    const cplx term = static_cast<double>(divisors) * bessel_k(0.0, static_cast<double>(n) * z);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1e-300)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (n > 1000000) throw NumericError("koshliakov_w2_direct: series did not converge");
  }
  return kEulerGamma - std::log(4.0 * kPi) + std::log(std::sqrt(x)) + 4.0 * sum;
}

}  // namespace dtheta
