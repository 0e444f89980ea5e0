#include "dtheta/critical_line.hpp"

#include <cmath>

#include "dtheta/error.hpp"
#include "dtheta/parallel.hpp"
#include "dtheta/quadrature.hpp"
#include "dtheta/theta.hpp"

namespace dtheta {
namespace {

cplx scaled_xi(const FieldDescriptor& field, double t) {
  field.require_abelian("critical-line functions");
  const cplx s(0.5, t);
  const double lift = 0.25 * kPi * field.degree() * std::abs(t);
  return 0.5 * s * (s - 1.0) * std::exp(log_gamma_factor(field, s) + lift) * dedekind_zeta(s, field);
}

double real_checked(cplx v) {
  if (!is_finite(v)) throw NumericError("Xi: non-finite value");
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real())))
    throw NumericError("Xi: imaginary part exceeds tolerance (upstream numeric fault)");
  return v.real();
}

}  // namespace

cplx xi_completed(const FieldDescriptor& field, cplx s) {
  return 0.5 * s * (s - 1.0) * completed_zeta(field, s);
}

double big_xi(const FieldDescriptor& field, double t) {
  const double lift = 0.25 * kPi * field.degree() * std::abs(t);
  return real_checked(scaled_xi(field, t)) * std::exp(-lift);
}

double big_xi_scaled(const FieldDescriptor& field, double t) { return real_checked(scaled_xi(field, t)); }

double refine_zero(const FieldDescriptor& field, double lo, double hi, double tol) {
  if (!(hi > lo)) throw DomainError("refine_zero: need lo < hi");
  double f_lo = big_xi_scaled(field, lo);
  const double f_hi = big_xi_scaled(field, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) throw NumericError("refine_zero: lost bracket (no sign change)");
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = big_xi_scaled(field, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ScanResult scan_zeros(const FieldDescriptor& field, double t_min, double t_max, double step, double tol) {
  field.require_abelian("scan_zeros");
  if (!(t_min >= 0.0) || !(t_max > t_min)) throw DomainError("scan_zeros: need 0 <= t_min < t_max");
  if (!(step > 0.0)) throw DomainError("scan_zeros: step must be positive");
  const auto count = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
  std::vector<double> grid(count + 1), values(count + 1);
  for (std::size_t i = 0; i <= count; ++i) grid[i] = std::min(t_min + i * step, t_max);
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = big_xi_scaled(field, grid[i]); });

  ScanResult r;
  r.step = step;
  r.t_min = t_min;
  r.t_max = t_max;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (values[i] == 0.0) {
      r.brackets.emplace_back(grid[i], grid[i]);
      continue;
    }
    if ((values[i] > 0.0) != (values[i + 1] > 0.0) && values[i + 1] != 0.0)
      r.brackets.emplace_back(grid[i], grid[i + 1]);
  }
  if (values.back() == 0.0) r.brackets.emplace_back(grid.back(), grid.back());
  r.zeros.resize(r.brackets.size());
  r.residuals.resize(r.brackets.size());
  parallel_for(r.brackets.size(), [&](std::size_t i) {
    const auto [lo, hi] = r.brackets[i];
    r.zeros[i] = lo == hi ? lo : refine_zero(field, lo, hi, tol);
    r.residuals[i] = std::abs(big_xi_scaled(field, r.zeros[i]));
  });
  for (std::size_t i = 1; i < r.zeros.size(); ++i)
    if (r.zeros[i] - r.zeros[i - 1] < 2.0 * step)
      r.warnings.push_back("step may be too coarse: zeros " + std::to_string(r.zeros[i - 1]) + " and " +
                           std::to_string(r.zeros[i]) + " are closer than 2*step");
  return r;
}

PhiReport phi_identity_check(const FieldDescriptor& field, cplx z, double height, double tol) {
  field.require_abelian("phi_identity_check");
  const int d = field.degree();
  const double rate = 0.25 * kPi * d - std::abs(z.imag());
  if (rate < 0.2) throw DomainError("phi_identity_check: |Im z| must be below pi*d/4 - 0.2");
  PhiReport rep;
  rep.z = z;
  if (height <= 0.0) {
    // Smallest T with (1+T)^d D^{1/4} e^{-rate T} below tol/100.
    const double target = std::log(tol / 100.0) - 0.25 * std::log(static_cast<double>(field.disc()));
    double t = 1.0;
    while (d * std::log1p(t) - rate * t > target) t += 0.5;
    height = t;
  }
  rep.height = height;
  const IntegralResult lhs = integrate_adaptive(
      [&](double t) { return big_xi(field, t) / (t * t + 0.25) * std::cos(z * t); }, 0.0, height, 0.01 * tol);
  rep.lhs = lhs.value;

  const cplx root = std::exp(-z);  // √x for x = e^{−2z}
  const SeriesResult s = s_series_at_root(field, 1, root, tol);
  const double c_term = std::pow(2.0, field.r1()) * field.constants().c;
  const cplx w = s.value - c_term;
  rep.rhs = -0.5 * kPi * (std::exp(-0.5 * z) * w + c_term * (std::exp(-0.5 * z) + std::exp(0.5 * z)));
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace dtheta
