#include "dtheta/steen.hpp"

#include <algorithm>
#include <cmath>

#include "dtheta/bessel.hpp"
#include "dtheta/error.hpp"
#include "dtheta/gamma.hpp"

namespace dtheta {

// 4 × the largest ratio |Z̃(y)| / (A·shape(y)) on the calibration grid (it is 1.0,
// attained by the exact cases (1,0) and (0,1)); grid y in [1, 50], r1 + 2 r2 <= 8.
const double kTailBoundSafety = 4.0;

GammaProduct::GammaProduct(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    if (!(f.scale > 0.0) || f.power < 0) throw DomainError("GammaProduct: need scale > 0 and power > 0");
    factors_.push_back(f);
  }
  if (factors_.empty()) throw DomainError("GammaProduct: empty product");
}

GammaProduct GammaProduct::kernel(int r1, int r2) {
  if (r1 < 0 || r2 < 0 || r1 + r2 == 0) throw DomainError("kernel: need r1, r2 >= 0, not both zero");
  return GammaProduct({{0.5, 0.0, r1}, {1.0, 0.0, r2}});
}

GammaProduct GammaProduct::steen(const std::vector<double>& params) {
  if (params.empty()) throw DomainError("steen_v: need at least one parameter");
  std::vector<Factor> f;
  for (double a : params) f.push_back({1.0, a, 1});
  return GammaProduct(std::move(f));
}

cplx GammaProduct::log_value(cplx s) const {
  cplx v = 0.0;
  for (const auto& f : factors_) v += static_cast<double>(f.power) * log_gamma(f.scale * s + f.shift);
  return v;
}

cplx GammaProduct::log_derivative(cplx s) const {
  cplx v = 0.0;
  for (const auto& f : factors_) v += f.power * f.scale * digamma(f.scale * s + f.shift);
  return v;
}

double GammaProduct::decay_rate() const {
  double r = 0.0;
  for (const auto& f : factors_) r += f.power * f.scale;
  return 0.5 * kPi * r;
}

double GammaProduct::rightmost_pole() const {
  double p = -1e300;
  for (const auto& f : factors_) p = std::max(p, -f.shift / f.scale);
  return p;
}

int GammaProduct::pole_order(double s) const {
  int order = 0;
  for (const auto& f : factors_) {
    const double arg = f.scale * s + f.shift;
    if (arg <= 0.5 && std::abs(arg - std::round(arg)) < 1e-12) order += f.power;
  }
  return order;
}

double GammaProduct::saddle(double log_abs_x) const {
  const double pole = rightmost_pole();
  auto phi = [&](double c) { return log_derivative(cplx(c)).real() - log_abs_x; };
  double lo = pole + 1e-8, hi = pole + 1.0;
  while (phi(hi) < 0.0) {
    lo = hi;
    hi = pole + 2.0 * (hi - pole);
    if (hi > 1e8) throw NumericError("saddle: argument too large");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

double nearest_pole_distance(const GammaProduct& g, cplx s) {
  double best = 1e300;
  for (const auto& f : g.factors()) {
    // Poles at s = −(shift + j)/scale, j = 0, 1, ...
    const double jc = std::round(-(f.scale * s.real() + f.shift));
    for (double j = std::max(0.0, jc - 1.0); j <= std::max(0.0, jc + 1.0); j += 1.0) {
      const cplx pole(-(f.shift + j) / f.scale, 0.0);
      best = std::min(best, std::abs(s - pole));
    }
  }
  return best;
}

// Complex s with G'/G(s) = log x, continued in Arg x from the real saddle.
// The vertical line through it keeps |integrand| close to |result|.
std::optional<cplx> complex_saddle(const GammaProduct& g, cplx log_x) {
  auto second = [&](cplx s) {
    cplx v = 0.0;
    for (const auto& f : g.factors()) v += f.power * f.scale * f.scale * trigamma(f.scale * s + f.shift);
    return v;
  };
  const double pole = g.rightmost_pole();
  cplx s = g.saddle(log_x.real());
  constexpr int kSteps = 16;
  for (int k = 1; k <= kSteps; ++k) {
    const cplx target(log_x.real(), log_x.imag() * k / kSteps);
    for (int it = 0; it < 50; ++it) {
      const cplx step = (g.log_derivative(s) - target) / second(s);
      if (!is_finite(step)) return std::nullopt;
      cplx next = s - step;
      if (next.real() < pole + 0.05) next = cplx(0.5 * (s.real() + pole + 0.05), next.imag());
      s = next;
      if (std::abs(step) < 1e-12 * (1.0 + std::abs(s))) break;
    }
  }
  if (std::abs(g.log_derivative(s) - log_x) > 1e-8 * (1.0 + std::abs(log_x))) return std::nullopt;
  return s;
}

}  // namespace

IntegralResult mellin_barnes(const GammaProduct& g, cplx x, std::optional<double> c, double tol) {
  if (x == cplx(0.0) || !is_finite(x)) throw DomainError("mellin_barnes: x must be finite and non-zero");
  if (!(tol > 0.0)) throw DomainError("mellin_barnes: tol must be positive");
  const double theta = std::arg(x);
  const double decay = g.decay_rate();
  if (std::abs(theta) > decay - kSectorMargin)
    throw DomainError("mellin_barnes: |Arg x| exceeds the convergence sector minus margin");
  const cplx log_x = std::log(x);
  double line;
  if (c) {
    line = *c;
    if (g.pole_order(line) > 0 || nearest_pole_distance(g, cplx(line)) < 1e-6)
      throw DomainError("mellin_barnes: integration line passes through a pole");
  } else {
    const auto saddle = complex_saddle(g, log_x);
    line = saddle ? saddle->real() : g.saddle(log_x.real());
    line = std::max(line, g.rightmost_pole() + 0.2);
  }

  auto log_f = [&](cplx s) { return g.log_value(s) - s * log_x; };
  const double base = log_f(cplx(line)).real();
  const double t_min = (std::log(1.0 / tol) + 20.0) / (decay - std::abs(theta));
  const double cutoff = std::log(1.0 / tol) + 40.0;

  double global_peak = 0.0;
  // March outward from t = 0, placing panel breaks by local scale.
  auto march = [&](double dir) {
    std::vector<double> out;
    double t = 0.0, peak = 0.0;
    for (int steps = 0;; ++steps) {
      const cplx s(line, t);
      const double rel = log_f(s).real() - base;
      peak = std::max(peak, rel);
      global_peak = std::max(global_peak, rel);
      if (std::abs(t) >= t_min && rel < peak - cutoff) break;
      const double slope = std::abs(g.log_derivative(s) - log_x);
      double h = std::min({1.5, 6.0 / std::max(slope, 1e-12), nearest_pole_distance(g, s)});
      h = std::max(h, 1e-3);
      t += dir * h;
      out.push_back(t);
      if (steps > 200000) throw NumericError("mellin_barnes: integrand does not decay");
    }
    return out;
  };
  std::vector<double> up = march(1.0);
  std::vector<double> down = march(-1.0);
  std::vector<double> breaks(down.rbegin(), down.rend());
  breaks.push_back(0.0);
  breaks.insert(breaks.end(), up.begin(), up.end());

  const double shift = base + global_peak;
  const ComplexFunction integrand = [&](cplx s) { return safe_exp(log_f(s) - shift); };
  IntegralResult r = vertical_integral(integrand, line, breaks, 16);
  const double scale = std::exp(shift);
  r.value *= scale;
  r.error_estimate *= scale;
  r.abs_mass *= scale;
  return r;
}

cplx steen_v(cplx x, const std::vector<double>& params, std::optional<double> c, double tol) {
  const GammaProduct g = GammaProduct::steen(params);
  if (c && !(*c > g.rightmost_pole())) throw DomainError("steen_v: need c > max(-a_j)");
  const IntegralResult r = mellin_barnes(g, x, c, tol);
  if (r.failed) throw NumericError("steen_v: quadrature did not converge");
  return r.value;
}

IntegralResult z_tilde_result(int r1, int r2, cplx x, std::optional<double> c, double tol) {
  if (c && !(*c > 0.0)) throw DomainError("z_tilde: need c > 0");
  return mellin_barnes(GammaProduct::kernel(r1, r2), x, c, tol);
}

cplx z_tilde(int r1, int r2, cplx x, std::optional<double> c, double tol) {
  const IntegralResult r = z_tilde_result(r1, r2, x, c, tol);
  if (r.failed) throw NumericError("z_tilde: quadrature did not converge");
  return r.value;
}

std::optional<cplx> z_tilde_closed_form(int r1, int r2, cplx x) {
  if (r1 == 1 && r2 == 0) return 2.0 * std::exp(-x * x);
  if (r1 == 0 && r2 == 1) return std::exp(-x);
  if (r1 == 2 && r2 == 0) return 4.0 * bessel_k(0.0, 2.0 * x);
  if (r1 == 0 && r2 == 2) return 2.0 * bessel_k(0.0, 2.0 * std::sqrt(x));
  return std::nullopt;
}

LogPolynomial kernel_residue_at_zero(int r1, int r2) {
  const GammaProduct g = GammaProduct::kernel(r1, r2);
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return g.value(s); }, cplx(0.0), 0.4, -(r1 + r2), -1);
  return residue_polynomial(lr, r1 + r2, 1.0);
}

cplx r0_gamma(int r1, cplx x) {
  if (r1 < 1) throw DomainError("r0_gamma: need r1 >= 1");
  if (x == cplx(0.0)) throw DomainError("r0_gamma: x = 0");
  return kernel_residue_at_zero(r1, 0)(x);
}

cplx z_shifted(int r1, int r2, cplx x, double b, double tol) {
  if (!(b > -1.0 && b < 0.0)) throw DomainError("z_shifted: need -1 < b < 0");
  const IntegralResult r = mellin_barnes(GammaProduct::kernel(r1, r2), x, b, tol);
  if (r.failed) throw NumericError("z_shifted: quadrature did not converge");
  return r.value;
}

cplx z_shifted_via_residue(int r1, int r2, cplx x, double tol) {
  return z_tilde(r1, r2, x, std::nullopt, tol) - kernel_residue_at_zero(r1, r2)(x);
}

namespace {

double tail_constant(int r1, int r2) {
  const double d = r1 + 2 * r2;
  return 2.0 * std::pow(2.0, -r2) * std::pow(kPi, -0.5 * r2) * std::pow(2.0 * kPi, 0.5 * (d - 1.0)) /
         std::sqrt(d) * std::pow(2.0, -r2 * (r2 - d + 1.0) / d);
}

}  // namespace

double z_tail_bound(int r1, int r2, double y) { return z_tail_bound(r1, r2, cplx(y)); }

double z_tail_bound(int r1, int r2, cplx y) {
  if (r1 < 0 || r2 < 0 || r1 + r2 == 0) throw DomainError("z_tail_bound: invalid signature");
  if (y == cplx(0.0)) throw DomainError("z_tail_bound: y = 0");
  const double d = r1 + 2 * r2;
  const cplx w = std::pow(y / std::pow(2.0, r2), 2.0 / d);
  return kTailBoundSafety * tail_constant(r1, r2) * std::pow(std::abs(y), -(r1 + r2 - 1.0) / d) *
         std::exp(-d * w.real());
}

KernelSeries::KernelSeries(int r1, int r2, int max_pole)
    : r1_(r1), r2_(r2), gamma_(GammaProduct::kernel(r1, r2)) {
  polys_.reserve(max_pole + 1);
  for (int m = 0; m <= max_pole; ++m) {
    const int order = gamma_.pole_order(-m);
    if (order == 0) {
      polys_.emplace_back();
      poly_scale_.push_back(0.0);
      continue;
    }
    const LaurentResult lr = laurent_coefficients([&](cplx s) { return gamma_.value(s); }, cplx(-m), 0.4,
                                                  -order, -1);
    polys_.push_back(residue_polynomial(lr, order, 1.0));
    double scale = 0.0;
    for (const cplx& c : polys_.back().coeffs()) scale = std::max(scale, std::abs(c));
    poly_scale_.push_back(scale);
  }
}

cplx KernelSeries::sum(cplx u, int first) const {
  if (u == cplx(0.0)) return 0.0;
  const cplx log_u = std::log(u);
  const double abs_u = std::abs(u);
  const double log_weight = 1.0 + std::abs(log_u);
  cplx total = 0.0;
  double largest = 0.0;
  int quiet = 0;
  cplx power = std::pow(u, first);
  for (int m = first; m <= max_pole(); ++m, power *= u) {
    if (poly_scale_[m] == 0.0) continue;
    const LogPolynomial& p = polys_[m];
    const cplx term = power * p(u);
    total += term;
    const double bound = std::pow(abs_u, m) * poly_scale_[m] * std::pow(log_weight, p.degree()) * (p.degree() + 1);
    largest = std::max(largest, bound);
    if (bound < 1e-18 * largest) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
  }
  throw NumericError("KernelSeries: residue series not converged; argument too large");
}

cplx KernelSeries::z(cplx u, double tol) const {
  if (std::abs(u) <= 1.0) return sum(u, 1);
  const IntegralResult r = mellin_barnes(gamma_, u, std::nullopt, tol);
  if (r.failed) throw NumericError("kernel quadrature did not converge");
  return r.value - polys_[0](u);
}

cplx KernelSeries::z_tilde(cplx u, double tol) const {
  if (std::abs(u) <= 0.5) return sum(u, 0);
  const IntegralResult r = mellin_barnes(gamma_, u, std::nullopt, tol);
  if (r.failed) throw NumericError("kernel quadrature did not converge");
  return r.value;
}

}  // namespace dtheta
