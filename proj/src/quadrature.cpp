#include "dtheta/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "dtheta/error.hpp"

namespace dtheta {

namespace {

// (P_n(z), P_n'(z)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double z) {
  double p0 = 1.0, p1 = z;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (z * p1 - p0) / (z * z - 1.0)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  if (n < 2) throw DomainError("gauss_legendre: need at least two nodes");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(n, z).second;
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

struct PanelSums {
  cplx value = 0.0;
  double mass = 0.0;
};

PanelSums panel(const std::function<cplx(double)>& g, double a, double b, int nodes) {
  const auto& [x, w] = gauss_legendre(nodes);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  PanelSums s;
  for (int i = 0; i < nodes; ++i) {
    const cplx v = g(mid + half * x[i]);
    if (!is_finite(v)) throw NumericError("quadrature: non-finite integrand value");
    s.value += w[i] * v;
    s.mass += w[i] * std::abs(v);
  }
  s.value *= half;
  s.mass *= half;
  return s;
}

void classify(IntegralResult& r) {
  const double scale = std::max(std::abs(r.value), 1e-5 * r.abs_mass);
  const double rel = scale > 0.0 ? r.error_estimate / scale : r.error_estimate;
  r.converged = rel < kConvergedChange;
  r.failed = rel > kFailedChange;
}

}  // namespace

IntegralResult vertical_integral(const ComplexFunction& f, double c, const std::vector<double>& breaks,
                                 int nodes) {
  if (breaks.size() < 2) throw DomainError("line_integral: need at least one panel");
  if (nodes < 4) throw DomainError("line_integral: nodes_per_panel must be >= 4");
  const std::function<cplx(double)> g = [&](double t) { return f(cplx(c, t)); };
  cplx coarse = 0.0, fine = 0.0;
  double mass = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    if (!(b > a)) throw DomainError("line_integral: panel breaks must increase");
    coarse += panel(g, a, b, nodes).value;
    const PanelSums s = panel(g, a, b, 2 * nodes);
    fine += s.value;
    mass += s.mass;
  }
  // ds = i dt, so (1/2πi) ds = dt/2π.
  IntegralResult r;
  r.value = fine / (2.0 * kPi);
  r.error_estimate = std::abs(fine - coarse) / (2.0 * kPi);
  r.abs_mass = mass / (2.0 * kPi);
  classify(r);
  return r;
}

IntegralResult vertical_integral(const ComplexFunction& f, double c, double t_lo, double t_hi,
                                 int panels, int nodes) {
  if (!(t_hi > t_lo)) throw DomainError("line_integral: empty range");
  if (panels < 1) throw DomainError("line_integral: panel_count must be >= 1");
  std::vector<double> breaks(panels + 1);
  for (int p = 0; p <= panels; ++p) breaks[p] = t_lo + (t_hi - t_lo) * p / panels;
  breaks[panels] = t_hi;
  return vertical_integral(f, c, breaks, nodes);
}

IntegralResult line_integral(const ComplexFunction& f, const QuadratureSpec& spec) {
  if (!(spec.half_height > 0.0)) throw DomainError("line_integral: half_height must be positive");
  return vertical_integral(f, spec.abscissa, -spec.half_height, spec.half_height, spec.panel_count,
                           spec.nodes_per_panel);
}

IntegralResult integrate_adaptive(const std::function<cplx(double)>& g, double a, double b,
                                  double abs_tol, int max_depth) {
  if (!(b > a)) throw DomainError("integrate_adaptive: empty interval");
  constexpr int kNodes = 10;
  IntegralResult r;
  bool ok = true;
  const double len = b - a;
  struct Rec {
    const std::function<cplx(double)>& g;
    double tol_density;
    int max_depth;
    IntegralResult& r;
    bool& ok;
    void operator()(double lo, double hi, int depth) const {
      const PanelSums c = panel(g, lo, hi, kNodes);
      const PanelSums f = panel(g, lo, hi, 2 * kNodes);
      const double err = std::abs(f.value - c.value);
      if (err <= tol_density * (hi - lo) || depth >= max_depth) {
        if (err > tol_density * (hi - lo)) ok = false;
        r.value += f.value;
        r.abs_mass += f.mass;
        r.error_estimate += err;
        return;
      }
      const double mid = 0.5 * (lo + hi);
      (*this)(lo, mid, depth + 1);
      (*this)(mid, hi, depth + 1);
    }
  };
  Rec{g, abs_tol / len, max_depth, r, ok}(a, b, 0);
  r.converged = ok;
  r.failed = !ok;
  return r;
}

}  // namespace dtheta
