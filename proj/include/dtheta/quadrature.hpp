#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dtheta/complex.hpp"
#include "dtheta/laurent.hpp"

namespace dtheta {

/// Gauss–Legendre nodes and weights on [-1, 1] (cached per size).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

struct QuadratureSpec {
  double abscissa = 1.0;
  double half_height = 40.0;
  int panel_count = 80;
  int nodes_per_panel = 16;
};

struct IntegralResult {
  cplx value = 0.0;
  /// |I(2n nodes) − I(n nodes)|.
  double error_estimate = 0.0;
  /// Integral of |f| over the path, for relative tolerances.
  double abs_mass = 0.0;
  bool converged = false;
  bool failed = false;
};

inline constexpr double kConvergedChange = 1e-11;
inline constexpr double kFailedChange = 1e-8;

/// (1/2πi) ∫_{c−iT}^{c+iT} f(s) ds by composite Gauss–Legendre panels; the
/// node count per panel is doubled as a self-check. The change is judged
/// relative to max(|I|, 1e-5·∫|f|/2π).
IntegralResult line_integral(const ComplexFunction& f, const QuadratureSpec& spec);

/// Same, on an arbitrary vertical segment t in [t_lo, t_hi] with uniform panels.
IntegralResult vertical_integral(const ComplexFunction& f, double c, double t_lo, double t_hi,
                                 int panels, int nodes);

/// Same, with panels [breaks[i], breaks[i+1]] on the line Re(s) = c.
IntegralResult vertical_integral(const ComplexFunction& f, double c, const std::vector<double>& breaks,
                                 int nodes);

/// ∫_a^b g(t) dt by adaptive bisection of Gauss–Legendre panels (n vs 2n
/// nodes) until each panel's change is below abs_tol·(panel width)/(b−a).
IntegralResult integrate_adaptive(const std::function<cplx(double)>& g, double a, double b,
                                  double abs_tol, int max_depth = 30);

}  // namespace dtheta
