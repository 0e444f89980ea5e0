#include "dtheta/inverse_theta.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dtheta/coefficients.hpp"
#include "dtheta/error.hpp"
#include "dtheta/gamma.hpp"
#include "dtheta/parallel.hpp"
#include "dtheta/steen.hpp"
#include "dtheta/theta.hpp"
#include "dtheta/zeta.hpp"

namespace dtheta {
namespace {

constexpr std::size_t kMaxDirect = 2000000;
/// Direct terms run until |y_n| ≤ |y_1| / kDirectRatio.
constexpr double kDirectRatio = 200.0;

void check_k(int k) {
  if (k < 1) throw DomainError("k must be >= 1");
}

void check_sector(const FieldDescriptor& field, cplx x, const char* op) {
  if (x == cplx(0.0) || !is_finite(x)) throw DomainError(std::string(op) + ": x must be finite and non-zero");
  if (std::abs(std::arg(x)) >= 0.5 * kPi * field.degree() - 0.2)
    throw DomainError(std::string(op) + ": |Arg x| must be below pi*d/2 - 0.2");
}

/// Λ_F(s)^k = γ_F(s)^k / ζ_F(1−s)^k.
cplx lambda_power(const FieldDescriptor& field, int k, cplx s) {
  return std::exp(static_cast<double>(k) * log_gamma_factor(field, s)) / std::pow(dedekind_zeta(1.0 - s, field), k);
}

double kernel_scale(const FieldDescriptor& field, int k) {
  return std::pow(2.0, k * field.r2()) * std::pow(kPi, 0.5 * k * field.degree()) /
         std::pow(static_cast<double>(field.disc()), 0.5 * k);
}

std::string trim(const std::string& raw) {
  std::string line = raw;
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

double smooth_weight(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  const double u = 2.0 * t - 1.0;
  return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

}  // namespace

ZeroList ZeroList::prefix(std::size_t n) const {
  ZeroList out = *this;
  if (n < out.gammas.size()) out.gammas.resize(n);
  return out;
}

void validate_zeros(const std::vector<double>& gammas) {
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] > 0.0) || !std::isfinite(gammas[i]))
      throw ValidationError("zero ordinates must be positive and finite");
    if (i > 0 && !(gammas[i] - gammas[i - 1] > 1e-6))
      throw ValidationError("zero ordinates must be ascending and separated by more than 1e-6");
  }
}

ZeroList parse_zeros(const std::string& text) {
  ZeroList out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::size_t used = 0;
    double g = 0.0;
    try {
      g = std::stod(line, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a decimal ordinate", line_no);
    }
    if (used != line.size()) throw ParseError("trailing data after ordinate", line_no);
    if (!(g > 0.0) || !std::isfinite(g)) throw ParseError("ordinate must be positive", line_no);
    if (!out.gammas.empty() && !(g - out.gammas.back() > 1e-6))
      throw ParseError("ordinates must be ascending", line_no);
    out.gammas.push_back(g);
  }
  return out;
}

ZeroList load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  ZeroList out = parse_zeros(os.str());
  out.source = path;
  return out;
}

void write_zeros(const std::string& path, const std::vector<double>& gammas, const std::string& comment) {
  validate_zeros(gammas);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  if (!comment.empty()) out << "# " << comment << '\n';
  char buf[64];
  for (double g : gammas) {
    std::snprintf(buf, sizeof buf, "%.15g\n", g);
    out << buf;
  }
  if (!out) throw Error("write failed: " + path);
}

LSeriesResult l_series(const FieldDescriptor& field, int k, cplx x, double tol) {
  check_k(k);
  check_sector(field, x, "l_series");
  const int kr1 = k * field.r1(), kr2 = k * field.r2();
  const cplx y0 = kernel_scale(field, k) * std::sqrt(x);
  const double size = std::max(1.0, std::abs(y0));
  const std::size_t cutoff = static_cast<std::size_t>(std::ceil(kDirectRatio * size));
  if (cutoff > kMaxDirect) throw DomainError("l_series: |x| too large for the coefficient table");

  const CoefficientTable mu = moebius_coeffs(field, k, cutoff);
  const KernelSeries kernel(kr1, kr2);

  std::vector<std::size_t> active;
  for (std::size_t n = 1; n <= cutoff; ++n)
    if (mu[n] != 0) active.push_back(n);
  std::vector<cplx> terms(active.size());
  parallel_for(active.size(), [&](std::size_t i) {
    const double n = static_cast<double>(active[i]);
    terms[i] = static_cast<double>(mu[active[i]]) / n * kernel.z(y0 / n, 1e-13);
  });
  LSeriesResult r;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) r.value += *it;
  r.cutoff = cutoff;

  // n > N: Z(y0/n) = Σ_m (y0/n)^m P_m(log y0 − log n), and
  // Σ_{n>N} μ(n) n^{−1−m} (−log n)^i is the i-th derivative of ζ_F^{−k} at
  // 1+m minus its partial sum.
  const double ratio = std::abs(y0) / static_cast<double>(cutoff);
  const double log_n_max = std::log(static_cast<double>(cutoff));
  const cplx log_y0 = std::log(y0);
  const double weight = 1.0 + std::abs(log_y0) + log_n_max;
  const double radius = field.is_abelian() ? 0.5 : 0.4;
  const int first = kr2 > 0 ? 1 : 2;
  int quiet = 0;
  double last_bound = 0.0;
  for (int m = first; m <= kernel.max_pole(); ++m) {
    const LogPolynomial& p = kernel.residue(m);
    if (p.coeffs().empty()) continue;
    const int deg = p.degree();
    double norm = 0.0;
    for (const cplx& c : p.coeffs()) norm = std::max(norm, std::abs(c));
    const double bound = std::pow(ratio, m) * norm * std::pow(weight, deg) * (deg + 1) *
                         std::pow(1.0 + log_n_max, k * field.degree());
    if (bound < 1e-3 * tol) {
      last_bound = bound;
      if (++quiet >= 2) break;
      continue;
    }
    quiet = 0;
    const double s = 1.0 + m;
    const LaurentResult taylor = laurent_coefficients(
        [&](cplx z) { return 1.0 / std::pow(dedekind_zeta(z, field), k); }, cplx(s), radius, 0, deg);
    std::vector<cplx> tail(deg + 1);
    double fact = 1.0;
    for (int i = 0; i <= deg; ++i) {
      if (i > 0) fact *= i;
      tail[i] = fact * taylor[i];
    }
    for (std::size_t n = 1; n <= cutoff; ++n) {
      if (mu[n] == 0) continue;
      const double nn = static_cast<double>(n);
      const double base = static_cast<double>(mu[n]) * std::pow(nn, -s);
      const double neg_log = -std::log(nn);
      double pw = 1.0;
      for (int i = 0; i <= deg; ++i, pw *= neg_log) tail[i] -= base * pw;
    }
    // Σ_j p_j Σ_i C(j,i) (log y0)^{j−i} tail_i.
    cplx acc = 0.0;
    for (int j = 0; j <= deg; ++j) {
      double binom = 1.0;
      for (int i = 0; i <= j; ++i) {
        if (i > 0) binom = binom * (j - i + 1) / i;
        acc += p.coeffs()[j] * binom * std::pow(log_y0, j - i) * tail[i];
      }
    }
    r.value += std::pow(y0, m) * acc;
    r.expansion_terms = m;
  }
  r.remainder_bound = 2.0 * last_bound;
  r.converged = quiet >= 2 && r.remainder_bound < tol;
  return r;
}

LogPolynomial r0_inverse_polynomial(const FieldDescriptor& field, int k) {
  check_k(k);
  field.require_abelian("r0_inverse");
  const int order = k * field.unit_rank();
  if (order == 0) return LogPolynomial{};
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return lambda_power(field, k, s); }, cplx(0.0), 0.25, -order, -1);
  return residue_polynomial(lr, order, 0.5);
}

cplx r0_inverse(const FieldDescriptor& field, int k, cplx x) {
  if (x == cplx(0.0)) throw DomainError("r0_inverse: x = 0");
  return r0_inverse_polynomial(field, k)(x);
}

cplx r1_inverse(const FieldDescriptor& field, int k, cplx x) {
  check_k(k);
  field.require_abelian("r1_inverse");
  if (x == cplx(0.0)) throw DomainError("r1_inverse: x = 0");
  const int order = k * field.unit_rank();
  if (order == 0) return 0.0;
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return lambda_power(field, k, s); }, cplx(1.0), 0.25, -order, -1);
  return residue_polynomial(lr, order, 0.5)(x) / std::sqrt(x);
}

cplx ZeroResidue::pair(cplx x) const {
  const cplx rho(0.5, gamma);
  return std::exp(-0.5 * rho * std::log(x)) * at_rho(x) + std::exp(-0.5 * std::conj(rho) * std::log(x)) * at_conj(x);
}

ZeroResidue zero_residue(const FieldDescriptor& field, int k, double gamma, double neighbour_gap) {
  check_k(k);
  field.require_abelian("zero_residue");
  if (!(gamma > 0.0)) throw DomainError("zero_residue: gamma must be positive");
  ZeroResidue z;
  z.gamma = gamma;
  z.radius = std::min(0.05, 0.5 * neighbour_gap);
  const LaurentResult lr = laurent_coefficients([&](cplx s) { return lambda_power(field, k, s); },
                                                cplx(0.5, gamma), z.radius, -k - 1, 0);
  const double lead = std::abs(lr[-k]);
  const double scale = std::pow(z.radius, -k) * lead;
  if (scale < 1e-6 * std::abs(lr[0]))
    throw NumericError("zero_residue: no pole of order k at gamma = " + std::to_string(gamma) +
                       " (not a zero of the zeta function)");
  z.excess = std::abs(lr[-k - 1]) / lead;
  if (z.excess > 1e-3)
    throw NumericError("zero_residue: zero at gamma = " + std::to_string(gamma) +
                       " is not simple or is located too coarsely");
  // Keeping c_{−k−1} absorbs the offset of γ from the true zero.
  z.at_rho = residue_polynomial(lr, k + 1, 0.5);
  std::vector<cplx> conj = z.at_rho.coeffs();
  for (cplx& c : conj) c = std::conj(c);
  z.at_conj = LogPolynomial(std::move(conj));
  return z;
}

std::vector<ZeroResidue> zero_residues(const FieldDescriptor& field, int k, const ZeroList& zeros) {
  validate_zeros(zeros.gammas);
  const auto& g = zeros.gammas;
  std::vector<ZeroResidue> out(g.size());
  parallel_for(g.size(), [&](std::size_t i) {
    double gap = 2.0 * g[i];
    if (i > 0) gap = std::min(gap, g[i] - g[i - 1]);
    if (i + 1 < g.size()) gap = std::min(gap, g[i + 1] - g[i]);
    out[i] = zero_residue(field, k, g[i], gap);
  });
  return out;
}

cplx r_rho(const FieldDescriptor& field, int k, cplx x, double gamma) {
  if (x == cplx(0.0)) throw DomainError("r_rho: x = 0");
  return zero_residue(field, k, gamma).pair(x);
}

ZeroSum zero_sum(const std::vector<ZeroResidue>& residues, cplx x) {
  if (residues.empty()) throw DomainError("zero_sum: the zero list is empty");
  if (x == cplx(0.0)) throw DomainError("zero_sum: x = 0");
  ZeroSum out;
  for (const ZeroResidue& z : residues) {
    const cplx term = z.pair(x);
    out.value += term;
    out.tail_estimate = std::abs(term);
    ++out.pairs;
  }
  return out;
}

ZeroSum zero_sum(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros) {
  if (zeros.empty()) throw DomainError("zero_sum: the zero list is empty");
  return zero_sum(zero_residues(field, k, zeros), x);
}

cplx u_inverse(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros, double tol) {
  const ZeroSum zs = zero_sum(field, k, x, zeros);
  return l_series(field, k, x, tol).value + r0_inverse(field, k, x) + 0.5 * zs.value;
}

InverseReport check_inverse_theta(const FieldDescriptor& field, int k, cplx x, const ZeroList& zeros, double tol) {
  check_sector(field, x, "check_inverse_theta");
  const std::vector<ZeroResidue> residues = zero_residues(field, k, zeros);
  const LogPolynomial r0 = r0_inverse_polynomial(field, k);
  const auto u = [&](cplx t, double& tail) {
    const ZeroSum zs = zero_sum(residues, t);
    tail = std::max(tail, zs.tail_estimate);
    return l_series(field, k, t, tol).value + r0(t) + 0.5 * zs.value;
  };
  InverseReport rep;
  rep.x = x;
  rep.lhs = u(1.0 / x, rep.zero_tail_estimate);
  rep.rhs = std::sqrt(x) * u(x, rep.zero_tail_estimate);
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_error = relative_error(rep.lhs, rep.rhs);
  rep.zeros_used = static_cast<int>(zeros.size());
  return rep;
}

double hlr_moebius_sum(double x, const HlrOptions& options) {
  if (!(x > 0.0)) throw DomainError("hlr: x must be positive");
  if (options.cutoff < 2) throw DomainError("hlr: cutoff must be at least 2");
  const CoefficientTable mu = moebius_coeffs(field_rationals(), 1, options.cutoff);
  const double big_n = static_cast<double>(options.cutoff);
  long double sum = 0.0L;
  for (std::size_t n = options.cutoff; n >= 1; --n) {
    if (mu[n] == 0) continue;
    const double nn = static_cast<double>(n);
    const double e = -x / (nn * nn);
    const double term = options.smooth ? std::exp(e) * smooth_weight(nn / big_n) : std::expm1(e);
    sum += static_cast<long double>(mu[n]) * term / nn;
  }
  return static_cast<double>(sum);
}

cplx hlr_zero_term(double x, const ZeroList& zeros) {
  if (!(x > 0.0)) throw DomainError("hlr: x must be positive");
  if (zeros.empty()) throw DomainError("hlr: the zero list is empty");
  validate_zeros(zeros.gammas);
  const double base = kPi / std::sqrt(x);
  cplx sum = 0.0;
  for (double g : zeros.gammas) {
    const cplx rho(0.5, g);
    const cplx term = std::pow(base, rho) * complex_gamma(0.5 * (1.0 - rho)) / zeta_derivative(rho, 1);
    sum += term + std::conj(term);
  }
  return -sum / (2.0 * std::sqrt(kPi));
}

InverseReport hlr_check(double x, const ZeroList& zeros, const HlrOptions& options) {
  if (!(x > 0.0)) throw DomainError("hlr: x must be positive");
  if (zeros.empty()) throw DomainError("hlr: the zero list is empty");
  InverseReport rep;
  rep.x = x;
  rep.lhs = hlr_moebius_sum(x, options);
  rep.rhs = std::sqrt(kPi / x) * hlr_moebius_sum(kPi * kPi / x, options) + hlr_zero_term(x, zeros);
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_error = relative_error(rep.lhs, rep.rhs);
  rep.zeros_used = static_cast<int>(zeros.size());
  const cplx rho(0.5, zeros.gammas.back());
  rep.zero_tail_estimate = 2.0 * std::abs(std::pow(kPi / std::sqrt(x), rho) * complex_gamma(0.5 * (1.0 - rho)) /
                                          zeta_derivative(rho, 1)) /
                           (2.0 * std::sqrt(kPi));
  return rep;
}

InverseReport dgv_check(const FieldDescriptor& field, double x, const ZeroList& zeros, double tol) {
  field.require_abelian("dgv_check");
  if (field.degree() > 2) throw DomainError("dgv_check: needs a field of degree at most 2");
  if (!(x > 0.0)) throw DomainError("dgv_check: x must be positive");
  if (zeros.empty()) throw DomainError("dgv_check: the zero list is empty");
  validate_zeros(zeros.gammas);
  const int r1 = field.r1(), r2 = field.r2(), r = field.unit_rank();
  const double alpha = kernel_scale(field, 1) * std::sqrt(x);
  const double beta = kernel_scale(field, 1) / std::sqrt(x);

  // g(s) = Γ((1−s)/2)^{r1} Γ(1−s)^{r2} / ζ_F(s); residues of g(s) a^s.
  const auto g = [&](cplx s) {
    return std::exp(static_cast<double>(r1) * log_gamma(0.5 * (1.0 - s)) + static_cast<double>(r2) * log_gamma(1.0 - s)) /
           dedekind_zeta(s, field);
  };
  LogPolynomial at_zero;
  if (r > 0) at_zero = residue_polynomial(laurent_coefficients(g, cplx(0.0), 0.25, -r, -1), r, -1.0);

  const auto& gs = zeros.gammas;
  std::vector<cplx> weights(gs.size());
  parallel_for(gs.size(), [&](std::size_t i) {
    double gap = 2.0 * gs[i];
    if (i > 0) gap = std::min(gap, gs[i] - gs[i - 1]);
    if (i + 1 < gs.size()) gap = std::min(gap, gs[i + 1] - gs[i]);
    const cplx rho(0.5, gs[i]);
    const cplx dz = taylor_derivative([&](cplx s) { return dedekind_zeta(s, field); }, rho, 1,
                                      std::min(0.05, 0.5 * gap));
    weights[i] = std::exp(static_cast<double>(r1) * log_gamma(0.5 * (1.0 - rho)) +
                          static_cast<double>(r2) * log_gamma(1.0 - rho)) /
                 dz;
  });
  double tail = 0.0;
  const auto zero_part = [&](double a) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const cplx rho(0.5, gs[i]);
      const cplx term = std::pow(a, rho) * weights[i];
      sum += term + std::conj(term);
      if (i + 1 == gs.size()) tail = std::max(tail, 2.0 * std::abs(term));
    }
    return sum;
  };

  InverseReport rep;
  rep.x = x;
  rep.lhs = std::sqrt(alpha) * l_series(field, 1, x, tol).value - std::sqrt(beta) * l_series(field, 1, 1.0 / x, tol).value;
  rep.rhs = at_zero(alpha) / std::sqrt(alpha) - at_zero(beta) / std::sqrt(beta) +
            0.5 * (zero_part(alpha) / std::sqrt(alpha) - zero_part(beta) / std::sqrt(beta));
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_error = relative_error(rep.lhs, rep.rhs);
  rep.zeros_used = static_cast<int>(gs.size());
  rep.zero_tail_estimate = tail;
  return rep;
}

}  // namespace dtheta
