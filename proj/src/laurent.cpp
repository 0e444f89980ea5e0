#include "dtheta/laurent.hpp"

#include <cmath>

#include "dtheta/error.hpp"

namespace dtheta {

cplx LogPolynomial::operator()(cplx x) const {
  if (coeffs_.empty()) return 0.0;
  if (coeffs_.size() == 1) return coeffs_[0];
  if (x == cplx(0.0)) throw DomainError("LogPolynomial: log of zero");
  const cplx l = std::log(x);
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * l + *it;
  return acc;
}

LogPolynomial LogPolynomial::reflected() const {
  std::vector<cplx> c = coeffs_;
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return LogPolynomial(std::move(c));
}

cplx LaurentResult::operator[](int j) const {
  const int i = j - lowest;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0.0;
  return coeffs[i];
}

LaurentResult laurent_coefficients(const ComplexFunction& f, cplx s0, double radius, int lo, int hi,
                                   int max_points) {
  if (!(radius > 0.0)) throw DomainError("laurent_coefficients: radius must be positive");
  if (hi < lo) throw DomainError("laurent_coefficients: empty coefficient range");
  int n = 64;
  while (n < 4 * (hi - lo + 1)) n *= 2;

  std::vector<cplx> samples;
  double scale = 0.0;
  auto sample = [&](int count, int stride_offset, int stride) {
    for (int m = stride_offset; m < count; m += stride) {
      const double theta = 2.0 * kPi * m / count;
      const cplx v = f(s0 + std::polar(radius, theta));
      if (!is_finite(v) || std::abs(v) > 1e300)
        throw DomainError("laurent_coefficients: singularity on or near the contour");
      samples[m] = v;
      scale = std::max(scale, std::abs(v));
    }
  };
  auto extract = [&](int count) {
    std::vector<cplx> c(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) {
      cplx acc = 0.0;
      for (int m = 0; m < count; ++m) acc += samples[m] * std::polar(1.0, -2.0 * kPi * j * m / count);
      c[j - lo] = acc / static_cast<double>(count) * std::pow(radius, -j);
    }
    return c;
  };

  samples.assign(n, 0.0);
  sample(n, 0, 1);
  LaurentResult result;
  result.lowest = lo;
  result.coeffs = extract(n);
  while (true) {
    if (2 * n > max_points) break;
    std::vector<cplx> old(samples);
    samples.assign(2 * n, 0.0);
    for (int m = 0; m < n; ++m) samples[2 * m] = old[m];
    sample(2 * n, 1, 2);
    n *= 2;
    std::vector<cplx> next = extract(n);
    double change = 0.0;
    for (int j = lo; j <= hi; ++j)
      change = std::max(change, std::abs(next[j - lo] - result.coeffs[j - lo]) * std::pow(radius, j));
    result.coeffs = std::move(next);
    result.error_estimate = change;
    if (change <= 1e-13 * std::max(scale, 1e-300)) {
      result.converged = true;
      break;
    }
  }
  result.points = n;
  return result;
}

LogPolynomial residue_polynomial(const LaurentResult& laurent, int order, double kappa) {
  std::vector<cplx> p(std::max(order, 1), 0.0);
  double fact = 1.0;
  double kp = 1.0;
  for (int j = 0; j < order; ++j) {
    if (j > 0) {
      fact *= j;
      kp *= -kappa;
    }
    p[j] = laurent[-1 - j] * kp / fact;
  }
  return LogPolynomial(std::move(p));
}

cplx taylor_derivative(const ComplexFunction& f, cplx s, int order, double radius) {
  const LaurentResult r = laurent_coefficients(f, s, radius, order, order);
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  return fact * r[order];
}

}  // namespace dtheta
