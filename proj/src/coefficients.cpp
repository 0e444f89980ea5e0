#include "dtheta/coefficients.hpp"

#include <cmath>

#include "dtheta/error.hpp"

namespace dtheta {

std::vector<std::int64_t> dirichlet_convolve(const std::vector<std::int64_t>& f,
                                             const std::vector<std::int64_t>& g) {
  const std::size_t n = std::min(f.size(), g.size());
  std::vector<std::int64_t> h(n, 0);
  for (std::size_t d = 1; d < n; ++d) {
    if (f[d] == 0) continue;
    for (std::size_t e = 1; d * e < n; ++e) h[d * e] += f[d] * g[e];
  }
  return h;
}

std::vector<std::int64_t> dirichlet_inverse(const std::vector<std::int64_t>& f) {
  const std::size_t n = f.size();
  if (n < 2 || (f[1] != 1 && f[1] != -1)) throw DomainError("dirichlet_inverse: f(1) must be a unit");
  std::vector<std::int64_t> acc(n, 0), g(n, 0);
  for (std::size_t m = 1; m < n; ++m) {
    g[m] = m == 1 ? f[1] : -acc[m] * f[1];
    if (g[m] == 0) continue;
    for (std::size_t d = 2; d * m < n; ++d)
      if (f[d] != 0) acc[d * m] += f[d] * g[m];
  }
  return g;
}

CoefficientTable ideal_coeffs(const FieldDescriptor& field, std::size_t n_max) {
  if (n_max < 1) throw DomainError("ideal_coeffs: bound must be >= 1");
  CoefficientTable table;
  if (!field.is_abelian()) {
    const auto& a = field.file_coefficients();
    if (a.size() < n_max + 1)
      throw UnsupportedError("coefficient table exhausted: file covers n <= " + std::to_string(a.size() - 1) +
                             ", need " + std::to_string(n_max));
    table.values.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
    return table;
  }
  const std::size_t n = n_max + 1;
  std::vector<cplx> acc(n, 0.0);
  acc[1] = 1.0;
  for (const auto& chi : field.characters()) {
    if (chi.modulus() == 1) {
      // Convolution with the constant sequence is a divisor sum.
      std::vector<cplx> next(n, 0.0);
      for (std::size_t d = 1; d < n; ++d)
        if (acc[d] != cplx(0.0))
          for (std::size_t m = d; m < n; m += d) next[m] += acc[d];
      acc = std::move(next);
      continue;
    }
    std::vector<cplx> chi_values(chi.modulus());
    for (int a = 0; a < chi.modulus(); ++a) chi_values[a] = chi.value(a);
    std::vector<cplx> next(n, 0.0);
    for (std::size_t d = 1; d < n; ++d) {
      if (acc[d] == cplx(0.0)) continue;
      for (std::size_t e = 1; d * e < n; ++e) {
        const cplx v = chi_values[e % chi.modulus()];
        if (v != cplx(0.0)) next[d * e] += acc[d] * v;
      }
    }
    acc = std::move(next);
  }
  table.values.assign(n, 0);
  for (std::size_t m = 1; m < n; ++m) {
    const double re = std::round(acc[m].real());
    if (std::abs(acc[m] - cplx(re)) > 1e-6)
      throw NumericError("ideal_coeffs: non-integral coefficient at n = " + std::to_string(m));
    if (re < 0) throw NumericError("ideal_coeffs: negative coefficient at n = " + std::to_string(m));
    table.values[m] = static_cast<std::int64_t>(re);
  }
  return table;
}

CoefficientTable power_coeffs(const FieldDescriptor& field, int k, std::size_t n_max) {
  if (k < 1) throw DomainError("power_coeffs: k must be >= 1");
  const CoefficientTable base = ideal_coeffs(field, n_max);
  CoefficientTable out = base;
  for (int j = 1; j < k; ++j) out.values = dirichlet_convolve(out.values, base.values);
  out.k = k;
  return out;
}

CoefficientTable moebius_coeffs(const FieldDescriptor& field, int k, std::size_t n_max) {
  CoefficientTable out = power_coeffs(field, k, n_max);
  out.values = dirichlet_inverse(out.values);
  out.kind = CoefficientKind::inverse;
  return out;
}

std::vector<std::int64_t> divisor_function(int k, std::size_t n_max) {
  if (k < 1) throw DomainError("divisor_function: k must be >= 1");
  std::vector<std::int64_t> ones(n_max + 1, 1);
  ones[0] = 0;
  std::vector<std::int64_t> out = ones;
  for (int j = 1; j < k; ++j) out = dirichlet_convolve(out, ones);
  return out;
}

}  // namespace dtheta
