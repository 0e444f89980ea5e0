#pragma once

#include <cstdint>
#include <vector>

#include "dtheta/field.hpp"

namespace dtheta {

enum class CoefficientKind { forward, inverse };

/// n ↦ a_{F,k}(n) (forward) or n ↦ μ_{F,k}(n) (inverse) for 1 ≤ n ≤ bound().
struct CoefficientTable {
  int k = 1;
  CoefficientKind kind = CoefficientKind::forward;
  /// values[0] is unused (0).
  std::vector<std::int64_t> values;

  std::size_t bound() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  std::int64_t operator[](std::size_t n) const { return values[n]; }
};

/// (f ∗ g)(n) = Σ_{de=n} f(d)g(e) for n ≤ min bounds.
std::vector<std::int64_t> dirichlet_convolve(const std::vector<std::int64_t>& f,
                                             const std::vector<std::int64_t>& g);

/// Dirichlet inverse of f (requires f(1) = ±1).
std::vector<std::int64_t> dirichlet_inverse(const std::vector<std::int64_t>& f);

/// a_F(n), n ≤ N. Abelian fields: convolution of the character sequences,
/// rounded (NumericError if any value is more than 1e-6 from an integer).
/// File fields: the file table (UnsupportedError if it is shorter than N).
CoefficientTable ideal_coeffs(const FieldDescriptor& field, std::size_t n_max);

/// k-fold Dirichlet self-convolution of a_F.
CoefficientTable power_coeffs(const FieldDescriptor& field, int k, std::size_t n_max);

/// Coefficients of ζ_F^{-k}: the Dirichlet inverse of power_coeffs.
CoefficientTable moebius_coeffs(const FieldDescriptor& field, int k, std::size_t n_max);

/// Number of ordered k-tuples with product n (d_k), n ≤ N.
std::vector<std::int64_t> divisor_function(int k, std::size_t n_max);

}  // namespace dtheta
