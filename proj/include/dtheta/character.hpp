#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtheta/complex.hpp"

namespace dtheta {

/// Kronecker symbol (a/n), computed by the quadratic-reciprocity recursion.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// A Dirichlet character stored exactly: χ(a) = exp(2πi·e_a/m) for units a,
/// with exponent -1 marking χ(a) = 0 (gcd(a, q) > 1).
///
/// The exponent table is normalised so that m is the exact order of χ.
class DirichletCharacter {
 public:
  static constexpr int kZero = -1;

  /// exponents[a-1] is e_a for a = 1..q. Validates multiplicativity,
  /// χ(1) = 1 and the zero pattern; throws ValidationError otherwise.
  DirichletCharacter(int modulus, int order, std::vector<int> exponents);

  /// The trivial character modulo q (q = 1 gives the constant 1).
  static DirichletCharacter principal(int modulus = 1);
  /// Quadratic character n ↦ (disc/n) of a fundamental discriminant.
  static DirichletCharacter quadratic(std::int64_t fundamental_disc);
  /// Character modulo an odd prime p sending the least primitive root g to
  /// exp(2πi·t/m); requires m | p-1.
  static DirichletCharacter power_residue(int p, int m, int t);

  int modulus() const noexcept { return modulus_; }
  int order() const noexcept { return order_; }
  /// Exponent of χ(n), or kZero.
  int exponent(std::int64_t n) const;
  cplx value(std::int64_t n) const;
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  bool is_principal() const noexcept { return order_ == 1; }
  /// χ(-1) = 1.
  bool is_even() const;
  int conductor() const;
  /// The primitive character inducing this one (modulus = conductor).
  DirichletCharacter primitive() const;
  DirichletCharacter conjugate() const;
  DirichletCharacter operator*(const DirichletCharacter& other) const;

  /// Equality as functions on the integers coprime to both moduli
  /// (i.e. the induced primitive characters coincide).
  bool same_primitive(const DirichletCharacter& other) const;

  std::string to_line() const;

 private:
  int modulus_;
  int order_;
  std::vector<int> exponents_;
  std::vector<cplx> values_;
};

}  // namespace dtheta
