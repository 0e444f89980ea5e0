#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dtheta/character.hpp"
#include "dtheta/complex.hpp"

namespace dtheta {

struct FieldConstants {
  /// Residue of ζ_F at s = 1.
  double h = 0.0;
  /// Leading Laurent coefficient of ζ_F at s = 0 (coefficient of s^r).
  double c = 0.0;
};

/// A number field as seen by its Dedekind zeta function: either a group of
/// primitive Dirichlet characters (abelian mode, full analytic continuation)
/// or an ideal-count table read from a file (Re(s) > 1.5 only).
class FieldDescriptor {
 public:
  int r1() const noexcept { return r1_; }
  int r2() const noexcept { return r2_; }
  int degree() const noexcept { return r1_ + 2 * r2_; }
  int unit_rank() const noexcept { return r1_ + r2_ - 1; }
  std::int64_t disc() const noexcept { return disc_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const noexcept { return !characters_.empty(); }
  const std::vector<DirichletCharacter>& characters() const noexcept { return characters_; }
  /// File mode only: a_F(n) for n = 0..N (index 0 unused).
  const std::vector<std::int64_t>& file_coefficients() const;

  /// H_F and C_F, computed on first use and shared by copies.
  const FieldConstants& constants() const;

  /// Throws UnsupportedError unless the field is abelian.
  void require_abelian(const char* operation) const;

 private:
  friend FieldDescriptor make_field_abelian(std::vector<DirichletCharacter>, std::string);
  friend FieldDescriptor make_field_from_coeffs(const std::string&, int, int, std::int64_t);
  friend FieldDescriptor make_field_from_table(std::vector<std::int64_t>, int, int, std::int64_t,
                                               std::string);

  struct Cache;

  int r1_ = 1;
  int r2_ = 0;
  std::int64_t disc_ = 1;
  std::string name_;
  std::vector<DirichletCharacter> characters_;
  std::shared_ptr<const std::vector<std::int64_t>> table_;
  std::shared_ptr<Cache> cache_;
};

/// Characters are reduced to primitive form. Requires exactly one principal
/// character and closure under conjugation and multiplication; the number
/// of odd characters must be 0 or d/2 (it equals r2).
FieldDescriptor make_field_abelian(std::vector<DirichletCharacter> characters, std::string name = "");

/// File-mode field from a coefficient file (`<n> <a_n>` lines).
FieldDescriptor make_field_from_coeffs(const std::string& path, int r1, int r2, std::int64_t disc);

FieldDescriptor make_field_from_table(std::vector<std::int64_t> table, int r1, int r2, std::int64_t disc,
                                      std::string name = "");

/// Parses `char <q> <m> <e_1>,...,<e_q>` lines (`#` comments).
std::vector<DirichletCharacter> parse_characters(const std::string& text);
std::vector<DirichletCharacter> load_characters(const std::string& path);
/// Parses `<n> <a_n>` lines; missing n between entries are zero.
std::vector<std::int64_t> parse_coefficients(const std::string& text);

FieldDescriptor field_rationals();
/// Q(√m) from its fundamental discriminant (5, 8, 12, -3, -4, ...).
FieldDescriptor field_quadratic(std::int64_t fundamental_disc);
/// The real cubic field of conductor 7 (D = 49).
FieldDescriptor field_cubic7();
/// The fifth cyclotomic field Q(ζ5): r1 = 0, r2 = 2, D = 125.
FieldDescriptor field_cyclotomic5();
/// The real cyclic quartic field Q(ζ16)^+ = Q(cos π/8): r1 = 4, D = 2048.
FieldDescriptor field_quartic16();

/// Built-in name (Q, sqrt5, sqrt<m>, quad:<disc>, cubic7, zeta5, quartic16)
/// or a path to a character file.
FieldDescriptor resolve_field(const std::string& spec);

/// ζ_F(s). Abelian: ∏ L(s, χ). File mode: the Dirichlet series, Re(s) > 1.5.
cplx dedekind_zeta(cplx s, const FieldDescriptor& field);

/// log of (D/(4^{r2}π^d))^{s/2} Γ(s/2)^{r1} Γ(s)^{r2}.
cplx log_gamma_factor(const FieldDescriptor& field, cplx s);

/// Ω_F(s) = (D/(4^{r2}π^d))^{s/2} Γ(s/2)^{r1} Γ(s)^{r2} ζ_F(s).
cplx completed_zeta(const FieldDescriptor& field, cplx s);

}  // namespace dtheta
