#include "dtheta/constants.hpp"

#include <cmath>

#include "dtheta/error.hpp"
#include "dtheta/laurent.hpp"
#include "dtheta/zeta.hpp"

namespace dtheta {

double residue_constant(const FieldDescriptor& field) {
  field.require_abelian("residue_constant");
  cplx prod = 1.0;
  for (const auto& chi : field.characters())
    if (!chi.is_principal()) prod *= dirichlet_l(cplx(1.0), chi);
  if (std::abs(prod.imag()) > 1e-9 * std::abs(prod))
    throw NumericError("residue_constant: product of L(1, chi) is not real");
  if (!(prod.real() > 0.0)) throw NumericError("residue_constant: non-positive residue");
  return prod.real();
}

double laurent_constant(const FieldDescriptor& field) {
  field.require_abelian("laurent_constant");
  const int r = field.unit_rank();
  const LaurentResult lr =
      laurent_coefficients([&](cplx s) { return dedekind_zeta(s, field); }, cplx(0.0), 0.25, r, r);
  const cplx c = lr[r];
  if (std::abs(c.imag()) > 1e-9 * std::abs(c)) throw NumericError("laurent_constant: value is not real");
  if (!(c.real() < 0.0)) throw NumericError("laurent_constant: C_F must be negative");
  return c.real();
}

}  // namespace dtheta
