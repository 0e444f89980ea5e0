#pragma once

#include "dtheta/field.hpp"

namespace dtheta {

/// H_F = ∏_{χ non-principal} L(1, χ).
double residue_constant(const FieldDescriptor& field);

/// C_F = lim_{s→0} ζ_F(s)/s^r, from Laurent coefficients on |s| = 0.25.
/// Throws NumericError if the result is not negative.
double laurent_constant(const FieldDescriptor& field);

}  // namespace dtheta
