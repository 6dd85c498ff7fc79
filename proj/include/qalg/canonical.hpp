#pragma once

#include "qalg/mpoly.hpp"

namespace qalg {

// Canonical scalings of a polynomial, used for printing and for comparing
// lists that are defined only up to nonzero scalar.
//
// primitive_part: coefficients cleared to polynomials in the parameter with
// integer rational parts, overall content 1, and the leading coefficient
// (under the given order) having a positive leading rational.
// monic (in mpoly.hpp): leading coefficient exactly 1.

MPoly<Rat> primitive_part(const MPoly<Rat>& p, const MonomialOrder& ord = MonomialOrder{});
MPoly<RatFunc> primitive_part(const MPoly<RatFunc>& p, const MonomialOrder& ord = MonomialOrder{});

// Specialization of coefficients at a rational parameter value.
MPoly<Rat> specialize_alpha(const MPoly<RatFunc>& p, const Rat& value);

// Promotion of rational-coefficient polynomials into Q(alpha).
MPoly<RatFunc> promote(const MPoly<Rat>& p);

} // namespace qalg
