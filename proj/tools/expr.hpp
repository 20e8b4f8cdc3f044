#pragma once

#include <string>

#include <gmpxx.h>

#include "recip/function_field.hpp"
#include "recip/local_field.hpp"

namespace recip::cli {

// Integral elements of F built from integers, pi, w (Teichmuller lift of the
// residue generator), z (zeta_p when F contains it), + - * ^ and brackets.
// Negative powers are allowed for units.
FElem parse_local(const LocalField& F, const std::string& text);

// Rational functions over F_q in t, with a for the generator of F_q over F_p.
FqRational parse_fq_rational(const FiniteField& F, const std::string& text);

// Nonzero-denominator rationals: integers, / and unary minus, e.g. "-3/4".
mpq_class parse_rational(const std::string& text);

}  // namespace recip::cli
