#pragma once

#include <string>

#include <gmpxx.h>

#include "recip/local_field.hpp"

namespace recip {

// A place of Q, or of a number field when kind is Complex.
struct Place {
  enum class Kind { Finite, Real, Complex };
  Kind kind = Kind::Real;
  long prime = 0;

  static Place finite(long p);
  static Place real() { return {}; }
  static Place complex() { return {Kind::Complex, 0}; }
  bool operator==(const Place&) const = default;
};

std::string to_string(const Place& v);
// "inf", "real", "complex" or a prime.
Place parse_place(const std::string& s);

// Quadratic Hilbert symbol (a, b)_v over Q by the classical closed forms.
int hilbert_quadratic_q(const mpq_class& a, const mpq_class& b, const Place& v);

// v_p and the p-unit part of a nonzero rational.
std::pair<long, mpq_class> split_rational(const mpq_class& a, long p);

// The image of a p-integral rational in F.
FElem rational_to_local(const LocalField& F, const mpq_class& a);

}  // namespace recip
