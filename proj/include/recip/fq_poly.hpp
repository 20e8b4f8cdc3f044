#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "recip/finite_field.hpp"

namespace recip {

// Dense polynomial over a FiniteField, coefficients low to high, no trailing
// zeros. The zero polynomial has no coefficients.
struct FqPoly {
  std::vector<FiniteField::Elem> c;

  FqPoly() = default;
  explicit FqPoly(std::vector<FiniteField::Elem> coeffs);
  static FqPoly constant(FiniteField::Elem a);
  static FqPoly monomial(FiniteField::Elem a, int deg);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  FiniteField::Elem lead() const { return c.empty() ? 0 : c.back(); }
  FiniteField::Elem coeff(int i) const { return i < static_cast<int>(c.size()) ? c[i] : 0; }
  void trim();

  bool operator==(const FqPoly&) const = default;
  auto operator<=>(const FqPoly& o) const {
    if (c.size() != o.c.size()) return c.size() <=> o.c.size();
    for (size_t i = c.size(); i-- > 0;)
      if (c[i] != o.c[i]) return c[i] <=> o.c[i];
    return std::strong_ordering::equal;
  }
};

namespace fq {

FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly neg(const FiniteField& F, const FqPoly& a);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FiniteField& F, const FqPoly& a, FiniteField::Elem s);
// a = q*b + r with deg r < deg b; b nonzero.
std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly quo(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const FiniteField& F, const FqPoly& a);
// Monic gcd (zero if both are zero).
FqPoly gcd(const FiniteField& F, const FqPoly& a, const FqPoly& b);
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  FqPoly g, s, t;
};
ExtGcd ext_gcd(const FiniteField& F, const FqPoly& a, const FqPoly& b);
// Inverse of a modulo m; gcd must be 1.
FqPoly inverse_mod(const FiniteField& F, const FqPoly& a, const FqPoly& m);
FqPoly powmod(const FiniteField& F, const FqPoly& a, const mpz_class& e, const FqPoly& m);
FqPoly derivative(const FiniteField& F, const FqPoly& a);
// k-th Hasse derivative: sum_n binom(n, k) a_n t^{n-k}.
FqPoly hasse_derivative(const FiniteField& F, const FqPoly& a, int k);
FiniteField::Elem eval(const FiniteField& F, const FqPoly& a, FiniteField::Elem x);
FqPoly variable(const FiniteField& F);

bool is_irreducible(const FiniteField& F, const FqPoly& f);

// Factorisation of a nonzero polynomial: leading coefficient and monic
// irreducible factors with multiplicities, factors sorted.
struct Factorization {
  FiniteField::Elem unit = 1;
  std::vector<std::pair<FqPoly, int>> factors;
};
Factorization factor(const FiniteField& F, const FqPoly& f);
// Independent reference: trial division by monic polynomials of
// increasing degree. Only for small degrees.
Factorization factor_trial_division(const FiniteField& F, const FqPoly& f);

// Multiplicity of the monic irreducible pi in a (a nonzero).
int multiplicity(const FiniteField& F, const FqPoly& a, const FqPoly& pi);

std::string to_string(const FiniteField& F, const FqPoly& a, const std::string& var = "t");

}  // namespace fq
}  // namespace recip
