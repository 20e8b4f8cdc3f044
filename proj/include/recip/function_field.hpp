#pragma once

#include <string>
#include <utility>
#include <vector>

#include "recip/fq_poly.hpp"
#include "recip/integer.hpp"

namespace recip {

// F_q for q in {2, 3, 4, 5, ...}: the prime field or the fixed Conway field.
FiniteField make_fq(long q);

// Reduced fraction num/den over F_q with den monic.
struct FqRational {
  FqPoly num, den;
  bool operator==(const FqRational&) const = default;
};

// A closed point of P^1: a monic irreducible pi, or infinity.
struct FFPlace {
  bool infinite = false;
  FqPoly pi;

  static FFPlace at_infinity() { return {true, {}}; }
  static FFPlace finite(FqPoly pi) { return {false, std::move(pi)}; }
  int degree() const { return infinite ? 1 : pi.degree(); }
  bool operator==(const FFPlace&) const = default;
  // Finite places by (degree, coefficients), infinity last.
  bool operator<(const FFPlace& o) const;
};

namespace ff {

FqRational make(const FiniteField& F, const FqPoly& num, const FqPoly& den);
FqRational from_poly(const FqPoly& p);
FqRational constant(FiniteField::Elem c);
FqRational mul(const FiniteField& F, const FqRational& a, const FqRational& b);
FqRational div(const FiniteField& F, const FqRational& a, const FqRational& b);
FqRational add(const FiniteField& F, const FqRational& a, const FqRational& b);
FqRational sub(const FiniteField& F, const FqRational& a, const FqRational& b);
FqRational scale(const FiniteField& F, const FqRational& a, FiniteField::Elem c);
FqRational derivative(const FiniteField& F, const FqRational& a);
bool is_zero(const FqRational& a);
bool is_constant(const FqRational& a);
std::string to_string(const FiniteField& F, const FqRational& a);
std::string to_string(const FiniteField& F, const FFPlace& v);

// Nonzero rational with numerator and denominator of degree <= max_deg.
FqRational random_rational(const FiniteField& F, Rng& rng, int max_deg);

}  // namespace ff

long ord(const FiniteField& F, const FqRational& f, const FFPlace& v);
// Places with nonzero order, sorted.
std::vector<std::pair<FFPlace, long>> divisor(const FiniteField& F, const FqRational& f);

// Residue field kappa(v) = F_q[t]/pi; elements are polynomials of degree
// below deg pi, and for infinity kappa = F_q.
FqPoly kappa_reduce(const FiniteField& F, const FFPlace& v, const FqPoly& a);
FqPoly kappa_mul(const FiniteField& F, const FFPlace& v, const FqPoly& a, const FqPoly& b);
FqPoly kappa_pow(const FiniteField& F, const FFPlace& v, const FqPoly& a, const mpz_class& e);
// N(x) as x^{(q^d-1)/(q-1)} and as the product of the Frobenius orbit.
FiniteField::Elem kappa_norm(const FiniteField& F, const FFPlace& v, const FqPoly& a);
FiniteField::Elem kappa_norm_frobenius(const FiniteField& F, const FFPlace& v, const FqPoly& a);
// Trace as the trace of the multiplication matrix and as sum of conjugates.
FiniteField::Elem kappa_trace(const FiniteField& F, const FFPlace& v, const FqPoly& a);
FiniteField::Elem kappa_trace_frobenius(const FiniteField& F, const FFPlace& v, const FqPoly& a);

// Residue in kappa(v) of a function that is a unit at v.
FqPoly residue_of_unit(const FiniteField& F, const FqRational& f, const FFPlace& v);

// (-1)^{ab} f^b / g^a mod v, a = ord_v f, b = ord_v g.
FqPoly ff_tame_symbol(const FiniteField& F, const FqRational& f, const FqRational& g, const FFPlace& v);

// Places in supp(f) u supp(g) u {inf}, sorted.
std::vector<FFPlace> symbol_support(const FiniteField& F, const FqRational& f, const FqRational& g);

struct WeilEntry {
  FFPlace place;
  FqPoly symbol;               // in kappa(v)
  FiniteField::Elem norm;      // in F_q
};
struct WeilReport {
  std::vector<WeilEntry> table;
  FiniteField::Elem product;
  bool ok;
};
WeilReport weil_reciprocity_check(const FiniteField& F, const FqRational& f, const FqRational& g);

struct FFHilbertEntry {
  FFPlace place;
  mpz_class m_v;       // q^d - 1
  mpz_class exponent;  // m_v / m with m = q - 1
  FiniteField::Elem value;
  FiniteField::Elem norm;  // Frobenius-orbit product
  bool agrees;
  bool prime_to_p;
};
struct FFHilbertReport {
  std::vector<FFHilbertEntry> table;
  FiniteField::Elem product;
  bool ok;
};
FFHilbertReport ff_hilbert_check(const FiniteField& F, const FqRational& f, const FqRational& g);

// res_v(h dt) in kappa(v).
FqPoly residue_at(const FiniteField& F, const FqRational& h, const FFPlace& v);

struct ResidueEntry {
  FFPlace place;
  FqPoly residue;
  FiniteField::Elem trace;
  FiniteField::Elem trace_frobenius;
};
struct ResidueReport {
  bool constant_differential = false;  // dg = 0: nothing to check
  std::vector<ResidueEntry> table;
  FiniteField::Elem sum = 0;
  bool ok = true;
};
// omega = f dg.
ResidueReport residue_theorem_check(const FiniteField& F, const FqRational& f, const FqRational& g);

}  // namespace recip
