#pragma once

#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "recip/finite_field.hpp"

namespace recip {

// A valuation that may be uncertifiable: nullopt means the element is
// indistinguishable from zero at working precision.
using Valuation = std::optional<long>;

class O0Elem;

// Truncated arithmetic in O_0 = Z_p[x]/(g) modulo p^N, where g is a monic
// integer lift of an irreducible gbar over F_p. Immutable once built.
class PadicCtx {
 public:
  // gbar: monic, low-to-high, degree d >= 1, irreducible mod p. N >= 1.
  PadicCtx(long p, int N, std::vector<long> gbar);
  // Uses the shipped Conway modulus for (p, d).
  static PadicCtx conway(long p, int d, int N);

  // Elements point back at their context, so contexts never move.
  PadicCtx(const PadicCtx&) = delete;
  PadicCtx& operator=(const PadicCtx&) = delete;

  long p() const { return p_; }
  int precision() const { return N_; }
  int degree() const { return residue_.degree(); }
  long q() const { return residue_.order(); }
  const mpz_class& modulus() const { return pN_; }
  const FiniteField& residue_field() const { return residue_; }
  // Integer lift g of gbar (coefficients 0..d, monic).
  const std::vector<mpz_class>& lift_modulus() const { return g_; }

  O0Elem zero() const;
  O0Elem one() const;
  O0Elem from_int(const mpz_class& n) const;
  O0Elem from_coeffs(std::vector<mpz_class> coeffs) const;
  // Digit lift of a residue (coefficients in [0, p)).
  O0Elem lift(FiniteField::Elem c) const;
  FiniteField::Elem residue(const O0Elem& x) const;
  // Teichmuller lift of the residue-field generator; omega()^{q-1} = 1.
  O0Elem omega() const;

  // Coefficient-level kernels shared with LocalField. Spans have length d.
  void reduce(std::span<mpz_class> a) const;
  void add_to(std::span<mpz_class> acc, std::span<const mpz_class> a) const;
  void mul_into(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out) const;
  void mul_add_into(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> acc) const;
  // min over coefficients of v_p, nullopt if all vanish mod p^N.
  Valuation val_p(std::span<const mpz_class> a) const;

 private:
  long p_;
  int N_;
  mpz_class pN_;
  FiniteField residue_;
  std::vector<mpz_class> g_;
  std::vector<mpz_class> omega_;
};

class O0Elem {
 public:
  O0Elem(const PadicCtx* ctx, std::vector<mpz_class> coeffs);

  const PadicCtx& ctx() const { return *ctx_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;

  O0Elem operator+(const O0Elem& o) const;
  O0Elem operator-(const O0Elem& o) const;
  O0Elem operator-() const;
  O0Elem operator*(const O0Elem& o) const;
  bool operator==(const O0Elem& o) const { return c_ == o.c_; }

 private:
  const PadicCtx* ctx_;
  std::vector<mpz_class> c_;
};

Valuation val_p(const O0Elem& x);

// x / p^s when every coefficient is divisible by p^s (top s digits become 0).
O0Elem divide_by_p_power(const O0Elem& x, long s);

O0Elem pow(const O0Elem& x, const mpz_class& e);

// Inverse of a unit: residue-field inverse refined by Newton's iteration.
// Throws NOT_A_UNIT for non-units (including precision-exhausted input).
O0Elem invert(const O0Elem& x);
// The same inverse via the geometric series sum (1 - y)^l after
// normalising by a residue inverse.
O0Elem invert_geometric(const O0Elem& x);

// Unique (q-1)-st root of unity congruent to c (lifted by x -> x^q).
O0Elem teichmuller(const PadicCtx& ctx, FiniteField::Elem c);

// Newton refinement of a simple-enough root; poly coefficients low to high.
O0Elem hensel_root(std::span<const O0Elem> poly, const O0Elem& approx);

// binom(alpha, l) computed exactly on the integer alpha, reduced mod p^N.
mpz_class zp_binomial(const PadicCtx& ctx, const mpz_class& alpha, long l);

}  // namespace recip
