#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace recip {

// F_q = F_p[x]/(modulus). Elements are encoded as integers in [0, q) whose
// base-p digits are the coordinates in the power basis 1, x, ..., x^{d-1}.
// Multiplication goes through discrete-log tables, so q is kept desk-sized.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Prime field; the stored modulus is x - g for the least primitive root g.
  static FiniteField prime(long p);
  // Fixed primitive moduli for p <= 13, d <= 3 (Conway polynomials).
  static FiniteField conway(long p, int d);
  static bool has_conway(long p, int d);
  static std::vector<long> conway_modulus(long p, int d);

  // modulus: monic, low-to-high coefficients, degree d >= 1, irreducible mod p.
  FiniteField(long p, std::vector<long> modulus);

  long characteristic() const { return p_; }
  int degree() const { return d_; }
  long order() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const;
  // Class of the variable x of the modulus.
  Elem variable() const { return variable_; }
  // Fixed generator of F_q^x; logarithms are taken with respect to it.
  Elem generator() const { return generator_; }
  bool variable_is_primitive() const { return variable_ == generator_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  // F_p-scalar multiple.
  Elem scale(Elem a, long c) const;

  long log(Elem a) const;
  Elem exp(long k) const;
  // Unique p-th root (inverse Frobenius).
  Elem frobenius_root(Elem a) const;

  std::vector<long> digits(Elem a) const;
  Elem from_digits(std::span<const long> digits) const;

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  FiniteField() = default;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  long p_ = 0;
  int d_ = 0;
  long q_ = 0;
  std::vector<long> modulus_;
  Elem variable_ = 0;
  Elem generator_ = 0;
  std::vector<long> log_;
  std::vector<Elem> exp_;
};

}  // namespace recip
