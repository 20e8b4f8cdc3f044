#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "recip/hnf.hpp"
#include "recip/rational_symbols.hpp"

namespace recip {

// #mu(Q_v) for a noncomplex place.
long mu_counts_q(const Place& v);

struct MooreEntry {
  Place place;
  long m_v;
  long exponent;    // m_v / m with m = 2
  int value;        // h_v(a, b)^{m_v/m}
  int closed_form;  // quadratic closed form at v
  bool consistent;
};

struct MooreReport {
  std::vector<MooreEntry> table;  // inf first, then primes ascending
  int product;
  bool consistent;
};

// Places where (a, b) can be nontrivial: inf, 2 and the primes of a b.
std::vector<Place> moore_support(const mpq_class& a, const mpq_class& b);
// h_v(a,b)^{m_v/m} at a finite or real place. At odd p the full symbol is
// the Teichmuller lift of the tame symbol, so its (p-1)/2 power is a
// power of the tame residue.
int moore_local_factor(const mpq_class& a, const mpq_class& b, const Place& v);
MooreReport moore_product_q(const mpq_class& a, const mpq_class& b);

struct ReciprocityView {
  long p, q;
  int legendre_pq, legendre_qp;  // (p|q), (q|p) by Euler's criterion
  int factor_at_p, factor_at_q, factor_at_2, factor_at_inf;
  int predicted;  // (-1)^{(p-1)(q-1)/4}
  bool holds;
};
ReciprocityView quadratic_reciprocity_view(long p, long q);

// R = {x in Z[zeta_p] : x in R_m at the place above p}, in the power basis
// 1, zeta, ..., zeta^{p-2}.
struct GlobalOrderLattice {
  long p;
  long m;
  IntMatrix basis;   // column HNF
  mpz_class index;   // det basis
  long s;            // index = p^s
};
GlobalOrderLattice global_optimal_lattice(long p, long m);

bool lattice_contains(const GlobalOrderLattice& L, const std::vector<mpz_class>& x);
bool lattice_contains_one(const GlobalOrderLattice& L);
// Products of basis columns stay in the lattice.
bool lattice_closed(const GlobalOrderLattice& L);
// Product in Z[zeta_p] in the power basis.
std::vector<mpz_class> cyclotomic_mul(long p, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);
// [Z[zeta_p] : R] by counting cosets of p^K Z[zeta_p] that meet R_m.
mpz_class lattice_index_brute_force(long p, long m);

}  // namespace recip
