#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "recip/local_field.hpp"

namespace recip {

// R_m = O_0 + pi^m O_F inside O_F.
class OrderRm {
 public:
  OrderRm(const LocalField& F, long m);

  const LocalField& field() const { return *F_; }
  long m() const { return m_; }

  // e v_p(a_i) + i >= m for 1 <= i < e.
  bool contains(const FElem& x) const;
  // The maximal ideal p O_0 + pi^m O_F (m >= 1), or pi O_F for m = 0.
  bool in_maximal_ideal(const FElem& x) const;
  bool is_unit(const FElem& x) const;
  // Random element of R_m: an O_0 part plus pi^m times a random integer.
  FElem random_element(Rng& rng) const;

 private:
  const LocalField* F_;
  long m_;
};

struct OrderIndex {
  long s;          // index is q^s
  mpz_class value;
};

OrderIndex index_in_of(const LocalField& F, long m);
// [O_F : R_m] by enumerating R_m modulo p^K, K = ceil(m/e).
mpz_class index_brute_force(const LocalField& F, long m);

// Levels s with 1 + pi^s O_F inside (U^1)^{p^k}: s >= unit_cap(F).
long unit_cap(const LocalField& F);

// B = 0 (unramified), 1 (k = 0), floor(p e1 + (k-1) e) + 1 otherwise.
long m0_bound(const LocalField& F);

// Generators of (1 + tilde m_m) modulo U^{unit_cap}: 1 + omega^a pi^s for
// max(m,1) <= s < cap, and 1 + omega^a p^j for j e < m.
struct SpanGenerator {
  std::string label;
  FElem value;
};
std::vector<SpanGenerator> principal_span(const LocalField& F, long m);

// True when the symbol of (x, y) vanishes.
using SymbolOracle = std::function<bool(const FElem&, const FElem&)>;

struct M0Certificate {
  long m;
  std::string kind;  // "vanishing-sweep" or "witness"
  long pairs;
  std::string type;  // A, B or C, for witnesses
  std::string x, y;
};

struct OptimalOrderReport {
  long bound;
  std::optional<long> estimated_m0;
  bool monotone = true;
  long pairs_evaluated = 0;
  long certified_precision = 0;
  std::vector<M0Certificate> certificates;
};

// Sweep m = 0..B over the pair types (omega, omega), (omega, g), (g, g').
OptimalOrderReport estimate_m0(const LocalField& F, const SymbolOracle& oracle, long budget);

}  // namespace recip
