#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recip/local_field.hpp"
#include "recip/norm_residue.hpp"
#include "recip/orders.hpp"

namespace recip {

// A root of unity of F: omega^tame * zeta_{p^k}^wild. The wild part is
// absent when k = 0.
struct MuElem {
  long tame = 0;  // mod q - 1
  long wild = 0;  // mod p^k
  bool operator==(const MuElem&) const = default;
};

// (-1)^{v(x)v(y)} x^{v(y)} y^{-v(x)} mod pi, as a residue-field element.
FiniteField::Elem tame_symbol(const FElem& x, const FElem& y);
// Discrete log of the tame symbol with respect to the residue generator.
long tame_log(const FElem& x, const FElem& y);
// The tame symbol viewed as the image of h under the p^k-th power map.
FiniteField::Elem hilbert_tame_part(const FElem& x, const FElem& y);

// Exponent j with h_p(x, zeta_p) = zeta_p^j over F = Q_p(zeta_p): the norm
// to Q_p has unit part u = 1 mod p, and a unit acts on zeta_{p^2} by u^{-1}.
long wild_symbol_zeta(const FElem& x);
bool supports_wild_values(const LocalField& F);

// Exponent of the degree-p symbol h_p(x, y) in zeta_p, over Q_p(zeta_p).
// The direct form searches c with x zeta^{-c} in the norm group of
// F(y^{1/p}); the default form reads a Gram matrix on power-class
// generators built once per field from the direct form.
long hilbert_p_exponent_direct(const FElem& x, const FElem& y);
long hilbert_p_exponent(const FElem& x, const FElem& y);

// The full symbol in mu(F), available when k = 0 or F = Q_p(zeta_p).
bool supports_full_symbol(const LocalField& F);
MuElem hilbert_symbol(const FElem& x, const FElem& y);

// Every evaluator that is implemented on F, each returning an exponent in
// Z/n so that values add under bimultiplicativity.
struct Evaluator {
  std::string name;
  long modulus;
  std::function<long(const FElem&, const FElem&)> eval;
};
std::vector<Evaluator> available_evaluators(const LocalField& F);

struct SteinbergResult {
  bool tame_trivial;
  std::vector<std::pair<std::string, bool>> others;
  bool ok;
};
SteinbergResult steinberg_check(const FElem& x);

// [(pi, (-1)^{ab} v^a u^{-b}), (u, v)] for x = pi^a u, y = pi^b v.
std::vector<std::pair<FElem, FElem>> k1_decompose(const FElem& x, const FElem& y);

// For u = 1 - z in U^2: g = 1 + z/pi - z, returns (g^{-1}, 1 - pi g).
std::pair<FElem, FElem> k2_transform(const FElem& u);

// Oracle for estimate_m0: tame symbol trivial and, for k = 1, the degree-p
// symbol trivial according to the norm group of F(y^{1/p}).
SymbolOracle default_m0_oracle(const LocalField& F, std::uint64_t seed = 0);

}  // namespace recip
