#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "recip/integer.hpp"
#include "recip/padic.hpp"

namespace recip {

class LocalField;

// Element sum a_i pi^i (0 <= i < e, a_i in O_0) of O_F known modulo
// pi^prec. Digits beyond the precision are stored as zero, so two elements
// known to the same precision compare coefficientwise.
class FElem {
 public:
  FElem(const LocalField* F, std::vector<mpz_class> flat, long prec);

  const LocalField& field() const { return *F_; }
  long prec() const { return prec_; }
  // Flat coefficients: entry i*d + j is the j-th O_0 coordinate of a_i.
  const std::vector<mpz_class>& flat() const { return a_; }
  O0Elem coeff(int i) const;
  bool is_zero() const;

  FElem operator+(const FElem& o) const;
  FElem operator-(const FElem& o) const;
  FElem operator-() const;
  FElem operator*(const FElem& o) const;
  FElem& operator*=(const FElem& o) { return *this = *this * o; }
  // Equality modulo pi^min(prec, o.prec).
  bool operator==(const FElem& o) const;

  // Same element with a lowered precision.
  FElem truncated(long prec) const;
  // Treat the stored representative as an exact element.
  FElem exact() const;

 private:
  void normalize();

  const LocalField* F_;
  std::vector<mpz_class> a_;
  long prec_;
};

struct UnitDecomposition {
  long n;
  long i;
  FElem u;
};

struct NormValue {
  mpz_class value;  // modulo p^prec
  long prec;
};

// F = F_0(pi), pi a root of an Eisenstein polynomial f over O_0.
// Contexts are built in place and never move.
class LocalField {
 public:
  // f: e+1 coefficients low to high, each a vector of d integers (O_0
  // coordinates); the top one must be 1.
  LocalField(long p, int N, std::vector<long> gbar, const std::vector<std::vector<mpz_class>>& f,
             std::string name = "");
  LocalField(const LocalField&) = delete;
  LocalField& operator=(const LocalField&) = delete;

  const PadicCtx& base() const { return base_; }
  const FiniteField& residue_field() const { return base_.residue_field(); }
  const std::string& name() const { return name_; }
  long p() const { return base_.p(); }
  int N() const { return base_.precision(); }
  int d() const { return base_.degree(); }
  int e() const { return e_; }
  long q() const { return base_.q(); }
  long M() const { return M_; }
  mpq_class e1() const { return mpq_class(e_, p() - 1); }
  // t <= e/(p-1), compared exactly.
  bool at_most_e1(long t) const { return t * (p() - 1) <= e_; }
  // #mu(F) = p^k (q - 1).
  int k() const { return k_; }
  const std::vector<std::vector<mpz_class>>& eisenstein() const { return f_exact_; }

  FElem zero() const;
  FElem one() const;
  FElem from_int(const mpz_class& n) const;
  FElem from_o0(const O0Elem& a) const;
  FElem pi() const;
  FElem pi_power(long s) const;
  // Teichmuller lift of c in kappa^x, 0 for c = 0.
  O0Elem teichmuller_lift(FiniteField::Elem c) const;
  // Teichmuller lift of c times pi^s.
  FElem digit_element(FiniteField::Elem c, long s) const;
  // omega^i for the fixed Teichmuller generator omega.
  FElem omega_power(long i) const;
  FElem from_coeffs(const std::vector<std::vector<mpz_class>>& a) const;

  // p / pi^e, a unit; its residue is the graded p-power multiplier.
  const FElem& eps() const { return eps_; }
  FiniteField::Elem eps_residue() const { return eps_bar_; }
  const FElem& p_over_pi() const { return p_over_pi_; }
  // A primitive p-th root of unity when k >= 1.
  const std::optional<FElem>& zeta_p() const { return zeta_p_; }
  // A primitive p^k-th root of unity when k >= 1.
  const std::optional<FElem>& zeta_pk() const { return zeta_pk_; }
  // Levels searched by the root-of-unity computation, for reports.
  const std::vector<std::string>& mu_log() const { return mu_log_; }

  // Kernels used by FElem.
  void mul_flat(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, std::vector<mpz_class>& out) const;
  Valuation valuation_flat(const std::vector<mpz_class>& a) const;
  void truncate_flat(std::vector<mpz_class>& a, long prec) const;

 private:
  void compute_mu();

  PadicCtx base_;
  std::string name_;
  int e_;
  long M_;
  std::vector<std::vector<mpz_class>> f_exact_;
  std::vector<std::vector<mpz_class>> f_;  // lower coefficients mod p^N
  std::vector<FElem> pi_pow_;              // pi^0 .. pi^{2e}
  std::vector<O0Elem> teich_;              // omega^i, i < q - 1
  FElem p_over_pi_;
  FElem eps_;
  FiniteField::Elem eps_bar_ = 0;
  int k_ = 0;
  std::optional<FElem> zeta_p_;
  std::optional<FElem> zeta_pk_;
  std::vector<std::string> mu_log_;
};

// v(x) with v(pi) = 1; nullopt when x vanishes at its precision.
Valuation valuation(const FElem& x);
// v(x) if certified, else the precision (a lower bound).
long valuation_lower(const FElem& x);

// x / pi^s for v(x) >= s; the precision drops by s.
FElem shift_down(const FElem& x, long s);
// Residue of x / pi^l in kappa, assuming v(x) >= l.
FiniteField::Elem leading_digit(const FElem& x, long l);
// Residue of a unit.
FiniteField::Elem residue(const FElem& x);

UnitDecomposition unit_decompose(const FElem& x);
// v(u - 1); u must be a principal unit.
Valuation unit_level(const FElem& u);

FElem pow(const FElem& x, const mpz_class& n);
// Inverse of a unit by Newton iteration from the residue inverse.
FElem inverse(const FElem& x);
// Inverse of a unit by the geometric series.
FElem inverse_geometric(const FElem& x);
// a / b for v(a) >= v(b), b nonzero.
FElem divide_exact(const FElem& a, const FElem& b);

// (1 + z)^alpha for a principal unit u = 1 + z, alpha taken mod p^N. The
// precision accounts for the ambiguity of alpha modulo p^N.
FElem zp_exp(const FElem& u, const mpz_class& alpha);

struct HasseGenerator {
  long s;
  int a;
  long landing;  // v(g^p - 1), or the precision when it vanishes
  long bound;
};
struct HasseReport {
  long t;
  long bound;  // pt if t <= e1, else t + e
  bool t_at_most_e1;
  bool ok;
  long certified_precision;
  std::vector<HasseGenerator> generators;
};
// p-th powers of the spanning set {1 + omega^a pi^s : t <= s < t + C}.
HasseReport hasse_forward(const LocalField& F, long t, long C = 4);

// u in U^t with u^p = w, for t > e1 and w in U^{t+e}.
FElem pth_root_in_filtration(const FElem& w, long t);

FElem random_integral(const LocalField& F, Rng& rng);
FElem random_unit(const LocalField& F, Rng& rng);
// Random element of U^level.
FElem random_principal_unit(const LocalField& F, Rng& rng, long level);

// N_{F/Q_p}(x) as the determinant of multiplication by x over Z_p.
NormValue norm_to_base(const FElem& x);

std::string to_string(const FElem& x);

}  // namespace recip
