#pragma once

#include <optional>
#include <vector>

#include "recip/local_field.hpp"

namespace recip {

// Row-echelon span of vectors over F_m, m prime.
class FpSpan {
 public:
  FpSpan(long m, int dim) : m_(m), dim_(dim) {}
  // Adds v; returns true when the rank grew.
  bool add(std::vector<long> v);
  bool contains(std::vector<long> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  // Reduces v against the rows; returns the pivot of the remainder or -1.
  int reduce(std::vector<long>& v) const;

  long m_;
  int dim_;
  std::vector<std::vector<long>> rows_;
  std::vector<int> pivots_;
};

// Some solution of A v = b over F_p (A given by rows), if any.
std::optional<std::vector<long>> solve_mod(const std::vector<std::vector<long>>& A, const std::vector<long>& b, long p);

// Coordinates of F^x / (F^x)^m over F_m for a prime m with mu_m in F.
// For m != p: (v(x), Teichmuller index) mod m. For m = p: v(x) mod p and
// a filtration-adapted basis of U^1 / (U^1)^p: e d free digits at the
// levels l < p e1 prime to p, and the cokernel of eta -> eta^p + eps eta at
// level p e1.
class PowerClasses {
 public:
  PowerClasses(const LocalField& F, long m);

  const LocalField& field() const { return *F_; }
  long m() const { return m_; }
  int rank() const { return rank_; }
  // pi-precision the unit part must have after removing pi^{v(x)}.
  long needed_precision() const { return top_ + 1; }

  std::vector<long> coords(const FElem& x) const;
  bool is_power(const FElem& x) const;

 private:
  std::vector<long> unit_coords(FElem u) const;

  const LocalField* F_;
  long m_;
  int rank_;
  long top_ = 0;
  std::vector<std::vector<FElem>> free_inv_;  // inverses of 1 + [x^a] pi^l
  std::vector<std::vector<long>> phi_rows_;   // [phi | K] at the top level
  std::vector<std::vector<long>> complement_;
};

}  // namespace recip
