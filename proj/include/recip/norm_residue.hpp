#pragma once

#include <memory>
#include <vector>

#include "recip/local_field.hpp"
#include "recip/power_classes.hpp"

namespace recip {

// N_{L/F}(sum c_j alpha^j) for L = F[alpha]/(alpha^m - y), computed as the
// determinant of the multiplication matrix over O_F.
FElem kummer_norm(const std::vector<FElem>& c, const FElem& y);

// Image of N(L^x) in F^x / (F^x)^m for L = F(y^{1/m}). The image is a
// hyperplane when y is not an m-th power (local class field theory gives
// index [L:F] = m), so norms are sampled until the span reaches codimension 1.
class KummerNormGroup {
 public:
  KummerNormGroup(const LocalField& F, long m, const FElem& y, long budget = 4000, std::uint64_t seed = 0);

  bool y_is_power() const { return trivial_; }
  long samples() const { return samples_; }
  const PowerClasses& classes() const { return *classes_; }
  // True when x is a norm from L.
  bool contains(const FElem& x) const;

 private:
  std::shared_ptr<const PowerClasses> classes_;
  bool trivial_ = false;
  long samples_ = 0;
  FpSpan span_;
};

// h(x, y) = 1 for the m-th power Hilbert symbol, m = 2 or m = p, decided by
// the norm group of F(y^{1/m}).
bool norm_residue_trivial(const FElem& x, const FElem& y, long m, std::uint64_t seed = 0);

}  // namespace recip
