#include "recip/norm_residue.hpp"

#include "recip/error.hpp"

namespace recip {

FElem kummer_norm(const std::vector<FElem>& c, const FElem& y) {
  const LocalField& F = y.field();
  const int m = static_cast<int>(c.size());
  // A[r][j] = c_{r-j} for r >= j, y c_{r-j+m} for r < j.
  std::vector<std::vector<FElem>> A(m, std::vector<FElem>(m, F.zero()));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j) A[r][j] = r >= j ? c[r - j] : y * c[r - j + m];
  // Laplace expansion along rows, memoised on the set of used columns.
  std::vector<std::optional<FElem>> D(1u << m);
  D[0] = F.one();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (!D[mask]) continue;
    const int row = __builtin_popcount(mask);
    if (row == m) continue;
    for (int j = 0; j < m; ++j) {
      if (mask & (1u << j)) continue;
      const FElem& a = A[row][j];
      if (a.is_zero() && a.prec() == F.M()) continue;
      const int above = __builtin_popcount(mask >> (j + 1));
      FElem term = a * *D[mask];
      if (above % 2) term = -term;
      const unsigned nm = mask | (1u << j);
      D[nm] = D[nm] ? *D[nm] + term : term;
    }
  }
  return D[(1u << m) - 1] ? *D[(1u << m) - 1] : F.zero();
}

KummerNormGroup::KummerNormGroup(const LocalField& F, long m, const FElem& y, long budget, std::uint64_t seed)
    : classes_(std::make_shared<const PowerClasses>(F, m)), span_(m, classes_->rank()) {
  if (!valuation(y)) fail(ErrorCode::ZeroInput, "Kummer generator is zero at precision");
  if (classes_->is_power(y)) {
    trivial_ = true;
    return;
  }
  const int target = classes_->rank() - 1;
  auto try_add = [&](const FElem& n) {
    const Valuation v = valuation(n);
    if (!v || n.prec() - *v < classes_->needed_precision()) return;
    span_.add(classes_->coords(n));
  };
  // alpha and 1 - alpha.
  try_add(m % 2 ? y : -y);
  try_add(F.one() - y);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  // N(c - alpha) = c^m - y. Approximate m-th roots c of y digit by digit and
  // perturb them at every level: these produce norms of every valuation.
  const FiniteField& k = F.residue_field();
  const long depth = classes_->needed_precision() + F.e();
  FElem c = F.zero();
  long best = valuation_lower(pow(c, m) - y);
  std::vector<FElem> approx{c};
  for (long s = 0; s < depth && span_.rank() < target; ++s) {
    for (long a = 1; a < k.order(); ++a) {
      const FElem cand = c + F.digit_element(static_cast<FiniteField::Elem>(a), s);
      const FElem n = pow(cand, m) - y;
      try_add(n);
      const long v = valuation_lower(n);
      if (v > best) {
        best = v;
        approx.back() = cand;
      }
    }
    c = approx.back();
  }
  while (span_.rank() < target) {
    if (++samples_ > budget) fail(ErrorCode::UnsupportedSplitting, "norm span did not reach codimension one");
    std::vector<FElem> c;
    const bool line = samples_ % 2 == 0;
    for (long j = 0; j < m; ++j) {
      if (line && j >= 2) {
        c.push_back(F.zero());
        continue;
      }
      const long r = static_cast<long>(rng() % 3);
      c.push_back(F.pi_power(r) * random_unit(F, rng));
    }
    try_add(kummer_norm(c, y));
  }
}

bool KummerNormGroup::contains(const FElem& x) const {
  if (trivial_) return true;
  return span_.contains(classes_->coords(x));
}

bool norm_residue_trivial(const FElem& x, const FElem& y, long m, std::uint64_t seed) {
  if (!valuation(x) || !valuation(y)) fail(ErrorCode::ZeroInput, "symbol argument is zero at precision");
  return KummerNormGroup(x.field(), m, y, 4000, seed).contains(x);
}

}  // namespace recip
