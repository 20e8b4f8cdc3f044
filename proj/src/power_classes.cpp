#include "recip/power_classes.hpp"

#include "recip/error.hpp"

namespace recip {

int FpSpan::reduce(std::vector<long>& v) const {
  for (auto& x : v) x = mod(x, m_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int pc = pivots_[r];
    if (v[pc] == 0) continue;
    const long c = v[pc];
    for (int j = 0; j < dim_; ++j) v[j] = mod(v[j] - c * rows_[r][j], m_);
  }
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) return j;
  return -1;
}

bool FpSpan::add(std::vector<long> v) {
  if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::BadInput, "span vector has wrong length");
  const int pc = reduce(v);
  if (pc < 0) return false;
  const long inv = inverse_mod(v[pc], m_);
  for (auto& x : v) x = mod(x * inv, m_);
  // Keep the rows fully reduced so reduce() can use them in any order.
  for (auto& row : rows_) {
    const long c = row[pc];
    if (c == 0) continue;
    for (int j = 0; j < dim_; ++j) row[j] = mod(row[j] - c * v[j], m_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pc);
  return true;
}

bool FpSpan::contains(std::vector<long> v) const {
  if (static_cast<int>(v.size()) != dim_) fail(ErrorCode::BadInput, "span vector has wrong length");
  return reduce(v) < 0;
}

std::optional<std::vector<long>> solve_mod(const std::vector<std::vector<long>>& A, const std::vector<long>& b, long p) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<long>> M(rows, std::vector<long>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) M[i][j] = mod(A[i][j], p);
    M[i][cols] = mod(b[i], p);
  }
  std::vector<int> piv;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t s = r;
    while (s < rows && M[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(M[s], M[r]);
    const long inv = inverse_mod(M[r][c], p);
    for (auto& x : M[r]) x = mod(x * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const long f = M[i][c];
      for (size_t j = 0; j <= cols; ++j) M[i][j] = mod(M[i][j] - f * M[r][j], p);
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (M[i][cols] != 0) return std::nullopt;
  std::vector<long> x(cols, 0);
  for (size_t i = 0; i < r; ++i) x[piv[i]] = M[i][cols];
  return x;
}

namespace {

FiniteField::Elem basis_elem(const FiniteField& k, int a) {
  std::vector<long> dg(k.degree(), 0);
  dg[a] = 1;
  return k.from_digits(dg);
}

}  // namespace

PowerClasses::PowerClasses(const LocalField& F, long m) : F_(&F), m_(m), rank_(0) {
  if (!is_prime(m)) fail(ErrorCode::BadInput, "power classes need a prime exponent");
  if (m != F.p()) {
    if ((F.q() - 1) % m != 0) fail(ErrorCode::UnsupportedField, "mu_m is not contained in F");
    rank_ = 2;
    return;
  }
  if (F.k() < 1) fail(ErrorCode::UnsupportedField, "mu_p is not contained in F");
  const long p = F.p();
  const int d = F.d();
  const FiniteField& k = F.residue_field();
  top_ = p * F.e() / (p - 1);
  if (top_ + 2 > F.M()) fail(ErrorCode::PrecisionExhausted, "precision too small for p-th power classes");
  free_inv_.resize(top_);
  int free_levels = 0;
  for (long l = 1; l < top_; ++l) {
    if (l % p == 0) continue;
    ++free_levels;
    for (int a = 0; a < d; ++a) free_inv_[l].push_back(inverse(F.one() + F.digit_element(basis_elem(k, a), l)));
  }
  // phi(eta) = eta^p + eps eta is F_p-linear; pick standard vectors
  // completing its image.
  std::vector<std::vector<long>> cols;
  for (int a = 0; a < d; ++a) {
    const FiniteField::Elem b = basis_elem(k, a);
    cols.push_back(k.digits(k.add(k.pow(b, p), k.mul(F.eps_residue(), b))));
  }
  FpSpan img(p, d);
  for (const auto& c : cols) img.add(c);
  for (int a = 0; a < d && img.rank() < d; ++a) {
    std::vector<long> v(d, 0);
    v[a] = 1;
    if (img.add(v)) complement_.push_back(v);
  }
  phi_rows_.assign(d, std::vector<long>(d + complement_.size(), 0));
  for (int i = 0; i < d; ++i) {
    for (int a = 0; a < d; ++a) phi_rows_[i][a] = cols[a][i];
    for (size_t c = 0; c < complement_.size(); ++c) phi_rows_[i][d + c] = complement_[c][i];
  }
  rank_ = 1 + free_levels * d + static_cast<int>(complement_.size());
}

std::vector<long> PowerClasses::unit_coords(FElem u) const {
  const LocalField& F = *F_;
  const long p = F.p();
  const int d = F.d();
  const FiniteField& k = F.residue_field();
  if (u.prec() <= top_) fail(ErrorCode::PrecisionExhausted, "unit known below the p-th power level");
  std::vector<long> out;
  for (long l = 1; l <= top_; ++l) {
    const FElem z = u - F.one();
    const Valuation v = valuation(z);
    if (v && *v < l) fail(ErrorCode::NotPrincipalUnit, "reduction left the filtration");
    const FiniteField::Elem theta = (!v || *v > l) ? 0 : leading_digit(z, l);
    if (l < top_ && l % p != 0) {
      const auto dg = k.digits(theta);
      for (int a = 0; a < d; ++a) {
        out.push_back(dg[a]);
        if (dg[a]) u = u * pow(free_inv_[l][a], dg[a]);
      }
    } else if (l < top_) {
      if (theta == 0) continue;
      const FiniteField::Elem eta = k.frobenius_root(theta);
      u = u * inverse(pow(F.one() + F.digit_element(eta, l / p), p));
    } else {
      const auto sol = solve_mod(phi_rows_, k.digits(theta), p);
      if (!sol) fail(ErrorCode::BadInput, "top-level digit outside image plus complement");
      for (size_t c = 0; c < complement_.size(); ++c) out.push_back((*sol)[d + c]);
    }
  }
  return out;
}

std::vector<long> PowerClasses::coords(const FElem& x) const {
  const UnitDecomposition ud = unit_decompose(x);
  std::vector<long> out{mod(ud.n, m_)};
  if (m_ != F_->p()) {
    out.push_back(mod(ud.i, m_));
    return out;
  }
  const auto uc = unit_coords(ud.u);
  out.insert(out.end(), uc.begin(), uc.end());
  return out;
}

bool PowerClasses::is_power(const FElem& x) const {
  for (long c : coords(x))
    if (c != 0) return false;
  return true;
}

}  // namespace recip
