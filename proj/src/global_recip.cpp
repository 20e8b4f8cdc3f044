#include "recip/global_recip.hpp"

#include <algorithm>
#include <set>

#include "recip/error.hpp"
#include "recip/integer.hpp"
#include "recip/orders.hpp"
#include "recip/presets.hpp"

namespace recip {

long mu_counts_q(const Place& v) {
  switch (v.kind) {
    case Place::Kind::Complex:
      fail(ErrorCode::ComplexPlace, "complex places carry no symbol");
    case Place::Kind::Real:
      return 2;
    case Place::Kind::Finite:
      return v.prime == 2 ? 2 : v.prime - 1;
  }
  return 0;
}

std::vector<Place> moore_support(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) fail(ErrorCode::ZeroInput, "Moore product of zero");
  std::set<long> primes{2};
  for (const mpz_class& n : {mpz_class(a.get_num()), mpz_class(a.get_den()), mpz_class(b.get_num()), mpz_class(b.get_den())})
    for (const auto& [p, k] : factor(n)) primes.insert(p);
  std::vector<Place> out{Place::real()};
  for (long p : primes) out.push_back(Place::finite(p));
  return out;
}

int moore_local_factor(const mpq_class& a, const mpq_class& b, const Place& v) {
  if (a == 0 || b == 0) fail(ErrorCode::ZeroInput, "Moore product of zero");
  if (v.kind != Place::Kind::Finite || v.prime == 2) return hilbert_quadratic_q(a, b, v);
  const long p = v.prime;
  const auto [al, u] = split_rational(a, p);
  const auto [be, w] = split_rational(b, p);
  // (-1)^{al be} a^be b^-al reduced mod p.
  auto res = [p](const mpq_class& x) {
    return mod(mod(mpz_class(x.get_num()), mpz_class(p)).get_si() *
                   inverse_mod(mod(mpz_class(x.get_den()), mpz_class(p)).get_si(), p),
               p);
  };
  long t = mod(powmod(res(u), mod(be, p - 1), p) * powmod(inverse_mod(res(w), p), mod(al, p - 1), p), p);
  if (mod(al * be, 2L)) t = mod(-t, p);
  const long h = powmod(t, (p - 1) / 2, p);
  return h == 1 ? 1 : -1;
}

MooreReport moore_product_q(const mpq_class& a, const mpq_class& b) {
  MooreReport r{{}, 1, true};
  for (const Place& v : moore_support(a, b)) {
    const long mv = mu_counts_q(v);
    MooreEntry e{v, mv, mv / 2, moore_local_factor(a, b, v), hilbert_quadratic_q(a, b, v), true};
    e.consistent = e.value == e.closed_form;
    r.consistent = r.consistent && e.consistent;
    r.product *= e.value;
    r.table.push_back(e);
  }
  return r;
}

ReciprocityView quadratic_reciprocity_view(long p, long q) {
  if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
    fail(ErrorCode::BadInput, "need two distinct odd primes");
  const MooreReport m = moore_product_q(p, q);
  ReciprocityView r{p, q, legendre(p, q), legendre(q, p), 1, 1, 1, 1, 1, false};
  for (const auto& e : m.table) {
    if (e.place.kind == Place::Kind::Real) r.factor_at_inf = e.value;
    else if (e.place.prime == 2) r.factor_at_2 = e.value;
    else if (e.place.prime == p) r.factor_at_p = e.value;
    else if (e.place.prime == q) r.factor_at_q = e.value;
  }
  r.predicted = ((p - 1) / 2) % 2 && ((q - 1) / 2) % 2 ? -1 : 1;
  // (p,q)_p = (q|p), (p,q)_q = (p|q), (p,q)_2 = the sign.
  r.holds = m.product == 1 && r.factor_at_p == r.legendre_qp && r.factor_at_q == r.legendre_pq &&
            r.factor_at_2 == r.predicted && r.factor_at_inf == 1 && r.legendre_pq * r.legendre_qp == r.predicted;
  return r;
}

namespace {

void check_cyclotomic(long p) {
  if (p == 2 || p > 7 || !is_prime(p)) fail(ErrorCode::UnsupportedField, "lattices are provided for Q(zeta_p), p in {3, 5, 7}");
}

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::vector<mpz_class> cyclotomic_mul(long p, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const long n = p - 1;
  std::vector<mpz_class> full(2 * n, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) full[i + j] += a[i] * b[j];
  // zeta^n = -(1 + zeta + ... + zeta^{n-1})
  for (long k = 2 * n - 1; k >= n; --k) {
    if (full[k] == 0) continue;
    const mpz_class c = full[k];
    full[k] = 0;
    for (long i = 0; i < n; ++i) full[k - n + i] -= c;
  }
  full.resize(n);
  return full;
}

GlobalOrderLattice global_optimal_lattice(long p, long m) {
  check_cyclotomic(p);
  if (m < 0) fail(ErrorCode::BadInput, "order level must be nonnegative");
  const long n = p - 1, e = p - 1;
  // Column i is p^{s_i} (zeta - 1)^i with s_i = max(0, ceil((m - i)/e)).
  IntMatrix A(n, std::vector<mpz_class>(n, 0));
  for (long i = 0; i < n; ++i) {
    const long si = i == 0 ? 0 : std::max(0L, ceil_div(m - i, e));
    const mpz_class scale = ipow(p, static_cast<unsigned long>(si));
    for (long j = 0; j <= i; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), i, j);
      A[j][i] = ((i - j) % 2 ? -b : b) * scale;
    }
  }
  GlobalOrderLattice L{p, m, column_hnf(A), 0, 0};
  L.index = determinant_triangular(L.basis);
  L.s = val_p(L.index, p);
  return L;
}

bool lattice_contains(const GlobalOrderLattice& L, const std::vector<mpz_class>& x) {
  return lattice_coords(L.basis, x).has_value();
}

bool lattice_contains_one(const GlobalOrderLattice& L) {
  std::vector<mpz_class> one(L.p - 1, 0);
  one[0] = 1;
  return lattice_contains(L, one);
}

bool lattice_closed(const GlobalOrderLattice& L) {
  const long n = L.p - 1;
  auto col = [&](long j) {
    std::vector<mpz_class> c(n);
    for (long i = 0; i < n; ++i) c[i] = L.basis[i][j];
    return c;
  };
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j)
      if (!lattice_contains(L, cyclotomic_mul(L.p, col(i), col(j)))) return false;
  return true;
}

mpz_class lattice_index_brute_force(long p, long m) {
  check_cyclotomic(p);
  if (m == 0) return 1;
  const long n = p - 1;
  const long K = ceil_div(m, n);
  const FieldPtr F = make_qp_zeta(p, static_cast<int>(std::max(8L, K + 2)));
  const OrderRm R(*F, m);
  const long pK = ipow(p, static_cast<unsigned long>(K)).get_si();
  const FElem z = F->one() + F->pi();
  std::vector<FElem> zpow{F->one()};
  for (long i = 1; i < n; ++i) zpow.push_back(zpow.back() * z);
  // R contains p^K O_F, so membership is a property of the coset.
  std::vector<long> x(n, 0);
  mpz_class count = 0, total = 0;
  for (;;) {
    FElem v = F->zero();
    for (long i = 0; i < n; ++i)
      if (x[i]) v = v + F->from_int(x[i]) * zpow[i];
    ++total;
    if (R.contains(v)) ++count;
    long j = 0;
    while (j < n && ++x[j] == pK) x[j++] = 0;
    if (j == n) break;
  }
  return total / count;
}

}  // namespace recip
