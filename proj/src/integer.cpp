#include "recip/integer.hpp"

#include "recip/error.hpp"

namespace recip {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

mpz_class ipow(long base, unsigned long exp) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

mpz_class mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long val_p(const mpz_class& x, long p) {
  if (x == 0) fail(ErrorCode::ZeroInput, "val_p of zero");
  mpz_class y = x;
  const mpz_class pp = p;
  long v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

long powmod(long base, long exp, long m) {
  __int128 r = 1 % m;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<long>(r);
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod(a, m);
  // invariant: x1 * a == r (mod m), x * a == g (mod m)
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) fail(ErrorCode::NotAUnit, "inverse_mod: not invertible");
  return mod(x, m);
}

int legendre(const mpz_class& a, long p) {
  const long r = mod(a, mpz_class(p)).get_si();
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<std::pair<long, int>> factor(const mpz_class& n) {
  if (n == 0) fail(ErrorCode::ZeroInput, "factor of zero");
  mpz_class m = abs(n);
  std::vector<std::pair<long, int>> out;
  for (long d = 2; mpz_class(d) * d <= m; ++d) {
    int k = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (m > 1) {
    if (!m.fits_slong_p()) fail(ErrorCode::BadInput, "prime factor too large");
    out.emplace_back(m.get_si(), 1);
  }
  return out;
}

std::vector<long> primes_below(long bound) {
  std::vector<long> out;
  for (long n = 2; n < bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

mpz_class random_below(Rng& rng, const mpz_class& bound) {
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 64;
  mpz_class r = 0;
  for (size_t b = 0; b < bits; b += 64) {
    r <<= 64;
    const std::uint64_t w = rng();
    r += mpz_class(static_cast<unsigned long>(w));
  }
  return mod(r, bound);
}

long floor_rational(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

}  // namespace recip
