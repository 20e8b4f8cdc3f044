#include "recip/fq_poly.hpp"

#include <algorithm>
#include <sstream>

#include "recip/error.hpp"
#include "recip/integer.hpp"

namespace recip {

FqPoly::FqPoly(std::vector<FiniteField::Elem> coeffs) : c(std::move(coeffs)) { trim(); }

FqPoly FqPoly::constant(FiniteField::Elem a) { return FqPoly({a}); }

FqPoly FqPoly::monomial(FiniteField::Elem a, int deg) {
  std::vector<FiniteField::Elem> v(deg + 1, 0);
  v[deg] = a;
  return FqPoly(std::move(v));
}

void FqPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

namespace fq {

using Elem = FiniteField::Elem;

FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return FqPoly(std::move(r));
}

FqPoly neg(const FiniteField& F, const FqPoly& a) {
  FqPoly r = a;
  for (auto& x : r.c) x = F.neg(x);
  return r;
}

FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return add(F, a, neg(F, b)); }

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
  }
  return FqPoly(std::move(r));
}

FqPoly scale(const FiniteField& F, const FqPoly& a, Elem s) {
  FqPoly r = a;
  for (auto& x : r.c) x = F.mul(x, s);
  r.trim();
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "polynomial division by zero");
  FqPoly r = a;
  if (a.degree() < b.degree()) return {FqPoly{}, r};
  std::vector<Elem> q(a.degree() - b.degree() + 1, 0);
  const Elem inv_lead = F.inv(b.lead());
  for (int k = r.degree(); k >= b.degree(); --k) {
    const Elem c = F.mul(r.c[k], inv_lead);
    if (c == 0) continue;
    q[k - b.degree()] = c;
    for (int i = 0; i <= b.degree(); ++i)
      r.c[k - b.degree() + i] = F.sub(r.c[k - b.degree() + i], F.mul(c, b.c[i]));
  }
  r.trim();
  return {FqPoly(std::move(q)), r};
}

FqPoly rem(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return divmod(F, a, b).second; }
FqPoly quo(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return divmod(F, a, b).first; }

FqPoly monic(const FiniteField& F, const FqPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

FqPoly gcd(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

ExtGcd ext_gcd(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r0 = a, r1 = b, s0 = FqPoly::constant(1), s1, t0, t1 = FqPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = sub(F, s0, mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = sub(F, t0, mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = F.inv(r0.lead());
  return {scale(F, r0, li), scale(F, s0, li), scale(F, t0, li)};
}

FqPoly inverse_mod(const FiniteField& F, const FqPoly& a, const FqPoly& m) {
  ExtGcd eg = ext_gcd(F, rem(F, a, m), m);
  if (eg.g.degree() != 0) fail(ErrorCode::NotAUnit, "polynomial not invertible modulo m");
  return rem(F, eg.s, m);
}

FqPoly powmod(const FiniteField& F, const FqPoly& a, const mpz_class& e, const FqPoly& m) {
  if (e < 0) return powmod(F, inverse_mod(F, a, m), -e, m);
  FqPoly result = rem(F, FqPoly::constant(1), m);
  FqPoly base = rem(F, a, m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = rem(F, mul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(F, mul(F, result, base), m);
  }
  return result;
}

FqPoly derivative(const FiniteField& F, const FqPoly& a) { return hasse_derivative(F, a, 1); }

namespace {

// binom(n, k) mod p via Lucas.
long binom_mod_p(long n, long k, long p) {
  long r = 1;
  while (n > 0 || k > 0) {
    const long ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    long num = 1, den = 1;
    for (long i = 0; i < ki; ++i) {
      num = num * (ni - i) % p;
      den = den * (i + 1) % p;
    }
    r = r * num % p * recip::inverse_mod(den, p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace

FqPoly hasse_derivative(const FiniteField& F, const FqPoly& a, int k) {
  if (a.degree() < k) return {};
  std::vector<Elem> r(a.degree() - k + 1, 0);
  for (int n = k; n <= a.degree(); ++n) r[n - k] = F.scale(a.c[n], binom_mod_p(n, k, F.characteristic()));
  return FqPoly(std::move(r));
}

Elem eval(const FiniteField& F, const FqPoly& a, Elem x) {
  Elem r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

FqPoly variable(const FiniteField&) { return FqPoly({0, 1}); }

bool is_irreducible(const FiniteField& F, const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FqPoly x = variable(F);
  const mpz_class q = F.order();
  FqPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(F, h, q, f);
    if (gcd(F, sub(F, h, x), f).degree() != 0) return false;
  }
  return true;
}

int multiplicity(const FiniteField& F, const FqPoly& a, const FqPoly& pi) {
  if (a.is_zero()) fail(ErrorCode::ZeroInput, "multiplicity in zero polynomial");
  int k = 0;
  FqPoly x = a;
  while (true) {
    auto [q, r] = divmod(F, x, pi);
    if (!r.is_zero()) return k;
    x = std::move(q);
    ++k;
  }
}

namespace {

void sort_merge(std::vector<std::pair<FqPoly, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<FqPoly, int>> out;
  for (auto& [p, k] : fs) {
    if (!out.empty() && out.back().first == p)
      out.back().second += k;
    else
      out.emplace_back(p, k);
  }
  fs = std::move(out);
}

// p-th root of a polynomial whose derivative vanishes.
FqPoly pth_root(const FiniteField& F, const FqPoly& a) {
  const long p = F.characteristic();
  std::vector<Elem> r(a.degree() / p + 1, 0);
  for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) r[i / p] = F.frobenius_root(a.c[i]);
  return FqPoly(std::move(r));
}

// Yun-style squarefree decomposition of a monic polynomial.
void squarefree(const FiniteField& F, const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  if (f.degree() < 1) return;
  FqPoly c = gcd(F, f, derivative(F, f));
  FqPoly w = quo(F, f, c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(F, w, c);
    FqPoly z = quo(F, w, y);
    if (z.degree() > 0) out.emplace_back(monic(F, z), i * mult);
    ++i;
    w = std::move(y);
    c = quo(F, c, w);
  }
  if (c.degree() > 0) squarefree(F, monic(F, pth_root(F, c)), mult * static_cast<int>(F.characteristic()), out);
}

// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles of degree d.
void equal_degree(const FiniteField& F, const FqPoly& f, int d, Rng& rng, std::vector<FqPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const int n = f.degree();
  mpz_class qd = 1;
  for (int i = 0; i < d; ++i) qd *= F.order();
  std::uniform_int_distribution<long> coeff(0, F.order() - 1);
  while (true) {
    std::vector<Elem> a(n);
    for (auto& x : a) x = static_cast<Elem>(coeff(rng));
    FqPoly r(std::move(a));
    if (r.degree() < 1) continue;
    FqPoly b;
    if (F.characteristic() == 2) {
      // absolute trace map to F_2
      const int steps = d * F.degree();
      FqPoly t = r;
      b = r;
      for (int i = 1; i < steps; ++i) {
        t = rem(F, mul(F, t, t), f);
        b = add(F, b, t);
      }
    } else {
      b = sub(F, powmod(F, r, (qd - 1) / 2, f), FqPoly::constant(1));
    }
    FqPoly g = gcd(F, b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, quo(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const FiniteField& F, const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factor of zero polynomial");
  Factorization res;
  res.unit = f.lead();
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree(F, monic(F, f), 1, sqf);
  Rng rng(0x5eedULL + static_cast<unsigned long>(f.degree()));
  const mpz_class q = F.order();
  for (auto& [g, k] : sqf) {
    // distinct-degree split
    FqPoly rest = g;
    FqPoly h = variable(F);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
      h = powmod(F, h, q, rest);
      FqPoly part = gcd(F, sub(F, h, variable(F)), rest);
      if (part.degree() > 0) {
        std::vector<FqPoly> irr;
        equal_degree(F, part, d, rng, irr);
        for (auto& p : irr) res.factors.emplace_back(monic(F, p), k);
        rest = quo(F, rest, part);
        h = rem(F, h, rest);
      }
    }
    if (rest.degree() > 0) res.factors.emplace_back(monic(F, rest), k);
  }
  sort_merge(res.factors);
  return res;
}

Factorization factor_trial_division(const FiniteField& F, const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factor of zero polynomial");
  Factorization res;
  res.unit = f.lead();
  FqPoly rest = monic(F, f);
  const long q = F.order();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      std::vector<Elem> c(d + 1);
      long t = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      c[d] = 1;
      FqPoly cand(std::move(c));
      int k = 0;
      while (rest.degree() >= d) {
        auto [qq, r] = divmod(F, rest, cand);
        if (!r.is_zero()) break;
        rest = std::move(qq);
        ++k;
      }
      if (k > 0) res.factors.emplace_back(cand, k);
    }
  }
  if (rest.degree() > 0) res.factors.emplace_back(rest, 1);
  sort_merge(res.factors);
  return res;
}

std::string to_string(const FiniteField& F, const FqPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto elem_str = [&](Elem e) {
    if (F.degree() == 1) return std::to_string(e);
    // element as polynomial in the generator symbol "a"
    const auto dg = F.digits(e);
    std::ostringstream s;
    bool f = true;
    for (int i = F.degree() - 1; i >= 0; --i) {
      if (dg[i] == 0) continue;
      if (!f) s << "+";
      f = false;
      if (i == 0)
        s << dg[i];
      else {
        if (dg[i] != 1) s << dg[i] << "*";
        s << "a";
        if (i > 1) s << "^" << i;
      }
    }
    const bool compound = std::count(dg.begin(), dg.end(), 0L) < F.degree() - 1;
    return compound ? "(" + s.str() + ")" : s.str();
  };
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << elem_str(a.c[i]);
    } else {
      if (a.c[i] != 1) os << elem_str(a.c[i]) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fq
}  // namespace recip
