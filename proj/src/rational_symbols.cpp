#include "recip/rational_symbols.hpp"

#include "recip/error.hpp"
#include "recip/integer.hpp"

namespace recip {

Place Place::finite(long p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, "place " + std::to_string(p) + " is not prime");
  return {Kind::Finite, p};
}

std::string to_string(const Place& v) {
  switch (v.kind) {
    case Place::Kind::Finite:
      return std::to_string(v.prime);
    case Place::Kind::Real:
      return "inf";
    case Place::Kind::Complex:
      return "complex";
  }
  return "?";
}

Place parse_place(const std::string& s) {
  if (s == "inf" || s == "real" || s == "oo") return Place::real();
  if (s == "complex") return Place::complex();
  long p = 0;
  try {
    size_t used = 0;
    p = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    fail(ErrorCode::BadInput, "unrecognised place '" + s + "'");
  }
  return Place::finite(p);
}

std::pair<long, mpq_class> split_rational(const mpq_class& a, long p) {
  if (a == 0) fail(ErrorCode::ZeroInput, "valuation of zero");
  mpz_class n = a.get_num(), d = a.get_den();
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return {v, mpq_class(n, d)};
}

namespace {

// Residue of a p-unit rational, as an integer mod p^k (p^k small).
long unit_residue(const mpq_class& u, long pk) {
  const long n = mod(mpz_class(u.get_num()), mpz_class(pk)).get_si();
  const long d = mod(mpz_class(u.get_den()), mpz_class(pk)).get_si();
  return mod(n * inverse_mod(d, pk), pk);
}

}  // namespace

int hilbert_quadratic_q(const mpq_class& a, const mpq_class& b, const Place& v) {
  if (a == 0 || b == 0) fail(ErrorCode::ZeroInput, "Hilbert symbol of zero");
  if (v.kind == Place::Kind::Complex) return 1;
  if (v.kind == Place::Kind::Real) return a < 0 && b < 0 ? -1 : 1;
  const long p = v.prime;
  const auto [al, u] = split_rational(a, p);
  const auto [be, w] = split_rational(b, p);
  if (p != 2) {
    const long eps = (p - 1) / 2;
    int s = (mod(al * be, 2L) * (eps % 2)) % 2 ? -1 : 1;
    if (mod(be, 2L)) s *= legendre(unit_residue(u, p), p);
    if (mod(al, 2L)) s *= legendre(unit_residue(w, p), p);
    return s;
  }
  const long u8 = unit_residue(u, 8), w8 = unit_residue(w, 8);
  auto eps = [](long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
  const long e = eps(u8) * eps(w8) + mod(al, 2L) * omega(w8) + mod(be, 2L) * omega(u8);
  return e % 2 ? -1 : 1;
}

FElem rational_to_local(const LocalField& F, const mpq_class& a) {
  const mpz_class& d = a.get_den();
  if (d % F.p() == 0) fail(ErrorCode::BadInput, "rational is not integral at p");
  return F.from_int(a.get_num()) * inverse(F.from_int(d));
}

}  // namespace recip
