#include "recip/function_field.hpp"

#include <algorithm>
#include <set>

#include "recip/error.hpp"

namespace recip {

using Elem = FiniteField::Elem;

FiniteField make_fq(long q) {
  if (q < 2) fail(ErrorCode::BadInput, "field size must be at least 2");
  const auto fs = factor(mpz_class(q));
  if (fs.size() != 1) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
  const auto [p, d] = fs[0];
  if (d == 1) return FiniteField::prime(p);
  if (!FiniteField::has_conway(p, d)) fail(ErrorCode::UnsupportedField, "no fixed modulus for q = " + std::to_string(q));
  return FiniteField::conway(p, d);
}

bool FFPlace::operator<(const FFPlace& o) const {
  if (infinite != o.infinite) return o.infinite;
  if (infinite) return false;
  return pi < o.pi;
}

namespace ff {

FqRational make(const FiniteField& F, const FqPoly& num, const FqPoly& den) {
  if (den.is_zero()) fail(ErrorCode::ZeroInput, "rational function with zero denominator");
  if (num.is_zero()) return {FqPoly{}, FqPoly::constant(1)};
  const FqPoly g = fq::gcd(F, num, den);
  FqPoly n = fq::quo(F, num, g), d = fq::quo(F, den, g);
  const Elem c = F.inv(d.lead());
  return {fq::scale(F, n, c), fq::scale(F, d, c)};
}

FqRational from_poly(const FqPoly& p) { return {p, FqPoly::constant(1)}; }
FqRational constant(Elem c) { return from_poly(c ? FqPoly::constant(c) : FqPoly{}); }

FqRational mul(const FiniteField& F, const FqRational& a, const FqRational& b) {
  return make(F, fq::mul(F, a.num, b.num), fq::mul(F, a.den, b.den));
}

FqRational div(const FiniteField& F, const FqRational& a, const FqRational& b) {
  if (b.num.is_zero()) fail(ErrorCode::ZeroInput, "division by the zero function");
  return make(F, fq::mul(F, a.num, b.den), fq::mul(F, a.den, b.num));
}

FqRational add(const FiniteField& F, const FqRational& a, const FqRational& b) {
  return make(F, fq::add(F, fq::mul(F, a.num, b.den), fq::mul(F, b.num, a.den)), fq::mul(F, a.den, b.den));
}

FqRational sub(const FiniteField& F, const FqRational& a, const FqRational& b) {
  return make(F, fq::sub(F, fq::mul(F, a.num, b.den), fq::mul(F, b.num, a.den)), fq::mul(F, a.den, b.den));
}

FqRational scale(const FiniteField& F, const FqRational& a, Elem c) { return make(F, fq::scale(F, a.num, c), a.den); }

FqRational derivative(const FiniteField& F, const FqRational& a) {
  const FqPoly n = fq::sub(F, fq::mul(F, fq::derivative(F, a.num), a.den), fq::mul(F, a.num, fq::derivative(F, a.den)));
  return make(F, n, fq::mul(F, a.den, a.den));
}

bool is_zero(const FqRational& a) { return a.num.is_zero(); }
bool is_constant(const FqRational& a) { return a.num.degree() <= 0 && a.den.degree() == 0; }

std::string to_string(const FiniteField& F, const FqRational& a) {
  const std::string n = fq::to_string(F, a.num);
  if (a.den.degree() == 0) return n;
  auto wrap = [](const std::string& s) { return s.find('+') == std::string::npos ? s : "(" + s + ")"; };
  return wrap(n) + "/" + wrap(fq::to_string(F, a.den));
}

std::string to_string(const FiniteField& F, const FFPlace& v) {
  return v.infinite ? "inf" : "(" + fq::to_string(F, v.pi) + ")";
}

FqRational random_rational(const FiniteField& F, Rng& rng, int max_deg) {
  auto poly = [&]() {
    for (;;) {
      const int deg = static_cast<int>(rng() % (max_deg + 1));
      std::vector<Elem> c(deg + 1);
      for (auto& x : c) x = static_cast<Elem>(rng() % F.order());
      FqPoly p(std::move(c));
      if (!p.is_zero()) return p;
    }
  };
  const FqPoly n = poly();
  return make(F, n, poly());
}

}  // namespace ff

long ord(const FiniteField& F, const FqRational& f, const FFPlace& v) {
  if (ff::is_zero(f)) fail(ErrorCode::ZeroInput, "order of the zero function");
  if (v.infinite) return f.den.degree() - f.num.degree();
  return fq::multiplicity(F, f.num, v.pi) - fq::multiplicity(F, f.den, v.pi);
}

std::vector<std::pair<FFPlace, long>> divisor(const FiniteField& F, const FqRational& f) {
  if (ff::is_zero(f)) fail(ErrorCode::ZeroInput, "divisor of the zero function");
  std::vector<std::pair<FFPlace, long>> out;
  for (const auto& [pi, k] : fq::factor(F, f.num).factors) out.emplace_back(FFPlace::finite(pi), k);
  for (const auto& [pi, k] : fq::factor(F, f.den).factors) out.emplace_back(FFPlace::finite(pi), -k);
  const long vinf = ord(F, f, FFPlace::at_infinity());
  if (vinf) out.emplace_back(FFPlace::at_infinity(), vinf);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

FqPoly kappa_reduce(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  if (v.infinite) {
    if (a.degree() > 0) fail(ErrorCode::BadInput, "residue field at infinity is F_q");
    return a;
  }
  return fq::rem(F, a, v.pi);
}

FqPoly kappa_mul(const FiniteField& F, const FFPlace& v, const FqPoly& a, const FqPoly& b) {
  return kappa_reduce(F, v, fq::mul(F, a, b));
}

namespace {

FqPoly kappa_inv(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroInput, "inverse of zero in the residue field");
  if (v.infinite) return FqPoly::constant(F.inv(a.coeff(0)));
  return fq::inverse_mod(F, a, v.pi);
}

FqPoly kappa_div(const FiniteField& F, const FFPlace& v, const FqPoly& a, const FqPoly& b) {
  return kappa_mul(F, v, a, kappa_inv(F, v, b));
}

Elem as_constant(const FqPoly& a) {
  if (a.degree() > 0) fail(ErrorCode::InvariantFailure, "norm or trace left F_q");
  return a.coeff(0);
}

mpz_class q_power(const FiniteField& F, int d) { return ipow(F.order(), static_cast<unsigned long>(d)); }

}  // namespace

FqPoly kappa_pow(const FiniteField& F, const FFPlace& v, const FqPoly& a, const mpz_class& e) {
  if (e < 0) return kappa_pow(F, v, kappa_inv(F, v, a), -e);
  if (v.infinite) return a.is_zero() ? (e == 0 ? FqPoly::constant(1) : FqPoly{}) : FqPoly::constant(F.pow(a.coeff(0), mpz_class(e % (F.order() - 1)).get_si()));
  return fq::powmod(F, a, e, v.pi);
}

Elem kappa_norm(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  const mpz_class e = (q_power(F, v.degree()) - 1) / (F.order() - 1);
  return as_constant(kappa_pow(F, v, a, e));
}

Elem kappa_norm_frobenius(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  FqPoly prod = FqPoly::constant(1), conj = kappa_reduce(F, v, a);
  for (int i = 0; i < v.degree(); ++i) {
    prod = kappa_mul(F, v, prod, conj);
    conj = kappa_pow(F, v, conj, F.order());
  }
  return as_constant(prod);
}

Elem kappa_trace(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  Elem tr = 0;
  const FqPoly x = kappa_reduce(F, v, a);
  for (int i = 0; i < v.degree(); ++i) tr = F.add(tr, kappa_mul(F, v, x, FqPoly::monomial(1, i)).coeff(i));
  return tr;
}

Elem kappa_trace_frobenius(const FiniteField& F, const FFPlace& v, const FqPoly& a) {
  FqPoly sum, conj = kappa_reduce(F, v, a);
  for (int i = 0; i < v.degree(); ++i) {
    sum = fq::add(F, sum, conj);
    conj = kappa_pow(F, v, conj, F.order());
  }
  return as_constant(sum);
}

FqPoly residue_of_unit(const FiniteField& F, const FqRational& f, const FFPlace& v) {
  if (ord(F, f, v) != 0) fail(ErrorCode::BadInput, "function is not a unit at the place");
  if (v.infinite) return FqPoly::constant(F.div(f.num.lead(), f.den.lead()));
  return kappa_div(F, v, kappa_reduce(F, v, f.num), kappa_reduce(F, v, f.den));
}

namespace {

// Residue of the unit part f / pi_v^{ord f}. At infinity the uniformizer
// is 1/t and the unit part has residue lc(num)/lc(den).
FqPoly unit_part_residue(const FiniteField& F, const FqRational& f, const FFPlace& v, long a) {
  if (v.infinite) return FqPoly::constant(F.div(f.num.lead(), f.den.lead()));
  FqPoly n = f.num, d = f.den;
  for (long i = 0; i < a; ++i) n = fq::quo(F, n, v.pi);
  for (long i = 0; i < -a; ++i) d = fq::quo(F, d, v.pi);
  return kappa_div(F, v, kappa_reduce(F, v, n), kappa_reduce(F, v, d));
}

}  // namespace

FqPoly ff_tame_symbol(const FiniteField& F, const FqRational& f, const FqRational& g, const FFPlace& v) {
  const long a = ord(F, f, v), b = ord(F, g, v);
  const FqPoly uf = unit_part_residue(F, f, v, a), ug = unit_part_residue(F, g, v, b);
  FqPoly r = kappa_mul(F, v, kappa_pow(F, v, uf, b), kappa_pow(F, v, ug, -a));
  if (mod(a * b, 2L)) r = fq::neg(F, r);
  return r;
}

std::vector<FFPlace> symbol_support(const FiniteField& F, const FqRational& f, const FqRational& g) {
  std::set<FFPlace> s{FFPlace::at_infinity()};
  for (const auto& [v, k] : divisor(F, f)) s.insert(v);
  for (const auto& [v, k] : divisor(F, g)) s.insert(v);
  return {s.begin(), s.end()};
}

WeilReport weil_reciprocity_check(const FiniteField& F, const FqRational& f, const FqRational& g) {
  WeilReport r{{}, F.one(), true};
  for (const FFPlace& v : symbol_support(F, f, g)) {
    const FqPoly s = ff_tame_symbol(F, f, g, v);
    const Elem n = kappa_norm(F, v, s);
    r.product = F.mul(r.product, n);
    r.table.push_back({v, s, n});
  }
  r.ok = r.product == F.one();
  return r;
}

FFHilbertReport ff_hilbert_check(const FiniteField& F, const FqRational& f, const FqRational& g) {
  FFHilbertReport r{{}, F.one(), true};
  const long p = F.characteristic();
  for (const FFPlace& v : symbol_support(F, f, g)) {
    FFHilbertEntry e;
    e.place = v;
    e.m_v = q_power(F, v.degree()) - 1;
    e.exponent = e.m_v / (F.order() - 1);
    const FqPoly h = ff_tame_symbol(F, f, g, v);
    e.value = as_constant(kappa_pow(F, v, h, e.exponent));
    e.norm = kappa_norm_frobenius(F, v, h);
    e.agrees = e.value == e.norm;
    e.prime_to_p = e.m_v % p != 0;
    r.product = F.mul(r.product, e.value);
    r.ok = r.ok && e.agrees && e.prime_to_p;
    r.table.push_back(e);
  }
  r.ok = r.ok && r.product == F.one();
  return r;
}

namespace {

// Coefficient n of the power series a / b, b(0) != 0.
FqPoly series_quotient_coeff(const FiniteField& F, const FFPlace& v, const std::vector<FqPoly>& a,
                             const std::vector<FqPoly>& b, int n) {
  const FqPoly b0inv = kappa_inv(F, v, b[0]);
  std::vector<FqPoly> c;
  for (int k = 0; k <= n; ++k) {
    FqPoly t = k < static_cast<int>(a.size()) ? a[k] : FqPoly{};
    for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) t = fq::sub(F, t, kappa_mul(F, v, b[j], c[k - j]));
    c.push_back(kappa_mul(F, v, t, b0inv));
  }
  return c[n];
}

}  // namespace

FqPoly residue_at(const FiniteField& F, const FqRational& h, const FFPlace& v) {
  if (ff::is_zero(h)) return {};
  if (v.infinite) {
    // t = 1/s: h dt = -s^{dQ-dP-2} Prev(s)/Qrev(s) ds.
    const int dP = h.num.degree(), dQ = h.den.degree();
    const int k = dP - dQ + 1;
    if (k < 0) return {};
    std::vector<FqPoly> a, b;
    for (int i = 0; i <= k; ++i) {
      a.push_back(FqPoly::constant(i <= dP ? h.num.coeff(dP - i) : 0));
      b.push_back(FqPoly::constant(i <= dQ ? h.den.coeff(dQ - i) : 0));
    }
    return fq::neg(F, series_quotient_coeff(F, v, a, b, k));
  }
  const int e = fq::multiplicity(F, h.den, v.pi);
  if (e == 0) return {};
  // Taylor coefficients at the root alpha = t mod pi: Hasse derivatives.
  std::vector<FqPoly> a, b;
  for (int i = 0; i < e; ++i) {
    a.push_back(kappa_reduce(F, v, fq::hasse_derivative(F, h.num, i)));
    b.push_back(kappa_reduce(F, v, fq::hasse_derivative(F, h.den, e + i)));
  }
  return series_quotient_coeff(F, v, a, b, e - 1);
}

ResidueReport residue_theorem_check(const FiniteField& F, const FqRational& f, const FqRational& g) {
  if (ff::is_zero(f) || ff::is_zero(g)) fail(ErrorCode::ZeroInput, "differential with a zero factor");
  ResidueReport r;
  const FqRational dg = ff::derivative(F, g);
  if (ff::is_zero(dg)) {
    r.constant_differential = true;
    return r;
  }
  const FqRational h = ff::mul(F, f, dg);
  std::vector<FFPlace> places;
  for (const auto& [pi, k] : fq::factor(F, h.den).factors) places.push_back(FFPlace::finite(pi));
  places.push_back(FFPlace::at_infinity());
  for (const FFPlace& v : places) {
    ResidueEntry e{v, residue_at(F, h, v), 0, 0};
    e.trace = kappa_trace(F, v, e.residue);
    e.trace_frobenius = kappa_trace_frobenius(F, v, e.residue);
    r.sum = F.add(r.sum, e.trace);
    r.ok = r.ok && e.trace == e.trace_frobenius;
    r.table.push_back(e);
  }
  r.ok = r.ok && r.sum == 0;
  return r;
}

}  // namespace recip
