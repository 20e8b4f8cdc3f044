#include "recip/symbols.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "recip/error.hpp"

namespace recip {

namespace {

struct Split {
  long a;
  FElem u;
};

Split split(const FElem& x) {
  const Valuation v = valuation(x);
  if (!v) fail(ErrorCode::PrecisionExhausted, "symbol argument indistinguishable from zero");
  return {*v, shift_down(x, *v)};
}

long crt(long a, long m, long b, long n) {
  // x = a mod m, x = b mod n, gcd(m, n) = 1
  const long t = mod((b - a) * inverse_mod(mod(m, n), n), n);
  return mod(a + m * t, m * n);
}

}  // namespace

long tame_log(const FElem& x, const FElem& y) {
  const LocalField& F = x.field();
  const FiniteField& k = F.residue_field();
  const Split sx = split(x), sy = split(y);
  const long n = k.order() - 1;
  const long lm1 = k.log(k.neg(k.one()));
  const long lx = k.log(residue(sx.u)), ly = k.log(residue(sy.u));
  return mod(mod(sx.a * sy.a, n) * lm1 + mod(sy.a, n) * lx - mod(sx.a, n) * ly, n);
}

FiniteField::Elem tame_symbol(const FElem& x, const FElem& y) { return x.field().residue_field().exp(tame_log(x, y)); }

FiniteField::Elem hilbert_tame_part(const FElem& x, const FElem& y) { return tame_symbol(x, y); }

bool supports_wild_values(const LocalField& F) {
  return F.p() != 2 && F.d() == 1 && F.e() == F.p() - 1 && F.k() == 1;
}

bool supports_full_symbol(const LocalField& F) { return F.k() == 0 || supports_wild_values(F); }

long wild_symbol_zeta(const FElem& x) {
  const LocalField& F = x.field();
  if (!supports_wild_values(F)) fail(ErrorCode::UnsupportedField, "wild values need F = Q_p(zeta_p), p odd");
  const NormValue nv = norm_to_base(x);
  const long p = F.p();
  if (nv.value == 0) fail(ErrorCode::PrecisionExhausted, "norm vanishes at precision");
  const long v = val_p(nv.value, p);
  if (nv.prec < v + 2) fail(ErrorCode::PrecisionExhausted, "norm known below p^2 past its valuation");
  const mpz_class pv = ipow(p, static_cast<unsigned long>(v));
  const long p2 = p * p;
  const long u = mod(mpz_class(nv.value / pv), mpz_class(p2)).get_si();
  if (u % p != 1) fail(ErrorCode::NormUnitNotPrincipal, "unit part of the norm is not 1 mod p");
  const long uinv = inverse_mod(u, p2);
  return mod((uinv - 1) / p, p);
}

long hilbert_p_exponent_direct(const FElem& x, const FElem& y) {
  const LocalField& F = x.field();
  if (!supports_wild_values(F)) fail(ErrorCode::UnsupportedField, "wild values need F = Q_p(zeta_p), p odd");
  const long p = F.p();
  const FElem& zeta = *F.zeta_p();
  // h(zeta, y) = h(y, zeta)^{-1} = zeta^{-j(y)}, so x zeta^{-c} is a norm
  // from F(y^{1/p}) exactly when h(x, y) = zeta^{-c j(y)}.
  auto with_reference = [&](const FElem& yy, long jy) -> long {
    const KummerNormGroup H(F, p, yy);
    if (H.y_is_power()) return 0;
    const FElem zinv = inverse(zeta);
    FElem t = x;
    for (long c = 0; c < p; ++c) {
      if (H.contains(t)) return mod(-c * jy, p);
      t = t * zinv;
    }
    fail(ErrorCode::UnsupportedSplitting, "no power of zeta moves x into the norm group");
  };
  const long jy = wild_symbol_zeta(y);
  if (jy != 0) return with_reference(y, jy);
  const FElem w = F.from_int(1 + p);
  const long jw = wild_symbol_zeta(w);
  if (jw == 0) fail(ErrorCode::NormUnitNotPrincipal, "1 + p pairs trivially with zeta_p");
  return mod(with_reference(y * w, jw) - with_reference(w, jw), p);
}

namespace {

// Gram matrix of h_p on power-class generators g_i, with G the matrix of
// their coordinates: h(x, y) = a^T H b where G^T a = coords(x). Only plain
// data is cached; coordinates are recomputed against the caller's field.
struct PairingTable {
  std::vector<std::vector<long>> Gt;
  std::vector<std::vector<long>> H;
};

std::string fingerprint(const LocalField& F) {
  std::string s = F.name() + "|" + std::to_string(F.N()) + "|" + std::to_string(F.d());
  for (const auto& c : F.eisenstein())
    for (const auto& a : c) s += "|" + a.get_str();
  const FElem w = F.omega_power(1);
  for (const auto& a : w.flat()) s += "|" + a.get_str();
  return s;
}

std::shared_ptr<const PairingTable> pairing_table(const LocalField& F) {
  static std::map<std::string, std::shared_ptr<const PairingTable>> cache;
  static std::mutex mu;
  const std::string key = fingerprint(F);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const long p = F.p();
  auto T = std::make_shared<PairingTable>();
  const PowerClasses P(F, p);
  const int r = P.rank();
  FpSpan span(p, r);
  std::vector<FElem> gens;
  std::vector<std::vector<long>> cols;
  auto offer = [&](const FElem& g) {
    if (static_cast<int>(gens.size()) == r) return;
    auto c = P.coords(g);
    if (span.add(c)) {
      gens.push_back(g);
      cols.push_back(c);
    }
  };
  offer(F.pi());
  const FiniteField& k = F.residue_field();
  for (long s = 1; s < P.needed_precision(); ++s)
    for (long a = 0; a < F.d(); ++a) offer(F.one() + F.digit_element(k.exp(a), s));
  Rng rng(0x5eed);
  for (int t = 0; static_cast<int>(gens.size()) < r; ++t) {
    if (t > 1000) fail(ErrorCode::InvariantFailure, "power-class generators not found");
    offer(random_unit(F, rng) * F.pi_power(static_cast<long>(rng() % 2)));
  }
  T->Gt.assign(r, std::vector<long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) T->Gt[i][j] = cols[j][i];
  T->H.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      T->H[i][j] = hilbert_p_exponent_direct(gens[i], gens[j]);
      T->H[j][i] = mod(-T->H[i][j], p);
    }
  // h(g, g) = h(g, -1) is trivial for p odd.
  std::lock_guard lock(mu);
  return cache.emplace(key, T).first->second;
}

}  // namespace

long hilbert_p_exponent(const FElem& x, const FElem& y) {
  const LocalField& F = x.field();
  if (!supports_wild_values(F)) fail(ErrorCode::UnsupportedField, "wild values need F = Q_p(zeta_p), p odd");
  const long p = F.p();
  const auto T = pairing_table(F);
  const PowerClasses P(F, p);
  const auto a = solve_mod(T->Gt, P.coords(x), p);
  const auto b = solve_mod(T->Gt, P.coords(y), p);
  if (!a || !b) fail(ErrorCode::InvariantFailure, "power-class generators do not span");
  long h = 0;
  for (size_t i = 0; i < a->size(); ++i)
    for (size_t j = 0; j < b->size(); ++j) h = mod(h + (*a)[i] * T->H[i][j] % p * (*b)[j], p);
  return h;
}

MuElem hilbert_symbol(const FElem& x, const FElem& y) {
  const LocalField& F = x.field();
  if (!supports_full_symbol(F)) fail(ErrorCode::OracleUnavailable, "no wild symbol for this field");
  const long n = F.q() - 1;
  const long pk = ipow(F.p(), static_cast<unsigned long>(F.k())).get_si();
  MuElem r;
  // h^{p^k} is the tame symbol through the Teichmuller identification.
  r.tame = n == 1 ? 0 : mod(tame_log(x, y) * inverse_mod(mod(pk, n), n), n);
  if (F.k() == 1) {
    // h^{q-1} is the degree-p symbol.
    r.wild = mod(hilbert_p_exponent(x, y) * inverse_mod(mod(n, F.p()), F.p()), F.p());
  }
  return r;
}

namespace {

bool quadratic_available(const LocalField& F) { return F.p() == 2 ? F.k() >= 1 : true; }

}  // namespace

std::vector<Evaluator> available_evaluators(const LocalField& F) {
  std::vector<Evaluator> out;
  out.push_back({"tame", F.q() - 1, [](const FElem& x, const FElem& y) { return tame_log(x, y); }});
  if (quadratic_available(F))
    out.push_back({"quadratic", 2, [](const FElem& x, const FElem& y) { return norm_residue_trivial(x, y, 2) ? 0L : 1L; }});
  if (supports_wild_values(F)) {
    out.push_back({"wild-p", F.p(), [](const FElem& x, const FElem& y) { return hilbert_p_exponent(x, y); }});
  }
  if (supports_full_symbol(F)) {
    const long n = F.q() - 1;
    const long pk = ipow(F.p(), static_cast<unsigned long>(F.k())).get_si();
    out.push_back({"hilbert", n * pk, [n, pk](const FElem& x, const FElem& y) {
                     const MuElem h = hilbert_symbol(x, y);
                     return crt(h.tame, n, h.wild, pk);
                   }});
  }
  return out;
}

SteinbergResult steinberg_check(const FElem& x) {
  const LocalField& F = x.field();
  const FElem y = F.one() - x;
  if (!valuation(x) || !valuation(y)) fail(ErrorCode::Degenerate, "Steinberg check needs x and 1 - x nonzero");
  SteinbergResult r{tame_log(x, y) == 0, {}, true};
  r.ok = r.tame_trivial;
  for (const auto& ev : available_evaluators(F)) {
    if (ev.name == "tame") continue;
    const bool t = ev.eval(x, y) == 0;
    r.others.emplace_back(ev.name, t);
    r.ok = r.ok && t;
  }
  return r;
}

std::vector<std::pair<FElem, FElem>> k1_decompose(const FElem& x, const FElem& y) {
  const LocalField& F = x.field();
  const Split sx = split(x), sy = split(y);
  FElem w = pow(sy.u, sx.a) * pow(sx.u, -sy.a);
  if ((sx.a * sy.a) % 2) w = -w;
  return {{F.pi(), w}, {sx.u, sy.u}};
}

std::pair<FElem, FElem> k2_transform(const FElem& u) {
  const LocalField& F = u.field();
  const Valuation lvl = unit_level(u);
  if (lvl && *lvl < 2) fail(ErrorCode::NotDeepEnough, "k2_transform needs u in U^2");
  const FElem z = F.one() - u;
  const FElem g = F.one() + shift_down(z, 1) - z;
  return {inverse(g), F.one() - F.pi() * g};
}

SymbolOracle default_m0_oracle(const LocalField& F, std::uint64_t seed) {
  if (F.k() >= 2) fail(ErrorCode::OracleUnavailable, "no oracle for p^k-th symbols with k >= 2");
  if (F.k() == 0) return [](const FElem& x, const FElem& y) { return tame_log(x, y) == 0; };
  if (supports_wild_values(F))
    return [](const FElem& x, const FElem& y) { return tame_log(x, y) == 0 && hilbert_p_exponent(x, y) == 0; };
  auto cache = std::make_shared<std::map<std::vector<mpz_class>, std::shared_ptr<KummerNormGroup>>>();
  const LocalField* Fp = &F;
  return [cache, Fp, seed](const FElem& x, const FElem& y) {
    if (tame_log(x, y) != 0) return false;
    auto it = cache->find(y.flat());
    if (it == cache->end())
      it = cache->emplace(y.flat(), std::make_shared<KummerNormGroup>(*Fp, Fp->p(), y, 4000, seed)).first;
    return it->second->contains(x);
  };
}

}  // namespace recip
