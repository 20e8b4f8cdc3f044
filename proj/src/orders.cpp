#include "recip/orders.hpp"

#include <algorithm>
#include <set>

#include "recip/error.hpp"

namespace recip {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

OrderRm::OrderRm(const LocalField& F, long m) : F_(&F), m_(m) {
  if (m < 0) fail(ErrorCode::BadInput, "order level must be nonnegative");
}

bool OrderRm::contains(const FElem& x) const {
  const LocalField& F = *F_;
  for (int i = 1; i < F.e(); ++i) {
    const Valuation v = val_p(x.coeff(i));
    if (v) {
      if (F.e() * *v + i < m_) return false;
    } else if (x.prec() < m_) {
      fail(ErrorCode::PrecisionExhausted, "membership not certified at this precision");
    }
  }
  return true;
}

bool OrderRm::in_maximal_ideal(const FElem& x) const {
  if (m_ == 0) {
    const Valuation v = valuation(x);
    if (!v) {
      if (x.prec() < 1) fail(ErrorCode::PrecisionExhausted, "ideal membership not certified");
      return true;
    }
    return *v >= 1;
  }
  if (!contains(x)) return false;
  const Valuation v0 = val_p(x.coeff(0));
  if (!v0 && x.prec() < 1) fail(ErrorCode::PrecisionExhausted, "ideal membership not certified");
  return !v0 || *v0 >= 1;
}

bool OrderRm::is_unit(const FElem& x) const { return contains(x) && !in_maximal_ideal(x); }

FElem OrderRm::random_element(Rng& rng) const {
  const LocalField& F = *F_;
  std::vector<mpz_class> a(F.d());
  for (auto& c : a) c = random_below(rng, F.base().modulus());
  return F.from_o0(O0Elem(&F.base(), a)) + F.pi_power(m_) * random_integral(F, rng);
}

OrderIndex index_in_of(const LocalField& F, long m) {
  long s = 0;
  for (int i = 1; i < F.e(); ++i) s += std::max(0L, ceil_div(m - i, F.e()));
  return {s, ipow(F.q(), static_cast<unsigned long>(s))};
}

mpz_class index_brute_force(const LocalField& F, long m) {
  if (m == 0) return 1;
  const long K = ceil_div(m, F.e());
  if (K > F.N()) fail(ErrorCode::PrecisionExhausted, "brute-force index needs more precision");
  const mpz_class pK = ipow(F.p(), static_cast<unsigned long>(K));
  const long n = static_cast<long>(F.e()) * F.d();
  const mpz_class pKl = pK;
  auto reduce = [&](std::vector<mpz_class> a) {
    for (auto& c : a) c = mod(c, pKl);
    return a;
  };
  // I = pi^m O_F modulo p^K O_F, enumerated from all y in O_F / p^K.
  const FElem pim = F.pi_power(m);
  std::set<std::vector<mpz_class>> ideal;
  std::vector<mpz_class> y(n, 0);
  for (;;) {
    ideal.insert(reduce((pim * FElem(&F, y, F.M())).flat()));
    long j = 0;
    while (j < n && ++y[j] == pK) y[j++] = 0;
    if (j == n) break;
  }
  // |R_m / p^K| = |O_0 / p^K| |I| / |O_0 cap I|.
  long overlap = 0;
  std::vector<mpz_class> c(F.d(), 0);
  for (;;) {
    std::vector<mpz_class> flat(n, 0);
    for (int j = 0; j < F.d(); ++j) flat[j] = c[j];
    if (ideal.count(flat)) ++overlap;
    long j = 0;
    while (j < F.d() && ++c[j] == pK) c[j++] = 0;
    if (j == F.d()) break;
  }
  const mpz_class total = ipow(F.q(), static_cast<unsigned long>(F.e() * K));
  const mpz_class o0 = ipow(F.q(), static_cast<unsigned long>(K));
  const mpz_class r = o0 * static_cast<long>(ideal.size()) / overlap;
  return total / r;
}

long unit_cap(const LocalField& F) {
  if (F.k() == 0) return 1;
  const mpq_class b = mpq_class(F.p()) * F.e1() + mpq_class((F.k() - 1) * F.e());
  return floor_rational(b) + 1;
}

long m0_bound(const LocalField& F) {
  if (F.p() == 2) fail(ErrorCode::PIsTwo, "the optimal order for p = 2 is O_F");
  if (F.e() == 1) return 0;
  if (F.k() == 0) return 1;
  return unit_cap(F);
}

std::vector<SpanGenerator> principal_span(const LocalField& F, long m) {
  std::vector<SpanGenerator> out;
  const FiniteField& k = F.residue_field();
  const long cap = unit_cap(F);
  for (long s = std::max(m, 1L); s < cap; ++s)
    for (int a = 0; a < F.d(); ++a)
      out.push_back({"1+w^" + std::to_string(a) + "*pi^" + std::to_string(s), F.one() + F.digit_element(k.exp(a), s)});
  for (long j = 1; j * F.e() < m && j * F.e() < cap; ++j) {
    const FElem pj = F.from_int(ipow(F.p(), static_cast<unsigned long>(j)));
    for (int a = 0; a < F.d(); ++a)
      out.push_back({"1+w^" + std::to_string(a) + "*p^" + std::to_string(j), F.one() + F.omega_power(a) * pj});
  }
  return out;
}

OptimalOrderReport estimate_m0(const LocalField& F, const SymbolOracle& oracle, long budget) {
  OptimalOrderReport rep;
  rep.bound = m0_bound(F);
  rep.certified_precision = F.M();
  if (F.e() == 1) {
    rep.estimated_m0 = 0;
    rep.certificates.push_back({0, "vanishing-sweep", 0, "", "unramified", ""});
    return rep;
  }
  const FElem w = F.omega_power(1);
  std::vector<bool> vanish;
  for (long m = 0; m <= rep.bound; ++m) {
    const auto span = principal_span(F, m);
    std::vector<std::tuple<std::string, std::string, std::string, const FElem*, const FElem*>> pairs;
    pairs.emplace_back("A", "w", "w", &w, &w);
    for (const auto& g : span) pairs.emplace_back("B", "w", g.label, &w, &g.value);
    for (size_t i = 0; i < span.size(); ++i)
      for (size_t j = i; j < span.size(); ++j)
        pairs.emplace_back("C", span[i].label, span[j].label, &span[i].value, &span[j].value);
    bool ok = true;
    long tested = 0;
    for (const auto& [type, lx, ly, x, y] : pairs) {
      if (++rep.pairs_evaluated > budget) fail(ErrorCode::BudgetExceeded, "m0 sweep exceeded the sample budget");
      ++tested;
      if (!oracle(*x, *y)) {
        rep.certificates.push_back({m, "witness", tested, type, lx, ly});
        ok = false;
        break;
      }
    }
    if (ok) rep.certificates.push_back({m, "vanishing-sweep", tested, "", "", ""});
    vanish.push_back(ok);
  }
  for (size_t m = 0; m < vanish.size(); ++m) {
    if (vanish[m] && !rep.estimated_m0) rep.estimated_m0 = static_cast<long>(m);
    if (!vanish[m] && rep.estimated_m0) rep.monotone = false;
  }
  return rep;
}

}  // namespace recip
