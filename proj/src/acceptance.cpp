#include "recip/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "recip/error.hpp"
#include "recip/function_field.hpp"
#include "recip/global_recip.hpp"
#include "recip/integer.hpp"
#include "recip/norm_residue.hpp"
#include "recip/orders.hpp"
#include "recip/presets.hpp"
#include "recip/rational_symbols.hpp"
#include "recip/symbols.hpp"

namespace recip {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  long failures = 0;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << " FAIL[" << what << "]";
    passed = false;
  }
};

FElem random_nonzero(const LocalField& F, Rng& rng, int max_shift) {
  for (;;) {
    FElem x = random_unit(F, rng);
    if (max_shift > 0) x = x * F.pi_power(static_cast<long>(rng() % (max_shift + 1)));
    if (valuation(x)) return x;
  }
}

void c1(Outcome& o, Rng& rng) {
  const auto primes = primes_below(200);
  long pairs = 0;
  for (long p : primes)
    for (long q : primes) {
      if (p == 2 || q == 2 || p == q) continue;
      const MooreReport r = moore_product_q(p, q);
      ++pairs;
      o.check(r.product == 1 && r.consistent, "moore(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  long randoms = 0;
  while (randoms < 500) {
    const long a = static_cast<long>(rng() % 20001) - 10000, b = static_cast<long>(rng() % 20001) - 10000;
    if (a == 0 || b == 0) continue;
    ++randoms;
    const MooreReport r = moore_product_q(a, b);
    o.check(r.product == 1 && r.consistent, "moore(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  long views = 0;
  for (long p : primes_below(100))
    for (long q : primes_below(100)) {
      if (p == 2 || q == 2 || p == q) continue;
      ++views;
      o.check(quadratic_reciprocity_view(p, q).holds, "legendre(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  o.detail << pairs << " prime pairs, " << randoms << " random pairs, " << views << " Legendre identities";
}

void c2(Outcome& o, Rng& rng) {
  long pairs = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    const FieldPtr F = make_qp(p, 32);
    std::set<long> s{1, -1, 2, -2, 5, -5, p, p + 1, p - 1};
    while (s.size() < 13) {
      const long u = static_cast<long>(rng() % 1000) + 1;
      if (u % p) s.insert(rng() % 2 ? u : -u);
    }
    s.erase(0);
    for (long a : s)
      for (long b : s) {
        const bool closed = hilbert_quadratic_q(a, b, Place::finite(p)) == 1;
        const bool oracle = norm_residue_trivial(F->from_int(a), F->from_int(b), 2);
        ++pairs;
        o.check(closed == oracle, "p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  }
  o.check(pairs >= 200, "fewer than 200 pairs");
  o.detail << pairs << " pairs at p in {2,3,5,7}";
}

const std::vector<std::string> kSymbolPresets{"qp:3", "qp:5", "qp-zeta:3", "root:3:3"};

void c3(Outcome& o, Rng& rng) {
  long n = 0;
  for (const auto& name : kSymbolPresets) {
    const FieldPtr F = make_preset(name, 64);
    const long mod_n = F->q() - 1;
    for (int t = 0; t < 500; ++t) {
      const FElem x = random_nonzero(*F, rng, 3), x2 = random_nonzero(*F, rng, 3), y = random_nonzero(*F, rng, 3);
      o.check(mod(tame_log(x, y) + tame_log(x2, y), mod_n) == tame_log(x * x2, y), name + " bilinear");
      o.check(mod(tame_log(x, y) + tame_log(y, x), mod_n) == 0, name + " antisymmetric");
      FElem s = random_integral(*F, rng);
      if (rng() % 2) s = F->pi_power(static_cast<long>(rng() % 3)) * s;
      if (!valuation(s) || !valuation(F->one() - s)) continue;
      o.check(tame_log(s, F->one() - s) == 0, name + " Steinberg");
      ++n;
    }
  }
  o.detail << "500 samples on each of " << kSymbolPresets.size() << " presets, " << n << " Steinberg pairs";
}

const std::vector<std::string> kOrderPresets{"qp:3", "qp:5", "qp-zeta:3", "root:3:3", "qp-zeta:5"};

void c4(Outcome& o, Rng& rng) {
  long checks = 0;
  for (const auto& name : kOrderPresets) {
    const FieldPtr F = make_preset(name, 64);
    const FiniteField& k = F->residue_field();
    // Every residue is hit by O_0.
    std::set<FiniteField::Elem> hit;
    hit.insert(k.zero());
    for (long c = 1; c < k.order(); ++c) hit.insert(residue(F->from_o0(F->teichmuller_lift(static_cast<FiniteField::Elem>(c)))));
    o.check(static_cast<long>(hit.size()) == k.order(), name + " residue surjectivity");
    for (long m = 0; m <= 2 * F->e(); ++m) {
      const OrderRm R(*F, m);
      for (int t = 0; t < 500 / (2 * F->e() + 1) + 1; ++t) {
        const FElem x = R.random_element(rng), y = R.random_element(rng);
        o.check(R.contains(x) && R.contains(y), name + " sample in R_m");
        o.check(R.contains(x + y) && R.contains(x * y) && R.contains(x - y), name + " ring closure m=" + std::to_string(m));
        const bool unit = R.is_unit(x), ideal = R.in_maximal_ideal(x);
        o.check(unit != ideal, name + " dichotomy m=" + std::to_string(m));
        if (unit) o.check(R.contains(inverse(x)), name + " inverse inside m=" + std::to_string(m));
        if (m >= 1 && m <= F->e()) {
          const Valuation v = valuation(x);
          o.check(ideal == (!v || *v >= m), name + " maximal ideal is m^" + std::to_string(m));
        }
        // x is congruent mod the maximal ideal to a Teichmuller lift.
        const FElem lift = F->from_o0(F->teichmuller_lift(leading_digit(x, 0)));
        o.check(R.in_maximal_ideal(x - lift), name + " residue from O_0 m=" + std::to_string(m));
        // General integral elements: membership agrees with the R_m shape.
        const FElem z = random_integral(*F, rng);
        bool shape = true;
        for (int i = 1; i < F->e(); ++i) {
          const Valuation vi = val_p(z.coeff(i));
          if (vi && F->e() * *vi + i < m) shape = false;
        }
        o.check(R.contains(z) == shape, name + " membership shape");
        ++checks;
      }
    }
  }
  o.detail << checks << " element checks over m = 0..2e on " << kOrderPresets.size() << " presets";
}

void c5(Outcome& o, Rng&) {
  long cases = 0;
  for (const auto& name : {"qp:3", "qp-zeta:3", "root:3:2", "root:3:3", "unr:3:2", "qp:5", "root:5:2", "root:5:3"}) {
    const FieldPtr F = make_preset(name, 8);
    for (long m = 0; m <= 2 * F->e(); ++m) {
      const OrderIndex closed = index_in_of(*F, m);
      const mpz_class brute = index_brute_force(*F, m);
      ++cases;
      o.check(closed.value == brute, std::string(name) + " m=" + std::to_string(m));
    }
  }
  o.detail << cases << " (field, m) cases at N = 8";
}

void c6(Outcome& o, Rng&) {
  long forward = 0, roots = 0;
  for (const auto& name : {"qp-zeta:3", "qp-zeta:5", "root:3:3"}) {
    const FieldPtr F = make_preset(name, 64);
    const long e = F->e(), p = F->p();
    // p e1 + (k-1) e, and never below p e1 where the p-th power map onto
    // higher levels stops being bijective (k = 0).
    const long top = floor_rational(mpq_class(p) * F->e1() + mpq_class(std::max(0, F->k() - 1) * e));
    for (long t = 1; 2 * t * p < F->M() && t <= top + 2; ++t) {
      const HasseReport r = hasse_forward(*F, t);
      ++forward;
      o.check(r.ok, std::string(name) + " forward t=" + std::to_string(t));
    }
    const FiniteField& k = F->residue_field();
    for (long i = top + 1; i <= top + e + 1; ++i)
      for (long a = 0; a < F->d(); ++a) {
        const FElem w = F->one() + F->digit_element(k.exp(a), i);
        const FElem u = pth_root_in_filtration(w, i - e);
        const FElem diff = pow(u, p) - w;
        const Valuation v = valuation(diff);
        ++roots;
        o.check(!v || *v >= std::min(u.prec(), diff.prec()), std::string(name) + " root level " + std::to_string(i));
        o.check(u.prec() > i, std::string(name) + " root precision");
      }
  }
  o.detail << forward << " forward inclusions, " << roots << " constructive roots";
}

void c7(Outcome& o, Rng&) {
  for (const auto& name : {"qp-zeta:3", "qp-zeta:5"}) {
    const FieldPtr F = make_preset(name, 32);
    const long B = m0_bound(*F), p = F->p();
    const FElem w = F->from_int(1 + p);
    const FElem& zeta = *F->zeta_p();
    const long jw = wild_symbol_zeta(w);
    o.check(jw != 0, std::string(name) + " wild(1+p) nonzero");
    o.check(!norm_residue_trivial(w, zeta, p), std::string(name) + " oracle on 1+p");
    // Spanning set of U^{B+1}: 1 + omega^a pi^s for B < s <= B + e.
    const FiniteField& k = F->residue_field();
    long n = 0;
    for (long s = B + 1; s <= B + F->e(); ++s)
      for (long a = 0; a < F->d(); ++a) {
        const FElem x = F->one() + F->digit_element(k.exp(a), s);
        o.check(wild_symbol_zeta(x) == 0, std::string(name) + " wild vanishes at level " + std::to_string(s));
        o.check(norm_residue_trivial(x, zeta, p), std::string(name) + " oracle vanishes at level " + std::to_string(s));
        ++n;
      }
    o.detail << name << ": B=" << B << " wild(1+p)=" << jw << ", " << n << " spanning elements vanish; ";
  }
}

void c8(Outcome& o, Rng& rng) {
  for (const auto& name : {"qp:3", "qp:5", "qp-zeta:3", "root:3:3", "qp-zeta:5"}) {
    const FieldPtr F = make_preset(name, 64);
    const auto evs = available_evaluators(*F);
    long n = 0;
    for (int t = 0; t < 200; ++t) {
      const FElem x = random_nonzero(*F, rng, 3), y = random_nonzero(*F, rng, 3);
      const FElem u = random_principal_unit(*F, rng, 2);
      const auto dec = k1_decompose(x, y);
      const auto [a, b] = k2_transform(u);
      for (const auto& ev : evs) {
        long s = 0;
        for (const auto& [f, g] : dec) s += ev.eval(f, g);
        o.check(mod(s, ev.modulus) == ev.eval(x, y), std::string(name) + " k1 " + ev.name);
        o.check(ev.eval(F->pi(), u) == ev.eval(a, b), std::string(name) + " k2 " + ev.name);
      }
      ++n;
    }
    o.detail << name << ": " << n << " inputs x " << evs.size() << " evaluators; ";
  }
}

void c9(Outcome& o, Rng&) {
  auto run = [&](const std::string& name) {
    const FieldPtr F = make_preset(name, 32);
    const OptimalOrderReport r = estimate_m0(*F, default_m0_oracle(*F), 500);
    o.check(r.monotone, name + " monotone");
    o.detail << name << ": m0=" << (r.estimated_m0 ? std::to_string(*r.estimated_m0) : "none") << " (B=" << r.bound << ", "
             << r.pairs_evaluated << " pairs";
    for (const auto& c : r.certificates)
      if (c.kind == "witness") o.detail << ", witness m=" << c.m << " " << c.type << "{" << c.x << "," << c.y << "}";
    o.detail << "); ";
    return r;
  };
  for (const auto& name : {"qp:3", "qp:5", "qp:7"}) {
    const auto r = run(name);
    o.check(r.estimated_m0 && *r.estimated_m0 == 0, std::string(name) + " m0 = 0");
  }
  {
    const auto r = run("root:3:3");
    o.check(r.estimated_m0 && *r.estimated_m0 <= 1, "root:3:3 m0 <= 1");
  }
  for (long p : {3L, 5L}) {
    const std::string name = "qp-zeta:" + std::to_string(p);
    const auto r = run(name);
    o.check(r.bound == p + 1, name + " B = p + 1");
    o.check(r.estimated_m0 && *r.estimated_m0 <= p + 1, name + " m0 <= B");
  }
}

void c10(Outcome& o, Rng& rng) {
  for (long q : {2L, 3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 500; ++t) {
      const FqRational f = ff::random_rational(F, rng, 4), g = ff::random_rational(F, rng, 4);
      o.check(weil_reciprocity_check(F, f, g).ok, "weil q=" + std::to_string(q));
      o.check(ff_hilbert_check(F, f, g).ok, "hilbert q=" + std::to_string(q));
    }
  }
  long skipped = 0;
  for (long q : {2L, 3L, 5L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 500;) {
      const FqRational f = ff::random_rational(F, rng, 4), g = ff::random_rational(F, rng, 4);
      const ResidueReport r = residue_theorem_check(F, f, g);
      if (r.constant_differential) {
        ++skipped;
        continue;
      }
      ++t;
      o.check(r.ok, "residue q=" + std::to_string(q));
    }
  }
  o.detail << "500 pairs for q in {2,3,4,5}; 500 forms for q in {2,3,5} (" << skipped << " exact forms redrawn)";
}

void c11(Outcome& o, Rng&) {
  const GlobalOrderLattice L = global_optimal_lattice(3, 2);
  const FieldPtr F = make_qp_zeta(3, 16);
  const OrderIndex closed = index_in_of(*F, 2);
  const mpz_class brute = lattice_index_brute_force(3, 2);
  o.check(lattice_closed(L), "multiplicative closure");
  o.check(lattice_contains_one(L), "contains 1");
  o.check(L.index == closed.value, "index vs closed form");
  o.check(L.index == brute, "index vs brute force");
  o.detail << "index " << L.index.get_str() << " closed form " << closed.value.get_str() << " brute force " << brute.get_str();
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(Outcome&, Rng&);
};

const Criterion kCriteria[] = {
    {1, "quadratic reciprocity via Moore product", 60, c1},
    {2, "closed-form quadratic symbol vs norm oracle", 120, c2},
    {3, "tame symbol laws", 30, c3},
    {4, "R_m ring structure", 60, c4},
    {5, "index formula vs brute force", 120, c5},
    {6, "Hasse inclusions and p-th roots", 120, c6},
    {7, "wild symbol nontriviality and vanishing", 300, c7},
    {8, "symbol reduction lemmas", 60, c8},
    {9, "m0 experiments", 600, c9},
    {10, "function-field reciprocity and residues", 60, c10},
    {11, "global lattice", 30, c11},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    Rng rng(seed + static_cast<std::uint64_t>(c.id));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o, rng);
    } catch (const Error& e) {
      o.passed = false;
      o.detail << " error " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) {
      o.passed = false;
      o.detail << " over time limit";
    }
    if (o.failures) o.detail << " (" << o.failures << " failed checks)";
    out.push_back({c.id, c.name, o.passed, o.detail.str(), secs, c.limit});
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " -- " << r.detail;
  os.precision(2);
  if (with_time) os << std::fixed << " [" << r.seconds << "s / " << r.limit_seconds << "s]";
  return os.str();
}

}  // namespace recip
