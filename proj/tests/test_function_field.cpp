#include <gtest/gtest.h>

#include "recip/function_field.hpp"

using namespace recip;

namespace {

const FqPoly T({0, 1});

FqPoly one_poly() { return FqPoly::constant(1); }

FqRational rat(const FiniteField& F, const FqPoly& num, const FqPoly& den = FqPoly::constant(1)) { return ff::make(F, num, den); }

std::vector<FFPlace> some_places(const FiniteField& F, Rng& rng) {
  std::vector<FFPlace> out{FFPlace::at_infinity()};
  for (int t = 0; t < 4; ++t) {
    std::vector<FiniteField::Elem> c(4 + rng() % 3);
    for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % F.order());
    c.back() = 1;
    for (const auto& [pi, mult] : fq::factor(F, FqPoly(c)).factors) out.push_back(FFPlace::finite(pi));
  }
  return out;
}

}  // namespace

TEST(FunctionField, DivisorExamples) {
  const FiniteField F3 = make_fq(3);
  const auto d = divisor(F3, rat(F3, T));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], (std::pair<FFPlace, long>{FFPlace::finite(T), 1}));
  EXPECT_EQ(d[1], (std::pair<FFPlace, long>{FFPlace::at_infinity(), -1}));
  const FqPoly t2p1({1, 0, 1});
  const auto d2 = divisor(F3, rat(F3, t2p1, T));
  ASSERT_EQ(d2.size(), 3u);
  EXPECT_EQ(d2[0], (std::pair<FFPlace, long>{FFPlace::finite(T), -1}));
  EXPECT_EQ(d2[1], (std::pair<FFPlace, long>{FFPlace::finite(t2p1), 1}));
  EXPECT_EQ(d2[2], (std::pair<FFPlace, long>{FFPlace::at_infinity(), -1}));
  EXPECT_EQ(ord(F3, rat(F3, t2p1, T), FFPlace::finite(FqPoly({1, 1}))), 0);
}

TEST(FunctionField, DivisorsHaveDegreeZero) {
  Rng rng(51);
  for (long q : {2L, 3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 50; ++t) {
      const FqRational f = ff::random_rational(F, rng, 5);
      long deg = 0;
      for (const auto& [v, n] : divisor(F, f)) deg += v.degree() * n;
      EXPECT_EQ(deg, 0) << ff::to_string(F, f);
    }
  }
}

TEST(FunctionField, TameExamples) {
  for (long q : {3L, 5L, 4L}) {
    const FiniteField F = make_fq(q);
    const FFPlace zero = FFPlace::finite(T);
    const FqPoly minus_one = FqPoly::constant(F.neg(F.one()));
    EXPECT_EQ(ff_tame_symbol(F, rat(F, T), rat(F, T), zero), minus_one);
    const FqPoly tm1 = fq::sub(F, T, one_poly());
    EXPECT_EQ(ff_tame_symbol(F, rat(F, T), rat(F, tm1), zero), minus_one);
    EXPECT_EQ(ff_tame_symbol(F, rat(F, tm1), rat(F, T), zero), minus_one);
  }
}

TEST(FunctionField, TameSymbolLaws) {
  Rng rng(52);
  for (long q : {2L, 3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    const FqPoly one = one_poly();
    for (int t = 0; t < 40; ++t) {
      const FqRational f1 = ff::random_rational(F, rng, 3), f2 = ff::random_rational(F, rng, 3);
      const FqRational g = ff::random_rational(F, rng, 3);
      for (const FFPlace& v : some_places(F, rng)) {
        const FqPoly a = ff_tame_symbol(F, ff::mul(F, f1, f2), g, v);
        EXPECT_EQ(a, kappa_mul(F, v, ff_tame_symbol(F, f1, g, v), ff_tame_symbol(F, f2, g, v)));
        EXPECT_EQ(kappa_mul(F, v, ff_tame_symbol(F, f1, g, v), ff_tame_symbol(F, g, f1, v)), one);
        const FqRational h = ff::sub(F, ff::constant(1), f1);
        if (!ff::is_zero(h)) {
          EXPECT_EQ(ff_tame_symbol(F, f1, h, v), one) << ff::to_string(F, f1) << " at " << ff::to_string(F, v);
        }
      }
    }
  }
}

TEST(FunctionField, ResidueFieldNormAndTrace) {
  Rng rng(53);
  for (long q : {2L, 3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    for (const FFPlace& v : some_places(F, rng)) {
      for (int t = 0; t < 10; ++t) {
        std::vector<FiniteField::Elem> c(v.degree());
        for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % F.order());
        const FqPoly a = kappa_reduce(F, v, FqPoly(c));
        EXPECT_EQ(kappa_norm(F, v, a), kappa_norm_frobenius(F, v, a));
        EXPECT_EQ(kappa_trace(F, v, a), kappa_trace_frobenius(F, v, a));
      }
    }
  }
  const FiniteField F3 = make_fq(3);
  const FFPlace v = FFPlace::finite(FqPoly({1, 0, 1}));
  // t in F_9 = F_3[t]/(t^2 + 1): t * (-t) = 1, t + (-t) = 0
  EXPECT_EQ(kappa_norm(F3, v, T), 1u);
  EXPECT_EQ(kappa_trace(F3, v, T), 0u);
  EXPECT_EQ(kappa_norm(F3, v, FqPoly({1, 1})), 2u);
}

TEST(FunctionField, WeilExamples) {
  const FiniteField F3 = make_fq(3);
  const FqPoly one = one_poly();
  const WeilReport r = weil_reciprocity_check(F3, rat(F3, T), ff::sub(F3, ff::constant(1), rat(F3, T)));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.product, 1u);
  for (const auto& e : r.table) EXPECT_EQ(e.symbol, one);

  const FqPoly t2p1({1, 0, 1});
  const WeilReport s = weil_reciprocity_check(F3, rat(F3, T), rat(F3, t2p1));
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.product, 1u);
  bool saw = false;
  for (const auto& e : s.table)
    if (e.place == FFPlace::finite(t2p1)) {
      saw = true;
      // f^1 g^0 = t, of norm t * t^3 = -t^2 = 1
      EXPECT_EQ(e.symbol, T);
      EXPECT_EQ(e.norm, 1u);
    }
  EXPECT_TRUE(saw);
}

TEST(FunctionField, WeilAndHilbertOnRandomPairs) {
  Rng rng(54);
  for (long q : {2L, 3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 125; ++t) {
      const FqRational f = ff::random_rational(F, rng, 4), g = ff::random_rational(F, rng, 4);
      const WeilReport w = weil_reciprocity_check(F, f, g);
      EXPECT_TRUE(w.ok) << ff::to_string(F, f) << " , " << ff::to_string(F, g);
      const FFHilbertReport h = ff_hilbert_check(F, f, g);
      EXPECT_TRUE(h.ok);
      EXPECT_EQ(h.product, w.product);
      ASSERT_EQ(h.table.size(), w.table.size());
      for (size_t i = 0; i < h.table.size(); ++i) {
        EXPECT_EQ(h.table[i].value, w.table[i].norm);
        EXPECT_TRUE(h.table[i].agrees);
        EXPECT_TRUE(h.table[i].prime_to_p);
        EXPECT_EQ(h.table[i].m_v, ipow(q, h.table[i].place.degree()) - 1);
        EXPECT_EQ(h.table[i].m_v % q, mpz_class(q - 1));
      }
    }
  }
}

TEST(FunctionField, HilbertExponentAtDegreeTwoPlace) {
  const FiniteField F3 = make_fq(3);
  const FqPoly t2p1({1, 0, 1});
  const FFHilbertReport h = ff_hilbert_check(F3, rat(F3, T), rat(F3, t2p1));
  bool saw = false;
  for (const auto& e : h.table)
    if (e.place == FFPlace::finite(t2p1)) {
      saw = true;
      EXPECT_EQ(e.m_v, 8);
      EXPECT_EQ(e.exponent, 4);
    }
  EXPECT_TRUE(saw);
  EXPECT_TRUE(h.ok);
}

TEST(FunctionField, ResidueExamples) {
  const FiniteField F5 = make_fq(5);
  const ResidueReport r = residue_theorem_check(F5, rat(F5, one_poly(), T), rat(F5, T));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(residue_at(F5, rat(F5, one_poly(), T), FFPlace::finite(T)), FqPoly::constant(1));
  EXPECT_EQ(residue_at(F5, rat(F5, one_poly(), T), FFPlace::at_infinity()), FqPoly::constant(4));

  const FqRational h = rat(F5, one_poly(), FqPoly({0, 4, 1}));  // 1 / (t^2 - t)
  EXPECT_EQ(residue_at(F5, h, FFPlace::finite(T)), FqPoly::constant(4));
  EXPECT_EQ(residue_at(F5, h, FFPlace::finite(FqPoly({4, 1}))), FqPoly::constant(1));
  EXPECT_TRUE(residue_at(F5, h, FFPlace::at_infinity()).is_zero());
  const ResidueReport s = residue_theorem_check(F5, h, rat(F5, T));
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.sum, 0u);
  EXPECT_FALSE(s.constant_differential);

  // d(t^5) = 0
  const ResidueReport c = residue_theorem_check(F5, rat(F5, T), rat(F5, FqPoly::monomial(1, 5)));
  EXPECT_TRUE(c.constant_differential);
  EXPECT_TRUE(c.ok);
  EXPECT_TRUE(c.table.empty());
}

TEST(FunctionField, ResidueTheoremOnRandomForms) {
  Rng rng(55);
  for (long q : {2L, 3L, 5L, 4L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 125; ++t) {
      const FqRational f = ff::random_rational(F, rng, 4), g = ff::random_rational(F, rng, 3);
      const ResidueReport r = residue_theorem_check(F, f, g);
      EXPECT_TRUE(r.ok) << ff::to_string(F, f) << " d(" << ff::to_string(F, g) << ")";
      if (r.constant_differential) continue;
      EXPECT_EQ(r.sum, 0u);
      for (const auto& e : r.table) EXPECT_EQ(e.trace, e.trace_frobenius);
    }
  }
}

TEST(FunctionField, ResiduesAreLinearAndVanishOnExactForms) {
  Rng rng(56);
  for (long q : {3L, 4L, 5L}) {
    const FiniteField F = make_fq(q);
    for (int t = 0; t < 30; ++t) {
      const FqRational h1 = ff::random_rational(F, rng, 4), h2 = ff::random_rational(F, rng, 4);
      const FiniteField::Elem a = static_cast<FiniteField::Elem>(rng() % F.order());
      const FqRational comb = ff::add(F, ff::scale(F, h1, a), h2);
      const FqRational g = ff::random_rational(F, rng, 4);
      std::vector<FFPlace> places = some_places(F, rng);
      for (const auto& [v, n] : divisor(F, ff::mul(F, h1, h2))) places.push_back(v);
      for (const auto& [v, n] : divisor(F, g)) places.push_back(v);
      for (const FFPlace& v : places) {
        const FqPoly lhs = residue_at(F, comb, v);
        const FqPoly rhs = fq::add(F, fq::scale(F, residue_at(F, h1, v), a), residue_at(F, h2, v));
        EXPECT_EQ(lhs, rhs) << ff::to_string(F, v);
        EXPECT_TRUE(residue_at(F, ff::derivative(F, g), v).is_zero()) << ff::to_string(F, g) << " at " << ff::to_string(F, v);
      }
    }
  }
}
