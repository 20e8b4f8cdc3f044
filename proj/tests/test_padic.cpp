#include <gtest/gtest.h>

#include "recip/error.hpp"
#include "recip/fq_poly.hpp"
#include "recip/integer.hpp"
#include "recip/padic.hpp"
#include "test_util.hpp"

using namespace recip;
using recip::testing::code_of;

namespace {

O0Elem random_o0(const PadicCtx& ctx, Rng& rng) {
  std::vector<mpz_class> c(ctx.degree());
  for (auto& x : c) x = random_below(rng, ctx.modulus());
  return ctx.from_coeffs(c);
}

}  // namespace

TEST(Integer, Basics) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_EQ(inverse_mod(2, 25), 13);
  EXPECT_EQ(legendre(2, 5), -1);
  EXPECT_EQ(legendre(4, 5), 1);
  EXPECT_EQ(legendre(10, 5), 0);
  EXPECT_EQ(val_p(mpz_class(72), 2), 3);
  const auto f = factor(mpz_class(-360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<long, int>{2, 3}));
  EXPECT_EQ(f[2], (std::pair<long, int>{5, 1}));
}

TEST(FiniteField, ConwayFieldsArePrimitive) {
  for (auto [p, d] : std::vector<std::pair<long, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
    const FiniteField F = FiniteField::conway(p, d);
    EXPECT_EQ(F.order(), ipow(p, d).get_si());
    EXPECT_TRUE(F.variable_is_primitive());
    for (long k = 0; k < F.order() - 1; ++k) EXPECT_EQ(F.log(F.exp(k)), k);
  }
}

TEST(FiniteField, FrobeniusRoot) {
  const FiniteField F = FiniteField::conway(3, 2);
  for (FiniteField::Elem a = 0; a < 9; ++a) EXPECT_EQ(F.pow(F.frobenius_root(a), 3), a);
}

TEST(FqPoly, FactorMatchesTrialDivision) {
  const FiniteField F = FiniteField::conway(2, 2);
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<FiniteField::Elem> c(1 + rng() % 7);
    for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % 4);
    c.back() = 1 + static_cast<FiniteField::Elem>(rng() % 3);
    const FqPoly f(c);
    const auto a = fq::factor(F, f), b = fq::factor_trial_division(F, f);
    EXPECT_EQ(a.unit, b.unit);
    EXPECT_EQ(a.factors, b.factors);
  }
}

TEST(FqPoly, IrreducibilityOfKnownPolynomials) {
  const FiniteField F3 = FiniteField::prime(3);
  EXPECT_TRUE(fq::is_irreducible(F3, FqPoly({1, 0, 1})));   // t^2 + 1
  EXPECT_FALSE(fq::is_irreducible(F3, FqPoly({2, 0, 1})));  // t^2 - 1
  EXPECT_THROW(PadicCtx(3, 8, {2, 0, 1}), Error);
}

TEST(Padic, ValuationExamples) {
  const PadicCtx ctx = PadicCtx::conway(3, 2, 8);
  EXPECT_EQ(val_p(ctx.from_int(3)), 1);
  EXPECT_FALSE(val_p(ctx.zero()).has_value());
  const O0Elem x = ctx.from_int(3) * ctx.omega() + ctx.from_int(9);
  EXPECT_EQ(val_p(x), 1);
}

TEST(Padic, InvertExamples) {
  const PadicCtx ctx(5, 2, {3, 1});
  EXPECT_EQ(invert(ctx.one()), ctx.one());
  EXPECT_EQ(invert(ctx.from_int(2)), ctx.from_int(13));
  EXPECT_EQ(invert_geometric(ctx.from_int(2)), ctx.from_int(13));
  EXPECT_EQ(code_of([&] { invert(ctx.from_int(5)); }), ErrorCode::NotAUnit);
}

TEST(Padic, InvertIsTwoSidedAndInvolutive) {
  const PadicCtx ctx = PadicCtx::conway(5, 2, 16);
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    O0Elem x = random_o0(ctx, rng);
    if (val_p(x) != 0) continue;
    const O0Elem y = invert(x);
    EXPECT_EQ(x * y, ctx.one());
    EXPECT_EQ(y * x, ctx.one());
    EXPECT_EQ(invert(y), x);
    EXPECT_EQ(invert_geometric(x), y);
  }
}

TEST(Padic, TeichmullerExamples) {
  const PadicCtx ctx(5, 2, {3, 1});
  EXPECT_EQ(teichmuller(ctx, 1), ctx.one());
  EXPECT_EQ(teichmuller(ctx, 2), ctx.from_int(7));
  EXPECT_EQ(code_of([&] { teichmuller(ctx, 0); }), ErrorCode::ZeroInput);
}

TEST(Padic, TeichmullerIsMultiplicativeExhaustively) {
  for (auto [p, d] : std::vector<std::pair<long, int>>{{3, 2}, {5, 2}, {7, 2}, {7, 1}}) {
    const PadicCtx ctx = PadicCtx::conway(p, d, 10);
    const FiniteField& k = ctx.residue_field();
    std::vector<O0Elem> lifts;
    for (FiniteField::Elem c = 1; c < k.order(); ++c) {
      lifts.push_back(teichmuller(ctx, c));
      EXPECT_EQ(pow(lifts.back(), k.order() - 1), ctx.one());
      EXPECT_EQ(ctx.residue(lifts.back()), c);
    }
    for (FiniteField::Elem a = 1; a < k.order(); ++a)
      for (FiniteField::Elem b = 1; b < k.order(); ++b) EXPECT_EQ(lifts[a - 1] * lifts[b - 1], lifts[k.mul(a, b) - 1]);
  }
}

TEST(Padic, HenselExamples) {
  const PadicCtx ctx(7, 2, {4, 1});
  const O0Elem a = ctx.from_int(11);
  const std::vector<O0Elem> lin{-a, ctx.one()};
  EXPECT_EQ(hensel_root(lin, ctx.from_int(4)), a);
  const std::vector<O0Elem> quad{ctx.from_int(-2), ctx.zero(), ctx.one()};
  EXPECT_EQ(hensel_root(quad, ctx.from_int(3)), ctx.from_int(10));
  const PadicCtx c5(5, 8, {3, 1});
  const std::vector<O0Elem> bad{c5.from_int(-3), c5.zero(), c5.one()};
  EXPECT_EQ(code_of([&] { hensel_root(bad, c5.one()); }), ErrorCode::HenselHypothesisFailed);
}

TEST(Padic, BinomialExamples) {
  const PadicCtx ctx(3, 3, {1, 1});
  EXPECT_EQ(zp_binomial(ctx, 17, 0), 1);
  EXPECT_EQ(zp_binomial(ctx, -1, 2), 1);
  EXPECT_EQ(zp_binomial(ctx, 3, 2), 3);
  EXPECT_EQ(code_of([&] { zp_binomial(ctx, 5, 9); }), ErrorCode::PrecisionLoss);
}

TEST(Padic, RingAxiomsAndValuation) {
  const PadicCtx ctx = PadicCtx::conway(3, 3, 12);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const O0Elem a = random_o0(ctx, rng), b = random_o0(ctx, rng), c = random_o0(ctx, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const O0Elem pa = a * ctx.from_int(ipow(3, rng() % 4)), pb = b * ctx.from_int(ipow(3, rng() % 4));
    const Valuation va = val_p(pa), vb = val_p(pb), vab = val_p(pa * pb);
    if (va && vb && vab) {
      EXPECT_EQ(*vab, *va + *vb);
    }
  }
}
