#include <gtest/gtest.h>

#include "recip/local_field.hpp"
#include "recip/presets.hpp"
#include "test_util.hpp"

using namespace recip;
using recip::testing::code_of;

namespace {

const std::vector<std::string> kPresets = {"qp:3", "qp:5", "qp-zeta:3", "qp-zeta:5", "root:3:2", "root:3:3", "unr:3:2", "root:5:2"};

}  // namespace

TEST(LocalField, PresetInvariants) {
  struct Row {
    std::string preset;
    int e, d, k;
  };
  for (const Row& r : std::vector<Row>{{"qp:3", 1, 1, 0},
                                       {"qp:2", 1, 1, 1},
                                       {"qp-zeta:3", 2, 1, 1},
                                       {"qp-zeta:5", 4, 1, 1},
                                       {"root:3:3", 3, 1, 0},
                                       {"root:3:2", 2, 1, 0},
                                       {"root:5:2", 2, 1, 0},
                                       {"unr:3:2", 1, 2, 0}}) {
    const FieldPtr F = make_preset(r.preset, 16);
    EXPECT_EQ(F->e(), r.e) << r.preset;
    EXPECT_EQ(F->d(), r.d) << r.preset;
    EXPECT_EQ(F->k(), r.k) << r.preset;
    EXPECT_EQ(F->M(), static_cast<long>(r.e) * 16);
    if (F->k() >= 1) {
      const FElem z = *F->zeta_p();
      EXPECT_EQ(pow(z, F->p()), F->one()) << r.preset;
      EXPECT_FALSE(z == F->one()) << r.preset;
    }
  }
}

TEST(LocalField, ValuationExamples) {
  const FieldPtr F = make_root(3, 3, 10);
  EXPECT_EQ(valuation(F->pi()), 1);
  EXPECT_EQ(valuation(F->from_int(3)), 3);
  EXPECT_EQ(valuation(F->from_int(18)), 6);
  EXPECT_EQ(valuation(F->pi_power(2) + F->from_int(9)), 2);
  EXPECT_FALSE(valuation(F->zero()).has_value());
  const FieldPtr Z = make_qp_zeta(5, 10);
  EXPECT_EQ(valuation(*Z->zeta_p() - Z->one()), 1);
  EXPECT_EQ(valuation(Z->from_int(5)), 4);
}

TEST(LocalField, RejectsNonEisenstein) {
  const std::vector<long> g = default_modulus(3, 1);
  using Poly = std::vector<std::vector<mpz_class>>;
  EXPECT_EQ(code_of([&] { LocalField(3, 8, g, Poly{{9}, {1}}); }), ErrorCode::NotEisenstein);
  EXPECT_EQ(code_of([&] { LocalField(3, 8, g, Poly{{3}, {1}, {1}}); }), ErrorCode::NotEisenstein);
  EXPECT_EQ(code_of([&] { LocalField(3, 8, g, Poly{{3}, {0}, {2}}); }), ErrorCode::NotEisenstein);
  EXPECT_NO_THROW(LocalField(3, 8, g, Poly{{3}, {6}, {1}}));
}

TEST(LocalField, UnitDecompositionRoundTrip) {
  Rng rng(11);
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 12);
    for (int t = 0; t < 40; ++t) {
      const long n = static_cast<long>(rng() % 5);
      const FElem x = random_unit(*F, rng) * F->pi_power(n);
      const UnitDecomposition ud = unit_decompose(x);
      EXPECT_EQ(ud.n, n);
      const Valuation lvl = unit_level(ud.u);
      EXPECT_TRUE(!lvl || *lvl >= 1);
      EXPECT_EQ(F->pi_power(ud.n) * F->omega_power(ud.i) * ud.u, x) << preset;
    }
  }
}

TEST(LocalField, UnitLevel) {
  const FieldPtr F = make_qp_zeta(3, 10);
  EXPECT_EQ(unit_level(F->one() + F->pi_power(3)), 3);
  EXPECT_FALSE(unit_level(F->one()).has_value());
  EXPECT_EQ(code_of([&] { unit_level(F->from_int(2)); }), ErrorCode::NotPrincipalUnit);
}

TEST(LocalField, InverseAgreesWithGeometricSeries) {
  Rng rng(12);
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 10);
    for (int t = 0; t < 20; ++t) {
      const FElem x = random_unit(*F, rng);
      const FElem y = inverse(x);
      EXPECT_EQ(x * y, F->one()) << preset;
      EXPECT_EQ(inverse_geometric(x), y) << preset;
    }
    EXPECT_EQ(code_of([&] { inverse(F->pi()); }), ErrorCode::NotAUnit);
  }
}

TEST(LocalField, ZpExpExample) {
  const FieldPtr F = make_qp(5, 3);
  EXPECT_EQ(zp_exp(F->from_int(6), 5), F->from_int(26));
  EXPECT_EQ(code_of([&] { zp_exp(F->from_int(2), 3); }), ErrorCode::NotInIdeal);
}

TEST(LocalField, ZpExpModuleLaws) {
  Rng rng(13);
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 10);
    const mpz_class pN = F->base().modulus();
    for (int t = 0; t < 15; ++t) {
      const FElem u = random_principal_unit(*F, rng, 1), v = random_principal_unit(*F, rng, 1);
      const mpz_class a = random_below(rng, pN), b = random_below(rng, pN);
      EXPECT_EQ(zp_exp(u, a + b), zp_exp(u, a) * zp_exp(u, b)) << preset;
      EXPECT_EQ(zp_exp(u * v, a), zp_exp(u, a) * zp_exp(v, a)) << preset;
      EXPECT_EQ(zp_exp(zp_exp(u, a), b), zp_exp(u, a * b)) << preset;
      const long n = static_cast<long>(rng() % 50);
      EXPECT_EQ(zp_exp(u, n), pow(u, n)) << preset;
    }
  }
}

TEST(LocalField, HasseForwardBounds) {
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 48);
    for (long t = 1; t <= 4; ++t) {
      const HasseReport r = hasse_forward(*F, t);
      EXPECT_TRUE(r.ok) << preset << " t=" << t;
      EXPECT_EQ(r.bound, F->at_most_e1(t) ? F->p() * t : t + F->e());
    }
  }
}

TEST(LocalField, PthRootInFiltration) {
  Rng rng(14);
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 16);
    long t = 1;
    while (F->at_most_e1(t)) ++t;
    for (long tt = t; tt < t + 3; ++tt) {
      for (int i = 0; i < 10; ++i) {
        const FElem w = random_principal_unit(*F, rng, tt + F->e());
        const FElem u = pth_root_in_filtration(w, tt);
        EXPECT_EQ(pow(u, F->p()), w) << preset;
        const Valuation lu = unit_level(u);
        EXPECT_TRUE(!lu || *lu >= tt) << preset;
      }
    }
  }
  const FieldPtr Z = make_qp_zeta(3, 16);
  EXPECT_EQ(code_of([&] { pth_root_in_filtration(Z->one() + Z->pi_power(3), 1); }), ErrorCode::BelowThreshold);
  EXPECT_EQ(code_of([&] { pth_root_in_filtration(Z->one() + Z->pi_power(3), 2); }), ErrorCode::NotInIdeal);
}

TEST(LocalField, NormExamples) {
  EXPECT_EQ(norm_to_base(make_qp_zeta(5, 8)->pi()).value, 5);
  EXPECT_EQ(norm_to_base(make_qp_zeta(3, 8)->pi()).value, 3);
  EXPECT_EQ(norm_to_base(make_root(3, 3, 8)->pi()).value, 3);
  // N(pi) = -3 for pi^2 = 3
  EXPECT_EQ(norm_to_base(make_root(3, 2, 8)->pi()).value, mod(mpz_class(-3), ipow(3, 8)));
  const FieldPtr U = make_unramified(3, 2, 8);
  EXPECT_EQ(norm_to_base(U->from_int(5)).value, 25);
}

TEST(LocalField, NormIsMultiplicative) {
  Rng rng(15);
  for (const auto& preset : kPresets) {
    const FieldPtr F = make_preset(preset, 12);
    const mpz_class pN = F->base().modulus();
    for (int t = 0; t < 20; ++t) {
      const FElem x = random_unit(*F, rng), y = random_unit(*F, rng);
      EXPECT_EQ(norm_to_base(x * y).value, mod(norm_to_base(x).value * norm_to_base(y).value, pN)) << preset;
    }
  }
}
