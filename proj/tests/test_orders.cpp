#include <set>

#include <gtest/gtest.h>

#include "recip/orders.hpp"
#include "recip/presets.hpp"
#include "recip/symbols.hpp"
#include "test_util.hpp"

using namespace recip;
using recip::testing::code_of;

namespace {

const std::vector<std::string> kRamified = {"qp-zeta:3", "root:3:2", "root:3:3", "root:5:2", "root:5:3", "qp-zeta:5"};

}  // namespace

TEST(Orders, MembershipExamples) {
  const FieldPtr F = make_root(3, 2, 10);
  const OrderRm R2(*F, 2);
  EXPECT_FALSE(R2.contains(F->pi()));
  EXPECT_TRUE(R2.contains(F->pi_power(3)));
  EXPECT_TRUE(R2.contains(F->from_int(7)));
  EXPECT_TRUE(R2.contains(F->omega_power(1)));
  const OrderRm R1(*F, 1);
  EXPECT_TRUE(R1.in_maximal_ideal(F->pi()));
  EXPECT_TRUE(R2.in_maximal_ideal(F->from_int(3)));
  EXPECT_FALSE(R2.in_maximal_ideal(F->omega_power(1)));
  EXPECT_TRUE(R2.is_unit(F->one() + F->from_int(3)));
  EXPECT_FALSE(R2.is_unit(F->pi()));
  EXPECT_FALSE(R1.is_unit(F->pi()));
  EXPECT_TRUE(OrderRm(*F, 0).contains(F->pi()));
  EXPECT_EQ(code_of([&] { OrderRm(*F, -1); }), ErrorCode::BadInput);
}

TEST(Orders, MembershipIsMonotone) {
  Rng rng(21);
  for (const auto& preset : kRamified) {
    const FieldPtr F = make_preset(preset, 8);
    for (int t = 0; t < 50; ++t) {
      const FElem x = random_integral(*F, rng);
      bool prev = true;
      for (long m = 0; m <= 2 * F->e() + 1; ++m) {
        const bool c = OrderRm(*F, m).contains(x);
        EXPECT_FALSE(c && !prev) << preset << " m=" << m;
        prev = c;
      }
    }
  }
}

TEST(Orders, RingClosureAndLocalDichotomy) {
  Rng rng(22);
  for (const auto& preset : kRamified) {
    const FieldPtr F = make_preset(preset, 8);
    for (long m = 0; m <= 2 * F->e(); ++m) {
      const OrderRm R(*F, m);
      for (int t = 0; t < 20; ++t) {
        const FElem x = R.random_element(rng), y = R.random_element(rng);
        EXPECT_TRUE(R.contains(x));
        EXPECT_TRUE(R.contains(x + y));
        EXPECT_TRUE(R.contains(x * y));
        EXPECT_NE(R.is_unit(x), R.in_maximal_ideal(x)) << preset << " m=" << m;
      }
    }
  }
}

TEST(Orders, IdealAgreesWithPowerOfMaximalIdeal) {
  Rng rng(23);
  for (const auto& preset : kRamified) {
    const FieldPtr F = make_preset(preset, 8);
    for (long m = 1; m <= F->e(); ++m) {
      const OrderRm R(*F, m);
      for (int t = 0; t < 500 / F->e(); ++t) {
        const FElem x = random_integral(*F, rng) * F->pi_power(static_cast<long>(rng() % (m + 1)));
        const Valuation v = valuation(x);
        EXPECT_EQ(R.in_maximal_ideal(x), !v || *v >= m) << preset << " m=" << m;
      }
    }
  }
}

TEST(Orders, ResidueFieldReachedFromBase) {
  for (const auto& preset : std::vector<std::string>{"root:3:2", "unr:3:2", "qp-zeta:5"}) {
    const FieldPtr F = make_preset(preset, 8);
    const OrderRm R(*F, 3);
    std::set<FiniteField::Elem> hit;
    for (FiniteField::Elem c = 0; c < F->q(); ++c) {
      const FElem x = F->from_o0(F->base().lift(c));
      EXPECT_TRUE(R.contains(x));
      hit.insert(leading_digit(x, 0));
    }
    EXPECT_EQ(static_cast<long>(hit.size()), F->q());
  }
}

TEST(Orders, UnitsFactorAndInvertInside) {
  Rng rng(24);
  for (const auto& preset : kRamified) {
    const FieldPtr F = make_preset(preset, 8);
    for (long m = 1; m <= 2 * F->e(); ++m) {
      const OrderRm R(*F, m);
      for (int t = 0; t < 15; ++t) {
        const FElem x = R.random_element(rng);
        if (!R.is_unit(x)) continue;
        const UnitDecomposition ud = unit_decompose(x);
        EXPECT_EQ(ud.n, 0);
        EXPECT_TRUE(R.contains(ud.u));
        EXPECT_TRUE(R.in_maximal_ideal(ud.u - F->one()));
        EXPECT_EQ(F->omega_power(ud.i) * ud.u, x);
        EXPECT_TRUE(R.contains(inverse(x))) << preset << " m=" << m;
      }
    }
  }
}

TEST(Orders, IndexExamples) {
  const FieldPtr A = make_root(3, 2, 8);
  EXPECT_EQ(index_in_of(*A, 2).value, 3);
  EXPECT_EQ(index_in_of(*A, 0).value, 1);
  const FieldPtr Z = make_qp_zeta(3, 8);
  EXPECT_EQ(index_in_of(*Z, 1).value, 1);
  EXPECT_EQ(index_brute_force(*Z, 1), 1);
  EXPECT_EQ(index_brute_force(*A, 2), 3);
}

TEST(Orders, IndexMatchesBruteForce) {
  for (const auto& preset : std::vector<std::string>{"qp-zeta:3", "root:3:2", "root:3:3", "root:5:2", "root:5:3", "unr:3:2"}) {
    const FieldPtr F = make_preset(preset, 8);
    for (long m = 0; m <= 2 * F->e(); ++m) EXPECT_EQ(index_in_of(*F, m).value, index_brute_force(*F, m)) << preset << " m=" << m;
  }
}

TEST(Orders, BoundExamples) {
  EXPECT_EQ(m0_bound(*make_qp(3, 8)), 0);
  EXPECT_EQ(m0_bound(*make_qp(7, 8)), 0);
  EXPECT_EQ(m0_bound(*make_qp_zeta(3, 8)), 4);
  EXPECT_EQ(m0_bound(*make_qp_zeta(5, 8)), 6);
  EXPECT_EQ(m0_bound(*make_root(3, 3, 8)), 1);
  EXPECT_EQ(code_of([] { m0_bound(*make_qp(2, 8)); }), ErrorCode::PIsTwo);
}

TEST(Orders, EstimateM0) {
  const FieldPtr Q = make_qp(5, 16);
  const auto rq = estimate_m0(*Q, default_m0_oracle(*Q), 500);
  EXPECT_EQ(rq.estimated_m0, 0);

  const FieldPtr C = make_root(3, 3, 16);
  const auto rc = estimate_m0(*C, default_m0_oracle(*C), 500);
  ASSERT_TRUE(rc.estimated_m0.has_value());
  EXPECT_LE(*rc.estimated_m0, 1);

  const FieldPtr Z = make_qp_zeta(3, 32);
  const auto rz = estimate_m0(*Z, default_m0_oracle(*Z), 500);
  ASSERT_TRUE(rz.estimated_m0.has_value());
  EXPECT_EQ(*rz.estimated_m0, 2);
  EXPECT_LE(*rz.estimated_m0, rz.bound);
  EXPECT_TRUE(rz.monotone);
  long witnesses = 0;
  for (const auto& c : rz.certificates)
    if (c.kind == "witness") {
      EXPECT_LT(c.m, *rz.estimated_m0);
      ++witnesses;
    }
  EXPECT_EQ(witnesses, 2);

  EXPECT_EQ(code_of([&] { estimate_m0(*Z, default_m0_oracle(*Z), 3); }), ErrorCode::BudgetExceeded);
  // Q_3(zeta_9): Phi_9(T + 1) = T^6 + 6T^5 + 15T^4 + 21T^3 + 18T^2 + 9T + 3
  const LocalField Z9(3, 8, default_modulus(3, 1), {{3}, {9}, {18}, {21}, {15}, {6}, {1}});
  EXPECT_EQ(Z9.k(), 2);
  EXPECT_EQ(code_of([&] { default_m0_oracle(Z9); }), ErrorCode::OracleUnavailable);
}
