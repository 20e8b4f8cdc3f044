#include <algorithm>

#include <gtest/gtest.h>

#include "recip/global_recip.hpp"
#include "recip/integer.hpp"
#include "recip/orders.hpp"
#include "recip/presets.hpp"
#include "test_util.hpp"

using namespace recip;
using recip::testing::code_of;

namespace {

int entry_at(const MooreReport& r, const Place& v) {
  for (const auto& e : r.table)
    if (e.place == v) return e.value;
  ADD_FAILURE() << "place " << to_string(v) << " missing";
  return 0;
}

long random_nonzero(Rng& rng, long bound) {
  for (;;) {
    const long x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    if (x != 0) return x;
  }
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  const size_t n = A.size();
  IntMatrix C(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) C[i][j] += A[i][k] * B[k][j];
  return C;
}

}  // namespace

TEST(Global, MuCounts) {
  EXPECT_EQ(mu_counts_q(Place::finite(7)), 6);
  EXPECT_EQ(mu_counts_q(Place::finite(3)), 2);
  EXPECT_EQ(mu_counts_q(Place::finite(2)), 2);
  EXPECT_EQ(mu_counts_q(Place::real()), 2);
  EXPECT_EQ(code_of([] { mu_counts_q(Place::complex()); }), ErrorCode::ComplexPlace);
}

TEST(Global, MooreMinusOne) {
  const MooreReport r = moore_product_q(-1, -1);
  ASSERT_EQ(r.table.size(), 2u);
  EXPECT_EQ(r.table[0].place, Place::real());
  EXPECT_EQ(r.table[0].value, -1);
  EXPECT_EQ(r.table[1].place, Place::finite(2));
  EXPECT_EQ(r.table[1].value, -1);
  EXPECT_EQ(r.product, 1);
  EXPECT_TRUE(r.consistent);
}

TEST(Global, MooreLegendreEntries) {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{13, 17}, {3, 5}, {7, 11}, {5, 13}}) {
    const MooreReport r = moore_product_q(p, q);
    EXPECT_EQ(r.product, 1);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(entry_at(r, Place::finite(p)), legendre(q, p));
    EXPECT_EQ(entry_at(r, Place::finite(q)), legendre(p, q));
    EXPECT_EQ(entry_at(r, Place::real()), 1);
  }
  const MooreReport r = moore_product_q(3, 5);
  EXPECT_EQ(entry_at(r, Place::finite(3)), -1);
  EXPECT_EQ(entry_at(r, Place::finite(5)), -1);
  EXPECT_EQ(entry_at(r, Place::finite(2)), 1);
  const MooreReport r711 = moore_product_q(7, 11);
  EXPECT_EQ(entry_at(r711, Place::finite(2)), -1);
}

TEST(Global, MooreProductOnRandomPairs) {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const long a = random_nonzero(rng, 10000), b = random_nonzero(rng, 10000);
    const MooreReport r = moore_product_q(a, b);
    EXPECT_EQ(r.product, 1) << a << " " << b;
    EXPECT_TRUE(r.consistent) << a << " " << b;
  }
  EXPECT_EQ(moore_product_q(mpq_class(2, 3), mpq_class(-5, 7)).product, 1);
  EXPECT_EQ(moore_product_q(mpq_class(-9, 10), mpq_class(14, 45)).product, 1);
  EXPECT_EQ(code_of([] { moore_product_q(0, 3); }), ErrorCode::ZeroInput);
}

TEST(Global, MooreIsBimultiplicative) {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const long a1 = random_nonzero(rng, 300), a2 = random_nonzero(rng, 300), b = random_nonzero(rng, 300);
    std::vector<Place> places = moore_support(a1 * a2, b);
    for (const Place& v : moore_support(a1, b)) places.push_back(v);
    for (const Place& v : moore_support(a2, b)) places.push_back(v);
    for (const Place& v : places)
      EXPECT_EQ(moore_local_factor(a1 * a2, b, v), moore_local_factor(a1, b, v) * moore_local_factor(a2, b, v))
          << a1 << " " << a2 << " " << b << " at " << to_string(v);
  }
}

TEST(Global, FactorsOutsideSupportAreTrivial) {
  Rng rng(43);
  const std::vector<long> primes = primes_below(200);
  for (int t = 0; t < 50; ++t) {
    long a, b, l;
    do {
      a = random_nonzero(rng, 1000);
      b = random_nonzero(rng, 1000);
      l = primes[rng() % primes.size()];
    } while (l == 2 || a % l == 0 || b % l == 0);
    EXPECT_EQ(moore_local_factor(a, b, Place::finite(l)), 1);
    const auto support = moore_support(a, b);
    EXPECT_EQ(std::count(support.begin(), support.end(), Place::finite(l)), 0);
  }
}

TEST(Global, ReciprocityViews) {
  const ReciprocityView v35 = quadratic_reciprocity_view(3, 5);
  EXPECT_EQ(v35.legendre_pq, -1);
  EXPECT_EQ(v35.legendre_qp, -1);
  EXPECT_EQ(v35.predicted, 1);
  EXPECT_TRUE(v35.holds);
  const ReciprocityView v513 = quadratic_reciprocity_view(5, 13);
  EXPECT_EQ(v513.legendre_pq * v513.legendre_qp, 1);
  EXPECT_EQ(v513.predicted, 1);
  EXPECT_TRUE(v513.holds);
  const ReciprocityView v37 = quadratic_reciprocity_view(3, 7);
  EXPECT_EQ(v37.predicted, -1);
  EXPECT_EQ(v37.factor_at_2, -1);
  for (long p : primes_below(100))
    for (long q : primes_below(100)) {
      if (p == 2 || q == 2 || p == q) continue;
      const ReciprocityView v = quadratic_reciprocity_view(p, q);
      EXPECT_TRUE(v.holds) << p << " " << q;
      EXPECT_EQ(v.legendre_pq * v.legendre_qp, v.predicted);
    }
  EXPECT_EQ(code_of([] { quadratic_reciprocity_view(3, 3); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { quadratic_reciprocity_view(2, 5); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { quadratic_reciprocity_view(9, 5); }), ErrorCode::BadInput);
}

TEST(Hnf, ShapeCoordinatesAndDeterminant) {
  const IntMatrix A{{2, 3, 1}, {4, 1, 5}, {0, 6, 7}};
  const IntMatrix H = column_hnf(A);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_GT(H[i][i], 0);
    for (size_t j = 0; j < i; ++j) EXPECT_EQ(H[i][j], 0);
    for (size_t j = i + 1; j < 3; ++j) {
      EXPECT_GE(H[i][j], 0);
      EXPECT_LT(H[i][j], H[i][i]);
    }
  }
  // det A = 2(7 - 30) - 3(28 - 0) + 1(24 - 0) = -106
  EXPECT_EQ(determinant_triangular(H), 106);
  for (size_t c = 0; c < 3; ++c) {
    std::vector<mpz_class> col{A[0][c], A[1][c], A[2][c]};
    const auto x = lattice_coords(H, col);
    ASSERT_TRUE(x.has_value());
    for (size_t r = 0; r < 3; ++r) {
      mpz_class s = 0;
      for (size_t k = 0; k < 3; ++k) s += H[r][k] * (*x)[k];
      EXPECT_EQ(s, col[r]);
    }
  }
  EXPECT_FALSE(lattice_coords(column_hnf({{2, 0}, {0, 2}}), {1, 0}).has_value());
}

TEST(Hnf, InvariantUnderUnimodularTransforms) {
  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    const size_t n = 2 + rng() % 3;
    IntMatrix A(n, std::vector<mpz_class>(n));
    for (bool singular = true; singular;) {
      for (auto& row : A)
        for (auto& x : row) x = static_cast<long>(rng() % 21) - 10;
      try {
        column_hnf(A);
        singular = false;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Degenerate);
      }
    }
    IntMatrix U(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;
    for (int s = 0; s < 6; ++s) {
      const size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      IntMatrix E(n, std::vector<mpz_class>(n, 0));
      for (size_t k = 0; k < n; ++k) E[k][k] = 1;
      E[i][j] = static_cast<long>(rng() % 7) - 3;
      U = mat_mul(U, E);
    }
    std::swap(U[0], U[n - 1]);
    EXPECT_EQ(column_hnf(mat_mul(A, U)), column_hnf(A));
  }
}

TEST(Global, CyclotomicMultiplication) {
  // zeta * zeta = zeta^2 = -1 - zeta in Z[zeta_3]
  EXPECT_EQ(cyclotomic_mul(3, {0, 1}, {0, 1}), (std::vector<mpz_class>{-1, -1}));
  // zeta * zeta^3 = zeta^4 = -(1 + zeta + zeta^2 + zeta^3) in Z[zeta_5]
  EXPECT_EQ(cyclotomic_mul(5, {0, 1, 0, 0}, {0, 0, 0, 1}), (std::vector<mpz_class>{-1, -1, -1, -1}));
}

TEST(Global, LatticeExamples) {
  const GlobalOrderLattice L0 = global_optimal_lattice(3, 0);
  EXPECT_EQ(L0.index, 1);
  EXPECT_EQ(L0.basis, (IntMatrix{{1, 0}, {0, 1}}));
  const GlobalOrderLattice L2 = global_optimal_lattice(3, 2);
  EXPECT_EQ(L2.index, 3);
  EXPECT_EQ(L2.index, index_in_of(*make_qp_zeta(3, 8), 2).value);
  EXPECT_EQ(L2.index, lattice_index_brute_force(3, 2));
  EXPECT_TRUE(lattice_contains_one(L2));
  EXPECT_TRUE(lattice_closed(L2));
  EXPECT_FALSE(lattice_contains(L2, {0, 1}));
  EXPECT_TRUE(lattice_contains(L2, {1, 3}));
  EXPECT_EQ(code_of([] { global_optimal_lattice(11, 2); }), ErrorCode::UnsupportedField);
  EXPECT_EQ(code_of([] { global_optimal_lattice(2, 2); }), ErrorCode::UnsupportedField);
}

TEST(Global, LatticeIndexMatchesLocalIndex) {
  for (long p : {3L, 5L, 7L}) {
    const FieldPtr F = make_qp_zeta(p, 8);
    for (long m = 0; m <= 2 * (p - 1); ++m) {
      const GlobalOrderLattice L = global_optimal_lattice(p, m);
      EXPECT_EQ(L.index, index_in_of(*F, m).value) << p << " " << m;
      EXPECT_TRUE(lattice_contains_one(L));
      EXPECT_TRUE(lattice_closed(L)) << p << " " << m;
      // p^K Z[zeta_p] lies in the lattice
      const long K = (m + p - 2) / (p - 1);
      std::vector<mpz_class> v(p - 1, 0);
      for (long i = 0; i < p - 1; ++i) {
        v.assign(p - 1, 0);
        v[i] = ipow(p, K);
        EXPECT_TRUE(lattice_contains(L, v));
      }
    }
  }
  for (long m = 0; m <= 6; ++m) EXPECT_EQ(global_optimal_lattice(3, m).index, lattice_index_brute_force(3, m));
  for (long m = 0; m <= 4; ++m) EXPECT_EQ(global_optimal_lattice(5, m).index, lattice_index_brute_force(5, m));
}
