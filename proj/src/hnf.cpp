#include "recip/hnf.hpp"

#include "recip/error.hpp"

namespace recip {

namespace {

void col_axpy(IntMatrix& A, int dst, const mpz_class& c, int src) {
  // col_dst -= c * col_src
  for (auto& row : A) row[dst] -= c * row[src];
}

void col_swap(IntMatrix& A, int i, int j) {
  for (auto& row : A) std::swap(row[i], row[j]);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix column_hnf(IntMatrix A) {
  const int n = static_cast<int>(A.size());
  for (int i = n - 1; i >= 0; --i) {
    // Euclid on row i across columns 0..i until only column i is nonzero.
    for (;;) {
      int best = -1;
      for (int j = 0; j <= i; ++j)
        if (A[i][j] != 0 && (best < 0 || abs(A[i][j]) < abs(A[i][best]))) best = j;
      if (best < 0) fail(ErrorCode::Degenerate, "lattice basis is singular");
      bool done = true;
      for (int j = 0; j <= i; ++j) {
        if (j == best || A[i][j] == 0) continue;
        col_axpy(A, j, floor_div(A[i][j], A[i][best]), best);
        if (A[i][j] != 0) done = false;
      }
      if (done) {
        if (best != i) col_swap(A, best, i);
        break;
      }
    }
    if (A[i][i] < 0)
      for (auto& row : A) row[i] = -row[i];
  }
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) col_axpy(A, j, floor_div(A[i][j], A[i][i]), i);
  return A;
}

mpz_class determinant_triangular(const IntMatrix& H) {
  mpz_class d = 1;
  for (size_t i = 0; i < H.size(); ++i) d *= H[i][i];
  return d;
}

std::optional<std::vector<mpz_class>> lattice_coords(const IntMatrix& H, const std::vector<mpz_class>& v) {
  const int n = static_cast<int>(H.size());
  std::vector<mpz_class> r = v, x(n);
  for (int i = n - 1; i >= 0; --i) {
    if (r[i] % H[i][i] != 0) return std::nullopt;
    x[i] = r[i] / H[i][i];
    for (int k = 0; k <= i; ++k) r[k] -= x[i] * H[k][i];
  }
  return x;
}

}  // namespace recip
