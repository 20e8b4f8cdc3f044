#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace recip {

// Square integer matrix, row-major: M[row][col].
using IntMatrix = std::vector<std::vector<mpz_class>>;

// Column Hermite normal form of a nonsingular square matrix: upper
// triangular, positive diagonal, entries right of a pivot in [0, pivot).
IntMatrix column_hnf(IntMatrix A);

mpz_class determinant_triangular(const IntMatrix& H);

// Integer coordinates of v in the columns of the HNF H, if v lies in the
// lattice.
std::optional<std::vector<mpz_class>> lattice_coords(const IntMatrix& H, const std::vector<mpz_class>& v);

}  // namespace recip
