#pragma once

#include "dualz/matrix.hpp"

namespace dualz {

/// U * A * V == D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1},
/// zeros last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  /// The min(rows, cols) diagonal entries of D.
  IntVector diagonal() const;
};

/// U * A == H, H in row echelon form with positive pivots and every entry
/// above a pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix U;
  IntMatrix H;

  std::size_t rank() const;
  /// Nonzero rows of H.
  IntMatrix basis_rows() const;
};

SmithDecomposition snf(const IntMatrix& a);
HermiteDecomposition hnf(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Exact inverse of a unimodular matrix; throws InvalidStructureError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace dualz
