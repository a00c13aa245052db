#pragma once

#include <optional>
#include <vector>

#include "dualz/matrix.hpp"

namespace dualz {

/// Isomorphism class of a finite abelian group as its invariant factors
/// f_1 | f_2 | ... , each >= 2. The empty list is the trivial group.
class FiniteAbGroupInv {
 public:
  FiniteAbGroupInv() = default;
  /// Normalizes any list of cyclic orders (0 and 1 are dropped, the rest is
  /// regrouped through the Smith form of the diagonal matrix).
  static FiniteAbGroupInv from_cyclic_orders(const IntVector& orders);

  const IntVector& factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  Int order() const;

  /// Invariants of the direct sum.
  FiniteAbGroupInv merged(const FiniteAbGroupInv& other) const;

  friend bool operator==(const FiniteAbGroupInv&, const FiniteAbGroupInv&) = default;

 private:
  IntVector factors_;
};

/// Z^free_rank (+) torsion.
struct GroupInvariants {
  std::size_t free_rank = 0;
  FiniteAbGroupInv torsion;

  bool trivial() const { return free_rank == 0 && torsion.trivial(); }
  GroupInvariants merged(const GroupInvariants& o) const {
    return {free_rank + o.free_rank, torsion.merged(o.torsion)};
  }
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

std::size_t rank(const IntMatrix& a);

/// Columns form the canonical (Hermite-reduced) basis of Ker A; the basis is
/// saturated because it comes from a unimodular column transform.
IntMatrix kernel_basis(const IntMatrix& a);

/// Columns form the canonical basis of the column span of A (not saturated).
IntMatrix image_basis(const IntMatrix& a);

struct LinearSolution {
  IntVector x;       // canonical particular solution, reduced modulo the kernel
  IntMatrix kernel;  // kernel_basis(A)
};

/// Integer solutions of A x = b. Throws DimensionError if b.size() != A.rows().
std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVector& b);

/// Z^rows / (column span of A).
GroupInvariants cokernel_invariants(const IntMatrix& a);

/// A sublattice of Z^n stored by its Hermite basis, so equal lattices have
/// byte-identical representations.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}
  /// Lattice spanned by the columns of `generators`.
  static Lattice from_columns(const IntMatrix& generators);
  static Lattice from_rows(const IntMatrix& generators);
  static Lattice full(std::size_t n) { return from_rows(IntMatrix::identity(n)); }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  /// Basis vectors as rows, in Hermite normal form.
  const IntMatrix& basis_rows() const { return basis_; }
  IntMatrix basis_columns() const { return basis_.transpose(); }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& sub) const;
  /// Canonical coset representative of v modulo this lattice.
  IntVector reduce(IntVector v) const;
  /// Coordinates of a lattice vector in basis_rows(); nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  Lattice saturation() const;
  bool saturated() const { return saturation() == *this; }
  Lattice sum(const Lattice& other) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
  void compute_pivots();
};

/// Invariants of big / small; throws InvalidStructureError unless small is a
/// sublattice of big.
GroupInvariants quotient_invariants(const Lattice& big, const Lattice& small);

}  // namespace dualz
