#include "dualz/lattice.hpp"

#include <algorithm>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

FiniteAbGroupInv FiniteAbGroupInv::from_cyclic_orders(const IntVector& orders) {
  IntVector nontrivial;
  for (const auto& o : orders) {
    Int a = abs(o);
    if (a >= 2) nontrivial.push_back(a);
  }
  FiniteAbGroupInv inv;
  if (nontrivial.empty()) return inv;
  const auto s = snf(IntMatrix::diagonal(nontrivial, nontrivial.size(), nontrivial.size()));
  for (const auto& d : s.diagonal())
    if (d >= 2) inv.factors_.push_back(d);
  return inv;
}

Int FiniteAbGroupInv::order() const {
  Int o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

FiniteAbGroupInv FiniteAbGroupInv::merged(const FiniteAbGroupInv& other) const {
  IntVector all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(all);
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto s = snf(a);
  const std::size_t r = s.rank();
  const IntMatrix k = s.V.columns(r, a.cols() - r);
  return Lattice::from_columns(k).basis_columns();
}

IntMatrix image_basis(const IntMatrix& a) { return Lattice::from_columns(a).basis_columns(); }

std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw DimensionError("right-hand side has length " + std::to_string(b.size()) +
                         ", matrix has " + std::to_string(a.rows()) + " rows");
  const auto s = snf(a);
  const std::size_t r = s.rank();
  const IntVector c = s.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  const Lattice ker = Lattice::from_columns(s.V.columns(r, a.cols() - r));
  return LinearSolution{ker.reduce(s.V * y), ker.basis_columns()};
}

GroupInvariants cokernel_invariants(const IntMatrix& a) {
  const auto s = snf(a);
  return {a.rows() - s.rank(), FiniteAbGroupInv::from_cyclic_orders(s.diagonal())};
}

Lattice Lattice::from_columns(const IntMatrix& generators) {
  return from_rows(generators.transpose());
}

Lattice Lattice::from_rows(const IntMatrix& generators) {
  Lattice l(generators.cols());
  l.basis_ = hnf(generators).basis_rows();
  l.compute_pivots();
  return l;
}

void Lattice::compute_pivots() {
  pivots_.clear();
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (sgn(basis_(i, j)) == 0) ++j;
    pivots_.push_back(j);
  }
}

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector outside the lattice ambient space");
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    const Int q = floor_div(v[p], basis_(i, p));
    if (sgn(q) == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * basis_(i, j);
  }
  return v;
}

bool Lattice::contains(const IntVector& v) const {
  for (const auto& x : reduce(v))
    if (sgn(x) != 0) return false;
  return true;
}

bool Lattice::contains(const Lattice& sub) const {
  if (sub.ambient_dim() != ambient_dim()) return false;
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis_.row(i))) return false;
  return true;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector outside the lattice ambient space");
  IntVector rest = v;
  IntVector coords(rank());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return std::nullopt;
    coords[i] = rest[p] / basis_(i, p);
    for (std::size_t j = p; j < rest.size(); ++j) rest[j] -= coords[i] * basis_(i, j);
  }
  for (const auto& x : rest)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

Lattice Lattice::saturation() const {
  // Vectors orthogonal to the lattice, then everything orthogonal to those.
  const IntMatrix orth = kernel_basis(basis_);
  if (orth.cols() == 0) return full(ambient_dim());
  return Lattice::from_columns(kernel_basis(orth.transpose()));
}

Lattice Lattice::sum(const Lattice& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("lattice sum ambient mismatch");
  return from_rows(vstack(basis_, other.basis_));
}

GroupInvariants quotient_invariants(const Lattice& big, const Lattice& small) {
  if (big.ambient_dim() != small.ambient_dim())
    throw DimensionError("quotient of lattices in different ambient spaces");
  IntMatrix coords(big.rank(), small.rank());
  for (std::size_t j = 0; j < small.rank(); ++j) {
    const auto c = big.coordinates(small.basis_rows().row(j));
    if (!c) throw InvalidStructureError("quotient requires a sublattice");
    for (std::size_t i = 0; i < big.rank(); ++i) coords(i, j) = (*c)[i];
  }
  return cokernel_invariants(coords);
}

}  // namespace dualz
