#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dualz/diffstruct.hpp"

namespace dualz {

/// Bounded cochain complex of free abelian groups
///   X^low -d^low-> X^low+1 -> ... -> X^high
/// Zero-rank boundary degrees are trimmed on construction so that equal
/// complexes compare equal; the zero complex has low_degree 0 and no terms.
class BoundedComplex {
 public:
  BoundedComplex() = default;
  /// Throws DimensionError on inconsistent shapes, InvalidStructureError
  /// unless consecutive differentials compose to zero.
  static BoundedComplex make(int low_degree, std::vector<std::size_t> ranks,
                             std::vector<IntMatrix> differentials);
  static BoundedComplex stalk(int degree, std::size_t rank = 1);
  /// Z = Z in degrees (low_degree, low_degree + 1).
  static BoundedComplex projective(int low_degree = 0);
  /// A in degree low_degree, B in degree low_degree + 1.
  static BoundedComplex from_embedding(const SubgroupEmbedding& e, int low_degree = 0);

  bool is_zero() const { return ranks_.empty(); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<IntMatrix>& differentials() const { return differentials_; }
  std::size_t total_rank() const;

  std::size_t rank_at(int degree) const;
  /// d^degree : X^degree -> X^degree+1 (a correctly shaped zero outside the support).
  IntMatrix differential_at(int degree) const;

  friend bool operator==(const BoundedComplex&, const BoundedComplex&) = default;

 private:
  int low_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> differentials_;
};

/// Degrees move up by i; differentials are copied unchanged (no sign twist).
BoundedComplex shift(const BoundedComplex& x, int i);
BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b);

/// Morphism of complexes; one component per degree of the source support.
class ChainMap {
 public:
  static ChainMap make(BoundedComplex source, BoundedComplex target,
                       std::vector<IntMatrix> components);
  static ChainMap zero(BoundedComplex source, BoundedComplex target);
  static ChainMap identity(const BoundedComplex& x);
  /// Inverse of flatten().
  static ChainMap unflatten(BoundedComplex source, BoundedComplex target, const IntVector& v);

  const BoundedComplex& source() const { return source_; }
  const BoundedComplex& target() const { return target_; }
  const std::vector<IntMatrix>& components() const { return components_; }
  IntMatrix component_at(int degree) const;
  bool is_zero() const;
  /// Concatenated row-major components, low degree first.
  IntVector flatten() const;

  friend bool operator==(const ChainMap&, const ChainMap&) = default;

 private:
  ChainMap(BoundedComplex s, BoundedComplex t, std::vector<IntMatrix> c)
      : source_(std::move(s)), target_(std::move(t)), components_(std::move(c)) {}
  BoundedComplex source_;
  BoundedComplex target_;
  std::vector<IntMatrix> components_;
};

bool is_chain_map(const BoundedComplex& source, const BoundedComplex& target,
                  const std::vector<IntMatrix>& components);
/// Dimension of the coordinate space used by ChainMap::flatten.
std::size_t hom_coordinate_dim(const BoundedComplex& source, const BoundedComplex& target);
/// Columns: canonical basis of Hom_{C^b}(source, target) in flattened coordinates.
IntMatrix chain_map_basis(const BoundedComplex& source, const BoundedComplex& target);

ChainMap compose(const ChainMap& outer, const ChainMap& inner);
ChainMap shift(const ChainMap& f, int i);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);

/// Morphism X -> Y in the orbit category: finitely many components
/// f_i : X -> Y[i], stored by shift index. Zero components are dropped.
class OrbitMorphism {
 public:
  OrbitMorphism() = default;
  OrbitMorphism(BoundedComplex source, BoundedComplex target)
      : source_(std::move(source)), target_(std::move(target)) {}
  static OrbitMorphism from_chain_map(const ChainMap& f);

  const BoundedComplex& source() const { return source_; }
  const BoundedComplex& target() const { return target_; }
  const std::map<int, ChainMap>& components() const { return components_; }
  /// Accumulates f into the shift-i bucket. Throws DimensionError unless
  /// f : source -> shift(target, i).
  void add(int i, const ChainMap& f);
  /// f_i, or the zero map.
  ChainMap component(int i) const;
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;

 private:
  BoundedComplex source_;
  BoundedComplex target_;
  std::map<int, ChainMap> components_;
};

OrbitMorphism operator+(const OrbitMorphism& a, const OrbitMorphism& b);
OrbitMorphism operator-(const OrbitMorphism& a, const OrbitMorphism& b);
/// (g ∘ f)_k = sum over i + j = k of g_j[i] ∘ f_i.
OrbitMorphism compose(const OrbitMorphism& outer, const OrbitMorphism& inner);

/// Shifts i with Hom(X, Y[i]) possibly nonzero, as a closed range; nullopt
/// when either complex is zero.
std::optional<std::pair<int, int>> shift_range(const BoundedComplex& x, const BoundedComplex& y);

std::vector<OrbitMorphism> orbit_hom_basis(const BoundedComplex& x, const BoundedComplex& y);
std::size_t orbit_hom_rank(const BoundedComplex& x, const BoundedComplex& y);

/// (⊕ X^t, block-subdiagonal matrix of the differentials).
DiffStructure pushdown_eta(const BoundedComplex& x);
/// Sum of the shifted components placed in their blocks; an intertwiner
/// pushdown_eta(source) -> pushdown_eta(target).
DiffMorphism pushdown_eta(const OrbitMorphism& f);

/// (A ⊂ B) placed with B in `degree` and A in `degree - 1`; an embedding with
/// empty A is a stalk.
struct Width2Summand {
  int degree = 0;
  SubgroupEmbedding embedding;
};

struct Width2Decomposition {
  std::vector<Width2Summand> summands;
  /// Per-degree unimodular base changes (degrees low..high of the input)
  /// forming a chain isomorphism from the input onto `normal`.
  std::vector<IntMatrix> certificate;
  /// The input rewritten in the new bases; equals assemble_width2(summands).
  BoundedComplex normal;
};

Width2Decomposition decompose_width2(const BoundedComplex& x);
BoundedComplex assemble_width2(const std::vector<Width2Summand>& summands);

/// Invariants of H^degree.
GroupInvariants cohomology(const BoundedComplex& x, int degree);
/// Torsion of all cohomology groups, merged.
FiniteAbGroupInv cohomology_torsion(const BoundedComplex& x);

}  // namespace dualz
