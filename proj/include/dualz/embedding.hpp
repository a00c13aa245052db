#pragma once

#include <optional>
#include <vector>

#include "dualz/lattice.hpp"

namespace dualz {

/// An injective map A -> B of free abelian groups of finite rank, i.e. the
/// object (A ⊂ B). Columns of `matrix()` are the generators of A written in
/// the standard basis of B.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding() = default;
  /// Validating constructor. Throws DimensionError when the row count is not
  /// `ambient_rank`, NotInjectiveError when the columns are dependent.
  static SubgroupEmbedding make(std::size_t ambient_rank, IntMatrix matrix);
  /// (0 ⊂ Z^n)
  static SubgroupEmbedding stalks(std::size_t n);
  /// Block-diagonal object (g_1 Z ⊂ Z) (+) ... ; a zero entry gives (0 ⊂ Z).
  static SubgroupEmbedding from_divisors(const IntVector& divisors);

  std::size_t ambient_rank() const { return matrix_.rows(); }
  std::size_t sub_rank() const { return matrix_.cols(); }
  const IntMatrix& matrix() const { return matrix_; }

  friend bool operator==(const SubgroupEmbedding&, const SubgroupEmbedding&) = default;

 private:
  explicit SubgroupEmbedding(IntMatrix m) : matrix_(std::move(m)) {}
  IntMatrix matrix_;
};

SubgroupEmbedding direct_sum(const SubgroupEmbedding& a, const SubgroupEmbedding& b);

/// Multiset of divisors, sorted ascending. 0 stands for (0 ⊂ Z), g >= 1 for
/// (gZ ⊂ Z); g == 1 is the projective summand (Z = Z).
struct Decomposition {
  IntVector divisors;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Canonical representative of the decomposition into indecomposables: the
/// Smith invariants of the generator matrix, padded with one zero per
/// missing generator.
Decomposition decompose_embedding(const SubgroupEmbedding& e);

/// Unimodular b: B -> B' and a: A -> A' with b * E1 == E2 * a.
struct EmbeddingIsomorphism {
  IntMatrix b;
  IntMatrix a;
};

struct IsoResult {
  bool isomorphic = false;
  std::optional<EmbeddingIsomorphism> certificate;
};

IsoResult iso_embeddings(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2);

/// True iff b, a are unimodular and carry E1 onto E2.
bool verify_certificate(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2,
                        const EmbeddingIsomorphism& iso);

struct FreeSplitting {
  std::size_t stalk_multiplicity = 0;
  /// (A ⊂ B') with B = B' (+) Z^stalk_multiplicity and A of full rank in B'.
  SubgroupEmbedding reduced;
};

FreeSplitting split_off_free(const SubgroupEmbedding& e);

struct SummandInvariants {
  std::size_t total_summands = 0;
  std::size_t stalk_multiplicity = 0;
};

SummandInvariants summand_invariants(const SubgroupEmbedding& e);

/// Torsion part of B / A.
FiniteAbGroupInv cokernel_torsion(const SubgroupEmbedding& e);

}  // namespace dualz
