#include "dualz/embedding.hpp"

#include <algorithm>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

SubgroupEmbedding SubgroupEmbedding::make(std::size_t ambient_rank, IntMatrix matrix) {
  if (matrix.rows() != ambient_rank)
    throw DimensionError("embedding matrix has " + std::to_string(matrix.rows()) +
                         " rows, ambient rank is " + std::to_string(ambient_rank));
  if (rank(matrix) != matrix.cols())
    throw NotInjectiveError("subgroup generators are linearly dependent");
  return SubgroupEmbedding(std::move(matrix));
}

SubgroupEmbedding SubgroupEmbedding::stalks(std::size_t n) { return SubgroupEmbedding(IntMatrix(n, 0)); }

SubgroupEmbedding SubgroupEmbedding::from_divisors(const IntVector& divisors) {
  std::size_t k = 0;
  for (const auto& d : divisors) k += sgn(d) != 0;
  IntMatrix m(divisors.size(), k);
  std::size_t j = 0;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (sgn(divisors[i]) != 0) m(i, j++) = abs(divisors[i]);
  return SubgroupEmbedding(std::move(m));
}

SubgroupEmbedding direct_sum(const SubgroupEmbedding& a, const SubgroupEmbedding& b) {
  return SubgroupEmbedding::make(a.ambient_rank() + b.ambient_rank(),
                                 block_diag(a.matrix(), b.matrix()));
}

Decomposition decompose_embedding(const SubgroupEmbedding& e) {
  Decomposition d;
  d.divisors = snf(e.matrix()).diagonal();
  d.divisors.resize(e.ambient_rank());
  std::sort(d.divisors.begin(), d.divisors.end());
  return d;
}

IsoResult iso_embeddings(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2) {
  if (e1.ambient_rank() != e2.ambient_rank() || e1.sub_rank() != e2.sub_rank()) return {};
  const auto s1 = snf(e1.matrix());
  const auto s2 = snf(e2.matrix());
  // Same rank data plus the same torsion means the same Smith form.
  if (!(s1.D == s2.D)) return {};
  // U1 E1 V1 = D = U2 E2 V2  =>  (U2^-1 U1) E1 = E2 (V2 V1^-1).
  EmbeddingIsomorphism iso{inverse_unimodular(s2.U) * s1.U, s2.V * inverse_unimodular(s1.V)};
  return {true, std::move(iso)};
}

bool verify_certificate(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2,
                        const EmbeddingIsomorphism& iso) {
  if (iso.b.rows() != e2.ambient_rank() || iso.b.cols() != e1.ambient_rank()) return false;
  if (iso.a.rows() != e2.sub_rank() || iso.a.cols() != e1.sub_rank()) return false;
  return is_unimodular(iso.b) && is_unimodular(iso.a) &&
         iso.b * e1.matrix() == e2.matrix() * iso.a;
}

FreeSplitting split_off_free(const SubgroupEmbedding& e) {
  const std::size_t k = e.sub_rank();
  const auto s = snf(e.matrix());
  // In the basis of B given by the rows of U the subgroup sits in the first k
  // coordinates; the remaining ones span the free complement.
  const IntMatrix rotated = s.U * e.matrix();
  return {e.ambient_rank() - k, SubgroupEmbedding::make(k, rotated.row_range(0, k))};
}

SummandInvariants summand_invariants(const SubgroupEmbedding& e) {
  return {e.ambient_rank(), e.ambient_rank() - e.sub_rank()};
}

FiniteAbGroupInv cokernel_torsion(const SubgroupEmbedding& e) {
  return cokernel_invariants(e.matrix()).torsion;
}

}  // namespace dualz
