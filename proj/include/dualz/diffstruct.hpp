#pragma once

#include <optional>
#include <vector>

#include "dualz/embedding.hpp"

namespace dualz {

/// A perfect differential Z-structure (Z^rank, e) with e*e == 0; the same data
/// as a torsionless Z[ε]-module with ε acting by e.
class DiffStructure {
 public:
  DiffStructure() = default;
  /// Throws DimensionError unless e is rank x rank, InvalidStructureError unless e*e == 0.
  static DiffStructure make(std::size_t rank, IntMatrix e);
  /// (C (+) C, [[0,0],[1,0]]) with C = Z^c.
  static DiffStructure projective(std::size_t c);

  std::size_t rank() const { return e_.rows(); }
  const IntMatrix& e() const { return e_; }

  friend bool operator==(const DiffStructure&, const DiffStructure&) = default;

 private:
  explicit DiffStructure(IntMatrix e) : e_(std::move(e)) {}
  IntMatrix e_;
};

DiffStructure direct_sum(const DiffStructure& a, const DiffStructure& b);

/// f : (N, e) -> (N', e') with f e == e' f.
class DiffMorphism {
 public:
  static DiffMorphism make(DiffStructure source, DiffStructure target, IntMatrix f);
  static DiffMorphism identity(const DiffStructure& d);
  static DiffMorphism zero(const DiffStructure& source, const DiffStructure& target);

  const DiffStructure& source() const { return source_; }
  const DiffStructure& target() const { return target_; }
  const IntMatrix& f() const { return f_; }

 private:
  DiffMorphism(DiffStructure s, DiffStructure t, IntMatrix f)
      : source_(std::move(s)), target_(std::move(t)), f_(std::move(f)) {}
  DiffStructure source_;
  DiffStructure target_;
  IntMatrix f_;
};

/// Exact intertwining check. Throws DimensionError on incompatible shapes.
bool check_morphism(const DiffStructure& source, const DiffStructure& target, const IntMatrix& f);

/// outer ∘ inner. Throws DimensionError unless inner.target() == outer.source().
DiffMorphism compose(const DiffMorphism& outer, const DiffMorphism& inner);

bool is_isomorphism(const DiffMorphism& f);

/// Basis (as columns of row-major vec(f)) of all intertwiners source -> target.
IntMatrix intertwiner_basis(const DiffStructure& source, const DiffStructure& target);

/// (N, e) ≅ (I (+) Ker e, [[0,0],[mu,0]]).
struct NormalForm {
  std::size_t im_rank = 0;
  std::size_t ker_rank = 0;
  /// ker_rank x im_rank, injective, in Smith form.
  IntMatrix mu;
  /// Unimodular map N -> I (+) Ker e with certificate * e == differential() * certificate.
  IntMatrix certificate;

  IntMatrix differential() const;
};

NormalForm normalize(const DiffStructure& d);

bool is_projective(const DiffStructure& d);

/// (Im mu ⊂ Ker e) read off the normal form.
SubgroupEmbedding to_embedding(const DiffStructure& d);
/// (A (+) B, [[0,0],[u,0]]).
DiffStructure from_embedding(const SubgroupEmbedding& e);

/// Commutative square (a, b) between the embeddings attached to source and
/// target, plus the lower-left block c that the functor forgets.
struct EpivalenceImage {
  SubgroupEmbedding source;
  SubgroupEmbedding target;
  IntMatrix a;  // Im e -> Im e'
  IntMatrix b;  // Ker e -> Ker e'
  IntMatrix c;  // Im e -> Ker e'  (block of f below the diagonal)

  bool square_commutes() const { return b * source.matrix() == target.matrix() * a; }
};

/// Block extraction for a morphism whose source and target are already in
/// normal form, with the given image ranks. Throws InvalidStructureError if
/// either differential does not have the block shape [[0,0],[mu,0]].
EpivalenceImage epivalence_image(const DiffMorphism& f, std::size_t source_im_rank,
                                 std::size_t target_im_rank);
/// Normalizes both ends first, then extracts the blocks.
EpivalenceImage epivalence_image(const DiffMorphism& f);

/// Ker(outgoing) == Im(incoming) as subgroups.
bool exact_at(const IntMatrix& incoming, const IntMatrix& outgoing);

struct ExactnessReport {
  std::size_t position = 0;
  bool square_zero = false;
  bool exact = false;
  bool dual_exact = false;
};

/// A window of the periodic complete resolution ... -> P -d-> P -d-> P -> ...
/// of the module attached to an embedding.
struct ResolutionWindow {
  /// (A (+) A, id-block) (+) (B (+) B, id-block)
  DiffStructure module;
  IntMatrix differential;
  /// d is a Z[ε]-linear endomorphism of the module.
  bool linear = false;
  /// Ker d, with the restricted ε-action, is isomorphic to the input embedding.
  bool kernel_matches = false;
  std::vector<ExactnessReport> positions;

  bool verified() const;
};

ResolutionWindow complete_resolution(const SubgroupEmbedding& e, std::size_t window);

}  // namespace dualz
