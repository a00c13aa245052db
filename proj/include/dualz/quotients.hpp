#pragma once

#include <optional>
#include <string_view>

#include "dualz/complex.hpp"

namespace dualz {

/// Ideal of C^b used to form a quotient: none, maps factoring through sums of
/// shifts of P (𝓟), through sums of stalks (𝓠), or their sum.
enum class IdealSpec { None, Proj, Stalk, ProjPlusStalk };

std::string_view ideal_name(IdealSpec spec);
/// Accepts none, P, Q, PQ. Throws ParseError otherwise.
IdealSpec parse_ideal(std::string_view text);
bool contains_proj(IdealSpec spec);
bool contains_stalk(IdealSpec spec);

/// h with f == h e + e' h, if one exists.
std::optional<IntMatrix> is_null_homotopic(const DiffMorphism& f);

/// f == beta * alpha with alpha : source -> through, beta : through -> target
/// both intertwining, and `through` projective.
struct ProjectiveFactorization {
  DiffStructure through;
  IntMatrix alpha;
  IntMatrix beta;
};

/// Builds the factorization through (Im e' (+) Im e', 1) (+) (Ker e (+) Ker e, 1)
/// from block equations in normal coordinates.
std::optional<ProjectiveFactorization> factors_through_projective(const DiffMorphism& f);
bool verify_factorization(const DiffMorphism& f, const ProjectiveFactorization& p);

/// Hom_{C^b}(x, y) as a lattice in ChainMap::flatten coordinates.
Lattice hom_lattice(const BoundedComplex& x, const BoundedComplex& y);
/// The ideal's maps x -> y, same coordinates.
Lattice ideal_lattice(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec);

bool in_ideal(const ChainMap& f, IdealSpec spec);
/// Componentwise: each f_i : X -> Y[i] must lie in the ideal.
bool in_ideal(const OrbitMorphism& f, IdealSpec spec);

/// Hom in C^b / ideal, or in its orbit category when `orbit` is set.
GroupInvariants hom_quotient(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec,
                             bool orbit);
std::size_t hom_rank_quotient(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec,
                              bool orbit);

/// Intertwiners source -> target modulo null-homotopic ones.
GroupInvariants diff_homotopy_quotient(const DiffStructure& source, const DiffStructure& target);

/// Same torsion cokernel invariants, i.e. same image in finite abelian groups.
bool iso_in_bottom(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2);

}  // namespace dualz
