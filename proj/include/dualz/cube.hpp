#pragma once

#include <array>
#include <string_view>

#include "dualz/quotients.hpp"

namespace dualz {

/// Vertices of the cube of quotient categories of C^b: which of 𝓟, 𝓠 have
/// been factored out and whether shifts have been identified.
enum class CubeVertex { Cb, CbP, CbQ, CbOrbit, CbPQ, CbPOrbit, CbQOrbit, CbPQOrbit };

struct VertexFlags {
  bool proj = false;
  bool stalk = false;
  bool orbit = false;
  friend bool operator==(const VertexFlags&, const VertexFlags&) = default;
};

VertexFlags vertex_flags(CubeVertex v);
CubeVertex vertex_from_flags(VertexFlags f);
std::string_view vertex_name(CubeVertex v);
IdealSpec vertex_ideal(CubeVertex v);
constexpr std::array<CubeVertex, 8> all_vertices() {
  return {CubeVertex::Cb,   CubeVertex::CbP,      CubeVertex::CbQ,      CubeVertex::CbOrbit,
          CubeVertex::CbPQ, CubeVertex::CbPOrbit, CubeVertex::CbQOrbit, CubeVertex::CbPQOrbit};
}

/// σ identifies shifts, π kills 𝓟, φ kills 𝓠.
enum class EdgeKind { Sigma, Pi, Phi };
std::string_view edge_name(EdgeKind k);

struct CubeEdge {
  EdgeKind kind;
  CubeVertex from;
  CubeVertex to;
};
const std::array<CubeEdge, 12>& cube_edges();
/// Target of an edge; throws InvalidEdgeError if the edge does not start at v.
CubeVertex edge_target(CubeVertex v, EdgeKind k);

enum class CubeFace { LeftRear, RightFront, Top, Bottom, UpperRight, LowerLeft };

struct FaceSpec {
  CubeFace face;
  std::string_view name;
  CubeVertex source;
  EdgeKind first;
  EdgeKind second;
  CubeVertex sink;
};
const std::array<FaceSpec, 6>& cube_faces();
const FaceSpec& face_spec(CubeFace f);

/// A morphism class at a vertex, stored by its canonical representative:
/// every component reduced modulo the vertex's ideal. Non-orbit vertices
/// only carry the shift-0 component.
class CubeClass {
 public:
  /// Throws DimensionError if a non-orbit vertex is given shifted components.
  static CubeClass make(CubeVertex v, const OrbitMorphism& rep);
  static CubeClass from_chain_map(CubeVertex v, const ChainMap& f);

  CubeVertex vertex() const { return vertex_; }
  const OrbitMorphism& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const CubeClass&, const CubeClass&) = default;

 private:
  CubeClass(CubeVertex v, OrbitMorphism rep) : vertex_(v), rep_(std::move(rep)) {}
  CubeVertex vertex_ = CubeVertex::Cb;
  OrbitMorphism rep_;
};

/// Reduces every component of f modulo the ideal at the vertex.
OrbitMorphism canonical_representative(CubeVertex v, const OrbitMorphism& f);

CubeClass apply_edge(const CubeClass& m, EdgeKind edge);
/// Same vertex, same ends and the difference lies in the vertex's ideal.
bool classes_equal(const CubeClass& a, const CubeClass& b);

struct FaceEvaluation {
  CubeClass via_first;   // first edge, then second
  CubeClass via_second;  // second edge, then first
  bool commutes = false;
};
/// m must sit at the face's source vertex.
FaceEvaluation evaluate_face(CubeFace face, const CubeClass& m);
bool face_commutes(CubeFace face, const OrbitMorphism& m);

/// Torsion of the cokernel: the object of finite abelian groups attached to E.
FiniteAbGroupInv to_Ab(const SubgroupEmbedding& e);

/// A homomorphism of finite abelian groups in invariant-factor coordinates:
/// column j is the image of the j-th cyclic generator, row i taken mod the
/// i-th target factor.
struct AbMorphism {
  FiniteAbGroupInv source;
  FiniteAbGroupInv target;
  IntMatrix matrix;
  bool is_zero() const { return matrix.is_zero(); }
  friend bool operator==(const AbMorphism&, const AbMorphism&) = default;
};
/// Map on cokernel torsion induced by the square (a, b) of a morphism between
/// embedding complexes (degrees 0, 1); only the shift-0 component contributes.
AbMorphism to_Ab_morphism(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2,
                          const OrbitMorphism& f);

/// Strips all (0 ⊂ Z) summands.
SubgroupEmbedding to_Lprime(const SubgroupEmbedding& e);

/// Reads the object of finite abelian groups off a complex at CbPQOrbit.
FiniteAbGroupInv read_off_Ab(const BoundedComplex& x);

/// Decides iso of E1, E2 at CbPQOrbit through hom counts |Hom((p^k Z ⊂ Z), E)|
/// for the primes dividing the endomorphism orders of E1 and E2.
bool bottom_hom_signatures_agree(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2);

}  // namespace dualz
