#include "dualz/cube.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

VertexFlags vertex_flags(CubeVertex v) {
  switch (v) {
    case CubeVertex::Cb: return {false, false, false};
    case CubeVertex::CbP: return {true, false, false};
    case CubeVertex::CbQ: return {false, true, false};
    case CubeVertex::CbOrbit: return {false, false, true};
    case CubeVertex::CbPQ: return {true, true, false};
    case CubeVertex::CbPOrbit: return {true, false, true};
    case CubeVertex::CbQOrbit: return {false, true, true};
    case CubeVertex::CbPQOrbit: return {true, true, true};
  }
  return {};
}

CubeVertex vertex_from_flags(VertexFlags f) {
  for (auto v : all_vertices())
    if (vertex_flags(v) == f) return v;
  return CubeVertex::Cb;
}

std::string_view vertex_name(CubeVertex v) {
  switch (v) {
    case CubeVertex::Cb: return "Cb";
    case CubeVertex::CbP: return "Cb/P";
    case CubeVertex::CbQ: return "Cb/Q";
    case CubeVertex::CbOrbit: return "Cb/[1]";
    case CubeVertex::CbPQ: return "Cb/(P+Q)";
    case CubeVertex::CbPOrbit: return "(Cb/P)/[1]";
    case CubeVertex::CbQOrbit: return "(Cb/Q)/[1]";
    case CubeVertex::CbPQOrbit: return "(Cb/(P+Q))/[1]";
  }
  return "?";
}

IdealSpec vertex_ideal(CubeVertex v) {
  const VertexFlags f = vertex_flags(v);
  if (f.proj && f.stalk) return IdealSpec::ProjPlusStalk;
  if (f.proj) return IdealSpec::Proj;
  if (f.stalk) return IdealSpec::Stalk;
  return IdealSpec::None;
}

std::string_view edge_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Sigma: return "sigma";
    case EdgeKind::Pi: return "pi";
    case EdgeKind::Phi: return "phi";
  }
  return "?";
}

CubeVertex edge_target(CubeVertex v, EdgeKind k) {
  VertexFlags f = vertex_flags(v);
  bool& flag = k == EdgeKind::Sigma ? f.orbit : (k == EdgeKind::Pi ? f.proj : f.stalk);
  if (flag)
    throw InvalidEdgeError("edge " + std::string(edge_name(k)) + " does not start at " +
                           std::string(vertex_name(v)));
  flag = true;
  return vertex_from_flags(f);
}

const std::array<CubeEdge, 12>& cube_edges() {
  static const std::array<CubeEdge, 12> edges = [] {
    std::array<CubeEdge, 12> out{};
    std::size_t n = 0;
    for (auto kind : {EdgeKind::Sigma, EdgeKind::Pi, EdgeKind::Phi})
      for (auto v : all_vertices()) {
        try {
          out[n] = {kind, v, edge_target(v, kind)};
          ++n;
        } catch (const InvalidEdgeError&) {
        }
      }
    return out;
  }();
  return edges;
}

const std::array<FaceSpec, 6>& cube_faces() {
  using V = CubeVertex;
  using E = EdgeKind;
  static const std::array<FaceSpec, 6> faces{{
      {CubeFace::LeftRear, "left-rear", V::Cb, E::Pi, E::Phi, V::CbPQ},
      {CubeFace::RightFront, "right-front", V::CbOrbit, E::Pi, E::Phi, V::CbPQOrbit},
      {CubeFace::Top, "top", V::Cb, E::Sigma, E::Pi, V::CbPOrbit},
      {CubeFace::Bottom, "bottom", V::CbQ, E::Sigma, E::Pi, V::CbPQOrbit},
      {CubeFace::UpperRight, "upper-right", V::Cb, E::Sigma, E::Phi, V::CbQOrbit},
      {CubeFace::LowerLeft, "lower-left", V::CbP, E::Sigma, E::Phi, V::CbPQOrbit},
  }};
  return faces;
}

const FaceSpec& face_spec(CubeFace f) {
  for (const auto& s : cube_faces())
    if (s.face == f) return s;
  throw std::logic_error("unknown face");
}

OrbitMorphism canonical_representative(CubeVertex v, const OrbitMorphism& f) {
  const VertexFlags flags = vertex_flags(v);
  const IdealSpec spec = vertex_ideal(v);
  OrbitMorphism out(f.source(), f.target());
  for (const auto& [i, c] : f.components()) {
    if (!flags.orbit && i != 0)
      throw DimensionError("vertex " + std::string(vertex_name(v)) +
                           " only carries unshifted morphisms");
    if (spec == IdealSpec::None) {
      out.add(i, c);
      continue;
    }
    const Lattice ideal = ideal_lattice(c.source(), c.target(), spec);
    out.add(i, ChainMap::unflatten(c.source(), c.target(), ideal.reduce(c.flatten())));
  }
  return out;
}

CubeClass CubeClass::make(CubeVertex v, const OrbitMorphism& rep) {
  return CubeClass(v, canonical_representative(v, rep));
}

CubeClass CubeClass::from_chain_map(CubeVertex v, const ChainMap& f) {
  return make(v, OrbitMorphism::from_chain_map(f));
}

CubeClass apply_edge(const CubeClass& m, EdgeKind edge) {
  return CubeClass::make(edge_target(m.vertex(), edge), m.representative());
}

bool classes_equal(const CubeClass& a, const CubeClass& b) {
  if (a.vertex() != b.vertex()) return false;
  const OrbitMorphism& x = a.representative();
  const OrbitMorphism& y = b.representative();
  if (!(x.source() == y.source()) || !(x.target() == y.target())) return false;
  return in_ideal(x - y, vertex_ideal(a.vertex()));
}

FaceEvaluation evaluate_face(CubeFace face, const CubeClass& m) {
  const FaceSpec& s = face_spec(face);
  if (m.vertex() != s.source)
    throw InvalidEdgeError("morphism is not at the source of face " + std::string(s.name));
  FaceEvaluation ev{apply_edge(apply_edge(m, s.first), s.second),
                    apply_edge(apply_edge(m, s.second), s.first), false};
  ev.commutes = ev.via_first.vertex() == s.sink && classes_equal(ev.via_first, ev.via_second) &&
                ev.via_first == ev.via_second;
  return ev;
}

bool face_commutes(CubeFace face, const OrbitMorphism& m) {
  return evaluate_face(face, CubeClass::make(face_spec(face).source, m)).commutes;
}

// ---------------------------------------------------------------------------
// Read-offs

FiniteAbGroupInv to_Ab(const SubgroupEmbedding& e) { return cokernel_torsion(e); }

AbMorphism to_Ab_morphism(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2,
                          const OrbitMorphism& f) {
  const BoundedComplex x = BoundedComplex::from_embedding(e1);
  const BoundedComplex y = BoundedComplex::from_embedding(e2);
  if (!(f.source() == x) || !(f.target() == y))
    throw DimensionError("morphism does not run between the given embeddings");
  const auto s1 = snf(e1.matrix());
  const auto s2 = snf(e2.matrix());

  auto torsion_positions = [](const SmithDecomposition& s) {
    std::vector<std::size_t> pos;
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (diag[i] >= 2) pos.push_back(i);
    return pos;
  };
  const auto src = torsion_positions(s1);
  const auto tgt = torsion_positions(s2);

  AbMorphism out;
  out.source = cokernel_torsion(e1);
  out.target = cokernel_torsion(e2);
  out.matrix = IntMatrix(tgt.size(), src.size());
  if (src.empty() || tgt.empty()) return out;

  const IntMatrix b = f.component(0).component_at(1);
  const IntMatrix m = s2.U * b * inverse_unimodular(s1.U);
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      out.matrix(i, j) = floor_mod(m(tgt[i], src[j]), s2.D(tgt[i], tgt[i]));
  return out;
}

SubgroupEmbedding to_Lprime(const SubgroupEmbedding& e) { return split_off_free(e).reduced; }

FiniteAbGroupInv read_off_Ab(const BoundedComplex& x) { return cohomology_torsion(x); }

namespace {

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> primes;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

unsigned valuation(Int n, const Int& p) {
  unsigned v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

FiniteAbGroupInv bottom_hom(const BoundedComplex& x, const BoundedComplex& y) {
  const GroupInvariants g = hom_quotient(x, y, IdealSpec::ProjPlusStalk, true);
  if (g.free_rank != 0) throw std::logic_error("bottom hom group is not finite");
  return g.torsion;
}

}  // namespace

bool bottom_hom_signatures_agree(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2) {
  const BoundedComplex x1 = BoundedComplex::from_embedding(e1);
  const BoundedComplex x2 = BoundedComplex::from_embedding(e2);
  std::map<Int, unsigned> max_exp;  // prime -> largest exponent seen in an End factor
  for (const auto* x : {&x1, &x2}) {
    const FiniteAbGroupInv end = bottom_hom(*x, *x);
    for (const Int& f : end.factors())
      for (const Int& p : prime_divisors(f)) max_exp[p] = std::max(max_exp[p], valuation(f, p));
  }
  for (const auto& [p, e] : max_exp) {
    Int q = 1;
    for (unsigned k = 1; k <= e + 1; ++k) {
      q *= p;
      IntMatrix gen(1, 1);
      gen(0, 0) = q;
      const BoundedComplex t = BoundedComplex::from_embedding(SubgroupEmbedding::make(1, gen));
      if (bottom_hom(t, x1).order() != bottom_hom(t, x2).order()) return false;
    }
  }
  return true;
}

}  // namespace dualz
