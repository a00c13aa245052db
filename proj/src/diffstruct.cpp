#include "dualz/diffstruct.hpp"

#include <stdexcept>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {
namespace {

// [[0,0],[m,0]] with m : Z^cols -> Z^rows, the first block being the source.
IntMatrix lower_left(const IntMatrix& m) {
  IntMatrix e(m.cols() + m.rows(), m.cols() + m.rows());
  e.set_block(m.cols(), 0, m);
  return e;
}

}  // namespace

DiffStructure DiffStructure::make(std::size_t rank, IntMatrix e) {
  if (e.rows() != rank || e.cols() != rank)
    throw DimensionError("differential must be " + std::to_string(rank) + "x" +
                         std::to_string(rank));
  if (!(e * e).is_zero()) throw InvalidStructureError("differential does not square to zero");
  return DiffStructure(std::move(e));
}

DiffStructure DiffStructure::projective(std::size_t c) {
  return DiffStructure(lower_left(IntMatrix::identity(c)));
}

DiffStructure direct_sum(const DiffStructure& a, const DiffStructure& b) {
  return DiffStructure::make(a.rank() + b.rank(), block_diag(a.e(), b.e()));
}

bool check_morphism(const DiffStructure& source, const DiffStructure& target, const IntMatrix& f) {
  if (f.rows() != target.rank() || f.cols() != source.rank())
    throw DimensionError("morphism matrix must be " + std::to_string(target.rank()) + "x" +
                         std::to_string(source.rank()));
  return f * source.e() == target.e() * f;
}

DiffMorphism DiffMorphism::make(DiffStructure source, DiffStructure target, IntMatrix f) {
  if (!check_morphism(source, target, f))
    throw InvalidStructureError("matrix does not intertwine the differentials");
  return DiffMorphism(std::move(source), std::move(target), std::move(f));
}

DiffMorphism DiffMorphism::identity(const DiffStructure& d) {
  return DiffMorphism(d, d, IntMatrix::identity(d.rank()));
}

DiffMorphism DiffMorphism::zero(const DiffStructure& source, const DiffStructure& target) {
  return DiffMorphism(source, target, IntMatrix(target.rank(), source.rank()));
}

DiffMorphism compose(const DiffMorphism& outer, const DiffMorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw DimensionError("composition of morphisms with mismatched ends");
  return DiffMorphism::make(inner.source(), outer.target(), outer.f() * inner.f());
}

bool is_isomorphism(const DiffMorphism& f) { return is_unimodular(f.f()); }

IntMatrix intertwiner_basis(const DiffStructure& source, const DiffStructure& target) {
  // vec(f e - e' f) for f of shape target.rank() x source.rank()
  const IntMatrix op = sandwich_operator(IntMatrix::identity(target.rank()), source.e()) -
                       sandwich_operator(target.e(), IntMatrix::identity(source.rank()));
  return kernel_basis(op);
}

IntMatrix NormalForm::differential() const { return lower_left(mu); }

NormalForm normalize(const DiffStructure& d) {
  const std::size_t n = d.rank();
  const auto s = snf(d.e());
  const std::size_t r = s.rank();
  // Columns of V: r complement vectors, then a basis of Ker e.
  const IntMatrix v_inv = inverse_unimodular(s.V);
  const IntMatrix conj = v_inv * d.e() * s.V;
  const IntMatrix mu0 = conj.block(r, 0, n - r, r);
  if (!(conj == lower_left(mu0))) throw std::logic_error("normalize: kernel basis is not closed");

  const auto s2 = snf(mu0);
  NormalForm nf;
  nf.im_rank = r;
  nf.ker_rank = n - r;
  nf.mu = s2.D;
  nf.certificate = block_diag(inverse_unimodular(s2.V), s2.U) * v_inv;
  return nf;
}

bool is_projective(const DiffStructure& d) {
  const NormalForm nf = normalize(d);
  return nf.mu.square() && is_unimodular(nf.mu);
}

SubgroupEmbedding to_embedding(const DiffStructure& d) {
  const NormalForm nf = normalize(d);
  return SubgroupEmbedding::make(nf.ker_rank, nf.mu);
}

DiffStructure from_embedding(const SubgroupEmbedding& e) {
  return DiffStructure::make(e.sub_rank() + e.ambient_rank(), lower_left(e.matrix()));
}

namespace {

void require_normal_shape(const DiffStructure& d, std::size_t im_rank) {
  if (im_rank > d.rank()) throw InvalidStructureError("image rank exceeds structure rank");
  const std::size_t k = d.rank() - im_rank;
  if (!(d.e() == lower_left(d.e().block(im_rank, 0, k, im_rank))))
    throw InvalidStructureError("differential is not in normal block shape");
}

}  // namespace

EpivalenceImage epivalence_image(const DiffMorphism& f, std::size_t source_im_rank,
                                 std::size_t target_im_rank) {
  require_normal_shape(f.source(), source_im_rank);
  require_normal_shape(f.target(), target_im_rank);
  const std::size_t ks = f.source().rank() - source_im_rank;
  const std::size_t kt = f.target().rank() - target_im_rank;
  const IntMatrix& m = f.f();
  if (!m.block(0, source_im_rank, target_im_rank, ks).is_zero())
    throw std::logic_error("morphism does not preserve kernels");
  EpivalenceImage img{
      SubgroupEmbedding::make(ks, f.source().e().block(source_im_rank, 0, ks, source_im_rank)),
      SubgroupEmbedding::make(kt, f.target().e().block(target_im_rank, 0, kt, target_im_rank)),
      m.block(0, 0, target_im_rank, source_im_rank),
      m.block(target_im_rank, source_im_rank, kt, ks),
      m.block(target_im_rank, 0, kt, source_im_rank)};
  return img;
}

EpivalenceImage epivalence_image(const DiffMorphism& f) {
  const NormalForm ns = normalize(f.source());
  const NormalForm nt = normalize(f.target());
  const auto src = DiffStructure::make(f.source().rank(), ns.differential());
  const auto tgt = DiffStructure::make(f.target().rank(), nt.differential());
  IntMatrix g = nt.certificate * f.f() * inverse_unimodular(ns.certificate);
  return epivalence_image(DiffMorphism::make(src, tgt, std::move(g)), ns.im_rank, nt.im_rank);
}

bool exact_at(const IntMatrix& incoming, const IntMatrix& outgoing) {
  return Lattice::from_columns(kernel_basis(outgoing)) == Lattice::from_columns(incoming);
}

bool ResolutionWindow::verified() const {
  if (!linear || !kernel_matches || positions.empty()) return false;
  for (const auto& p : positions)
    if (!p.square_zero || !p.exact || !p.dual_exact) return false;
  return true;
}

ResolutionWindow complete_resolution(const SubgroupEmbedding& e, std::size_t window) {
  if (window == 0) throw DimensionError("resolution window must be at least 1");
  const std::size_t k = e.sub_rank();
  const std::size_t n = e.ambient_rank();
  const IntMatrix& u = e.matrix();

  ResolutionWindow w;
  w.module = direct_sum(DiffStructure::projective(k), DiffStructure::projective(n));
  // Coordinates (r, s | t, w) with r, s in A and t, w in B. The surjection
  // P -> (A (+) B) is (r, s, t, w) -> (r, u s + t); the injection back is
  // (a, b) -> (0, -a, u a, b). Their composite:
  //   d(r, s, t, w) = (0, -r, u r, u s + t)
  IntMatrix d(2 * k + 2 * n, 2 * k + 2 * n);
  d.set_block(k, 0, -IntMatrix::identity(k));
  d.set_block(2 * k, 0, u);
  d.set_block(2 * k + n, k, u);
  d.set_block(2 * k + n, 2 * k, IntMatrix::identity(n));
  w.differential = d;
  w.linear = d * w.module.e() == w.module.e() * d;

  // Ker d with the induced ε-action is the module we started from.
  const IntMatrix ker = kernel_basis(d);
  const IntMatrix moved = w.module.e() * ker;
  IntMatrix action(ker.cols(), ker.cols());
  bool closed = true;
  for (std::size_t j = 0; j < ker.cols() && closed; ++j) {
    const auto sol = solve_linear(ker, moved.col(j));
    closed = sol.has_value();
    if (closed)
      for (std::size_t i = 0; i < ker.cols(); ++i) action(i, j) = sol->x[i];
  }
  if (closed && (action * action).is_zero()) {
    const auto restricted = DiffStructure::make(ker.cols(), action);
    w.kernel_matches = iso_embeddings(to_embedding(restricted), e).isomorphic;
  }

  const IntMatrix dt = d.transpose();
  for (std::size_t pos = 0; pos < window; ++pos) {
    ExactnessReport r;
    r.position = pos;
    r.square_zero = (d * d).is_zero();
    r.exact = exact_at(d, d);
    r.dual_exact = exact_at(dt, dt);
    w.positions.push_back(r);
  }
  return w;
}

}  // namespace dualz
