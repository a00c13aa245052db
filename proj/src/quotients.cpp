#include "dualz/quotients.hpp"

#include <string>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

std::string_view ideal_name(IdealSpec spec) {
  switch (spec) {
    case IdealSpec::None: return "none";
    case IdealSpec::Proj: return "P";
    case IdealSpec::Stalk: return "Q";
    case IdealSpec::ProjPlusStalk: return "PQ";
  }
  return "none";
}

IdealSpec parse_ideal(std::string_view text) {
  if (text == "none") return IdealSpec::None;
  if (text == "P") return IdealSpec::Proj;
  if (text == "Q") return IdealSpec::Stalk;
  if (text == "PQ") return IdealSpec::ProjPlusStalk;
  throw ParseError("unknown ideal '" + std::string(text) + "' (expected none, P, Q or PQ)");
}

bool contains_proj(IdealSpec spec) {
  return spec == IdealSpec::Proj || spec == IdealSpec::ProjPlusStalk;
}

bool contains_stalk(IdealSpec spec) {
  return spec == IdealSpec::Stalk || spec == IdealSpec::ProjPlusStalk;
}

namespace {

// vec(h) -> vec(h e + e' h)
IntMatrix homotopy_operator(const DiffStructure& source, const DiffStructure& target) {
  return sandwich_operator(IntMatrix::identity(target.rank()), source.e()) +
         sandwich_operator(target.e(), IntMatrix::identity(source.rank()));
}

IntVector concat(IntVector a, const IntVector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::optional<IntMatrix> is_null_homotopic(const DiffMorphism& f) {
  const auto sol = solve_linear(homotopy_operator(f.source(), f.target()), flatten(f.f()));
  if (!sol) return std::nullopt;
  return unflatten(sol->x, f.target().rank(), f.source().rank());
}

std::optional<ProjectiveFactorization> factors_through_projective(const DiffMorphism& f) {
  const NormalForm ns = normalize(f.source());
  const NormalForm nt = normalize(f.target());
  const std::size_t is = ns.im_rank, ks = ns.ker_rank;
  const std::size_t it = nt.im_rank, kt = nt.ker_rank;
  const IntMatrix& mu = ns.mu;
  const IntMatrix& mu_t = nt.mu;

  const IntMatrix g = nt.certificate * f.f() * inverse_unimodular(ns.certificate);
  const IntMatrix a = g.block(0, 0, it, is);
  const IntMatrix c = g.block(it, 0, kt, is);
  const IntMatrix b = g.block(it, is, kt, ks);

  // y : Ker e -> Im e' with y mu = a and mu' y = b.
  const IntMatrix y_op = vstack(sandwich_operator(IntMatrix::identity(it), mu),
                                sandwich_operator(mu_t, IntMatrix::identity(ks)));
  const auto y_sol = solve_linear(y_op, concat(flatten(a), flatten(b)));
  if (!y_sol) return std::nullopt;
  const IntMatrix y = unflatten(y_sol->x, it, ks);

  // c = w mu + mu' x with x : Im e -> Im e', w : Ker e -> Ker e'.
  const IntMatrix xw_op = hstack(sandwich_operator(mu_t, IntMatrix::identity(is)),
                                 sandwich_operator(IntMatrix::identity(kt), mu));
  const auto xw_sol = solve_linear(xw_op, flatten(c));
  if (!xw_sol) return std::nullopt;
  const std::span<const Int> xw(xw_sol->x);
  const IntMatrix x = unflatten(xw.subspan(0, it * is), it, is);
  const IntMatrix w = unflatten(xw.subspan(it * is, kt * ks), kt, ks);

  IntMatrix alpha(2 * it + 2 * ks, is + ks);
  alpha.set_block(0, 0, y * mu);
  alpha.set_block(it, 0, x);
  alpha.set_block(it, is, y);
  alpha.set_block(2 * it, 0, mu);
  alpha.set_block(2 * it + ks, is, IntMatrix::identity(ks));

  IntMatrix beta(it + kt, 2 * it + 2 * ks);
  beta.set_block(0, 0, IntMatrix::identity(it));
  beta.set_block(it, it, mu_t);
  beta.set_block(it, 2 * it, w);

  ProjectiveFactorization p;
  p.through = direct_sum(DiffStructure::projective(it), DiffStructure::projective(ks));
  p.alpha = alpha * ns.certificate;
  p.beta = inverse_unimodular(nt.certificate) * beta;
  return p;
}

bool verify_factorization(const DiffMorphism& f, const ProjectiveFactorization& p) {
  if (p.alpha.rows() != p.through.rank() || p.alpha.cols() != f.source().rank()) return false;
  if (p.beta.rows() != f.target().rank() || p.beta.cols() != p.through.rank()) return false;
  return check_morphism(f.source(), p.through, p.alpha) &&
         check_morphism(p.through, f.target(), p.beta) && is_projective(p.through) &&
         p.beta * p.alpha == f.f();
}

// ---------------------------------------------------------------------------
// Ideals of C^b

namespace {

struct HomLayout {
  const BoundedComplex& x;
  const BoundedComplex& y;
  std::vector<std::size_t> offset;  // per source degree
  std::size_t dim = 0;

  HomLayout(const BoundedComplex& source, const BoundedComplex& target) : x(source), y(target) {
    if (x.is_zero()) return;
    for (int m = x.low_degree(); m <= x.high_degree(); ++m) {
      offset.push_back(dim);
      dim += x.rank_at(m) * y.rank_at(m);
    }
  }
  bool in_support(int m) const { return !x.is_zero() && m >= x.low_degree() && m <= x.high_degree(); }
  // Adds the component `block` in degree m to column `col` of `gens`.
  void place(IntMatrix& gens, std::size_t col, int m, const IntMatrix& block) const {
    const std::size_t off = offset[static_cast<std::size_t>(m - x.low_degree())];
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        gens(off + i * block.cols() + j, col) += block(i, j);
  }
};

// Null-homotopic maps: G : X^{j+1} -> Y^j contributes G d_X^j in degree j and
// d_Y^j G in degree j + 1.
IntMatrix proj_generators(const HomLayout& lay) {
  const BoundedComplex& x = lay.x;
  const BoundedComplex& y = lay.y;
  std::size_t count = 0;
  for (int j = x.low_degree() - 1; j < x.high_degree(); ++j)
    count += x.rank_at(j + 1) * y.rank_at(j);
  IntMatrix gens(lay.dim, count);
  std::size_t col = 0;
  for (int j = x.low_degree() - 1; j < x.high_degree(); ++j) {
    const std::size_t rows = y.rank_at(j), cols = x.rank_at(j + 1);
    const IntMatrix dx = x.differential_at(j);
    const IntMatrix dy = y.differential_at(j);
    for (std::size_t p = 0; p < rows; ++p)
      for (std::size_t q = 0; q < cols; ++q, ++col) {
        IntMatrix g(rows, cols);
        g(p, q) = 1;
        if (lay.in_support(j)) lay.place(gens, col, j, g * dx);
        lay.place(gens, col, j + 1, dy * g);
      }
  }
  return gens;
}

// Maps through a stalk in degree j: g f with d_Y^j g = 0 and f d_X^{j-1} = 0.
IntMatrix stalk_generators(const HomLayout& lay) {
  const BoundedComplex& x = lay.x;
  const BoundedComplex& y = lay.y;
  std::vector<IntMatrix> blocks;
  if (!x.is_zero())
    for (int j = x.low_degree(); j <= x.high_degree(); ++j) {
      const IntMatrix s = kernel_basis(y.differential_at(j));
      const IntMatrix w = kernel_basis(x.differential_at(j - 1).transpose());
      IntMatrix gens(lay.dim, s.cols() * w.cols());
      std::size_t col = 0;
      for (std::size_t p = 0; p < s.cols(); ++p)
        for (std::size_t q = 0; q < w.cols(); ++q, ++col)
          lay.place(gens, col, j, s.columns(p, 1) * w.columns(q, 1).transpose());
      blocks.push_back(std::move(gens));
    }
  IntMatrix all(lay.dim, 0);
  for (const auto& b : blocks) all = hstack(all, b);
  return all;
}

}  // namespace

Lattice hom_lattice(const BoundedComplex& x, const BoundedComplex& y) {
  return Lattice::from_columns(chain_map_basis(x, y));
}

Lattice ideal_lattice(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec) {
  const HomLayout lay(x, y);
  IntMatrix gens(lay.dim, 0);
  if (contains_proj(spec)) gens = hstack(gens, proj_generators(lay));
  if (contains_stalk(spec)) gens = hstack(gens, stalk_generators(lay));
  return Lattice::from_columns(gens);
}

bool in_ideal(const ChainMap& f, IdealSpec spec) {
  if (spec == IdealSpec::None) return f.is_zero();
  return ideal_lattice(f.source(), f.target(), spec).contains(f.flatten());
}

bool in_ideal(const OrbitMorphism& f, IdealSpec spec) {
  for (const auto& [i, c] : f.components())
    if (!in_ideal(c, spec)) return false;
  return true;
}

GroupInvariants hom_quotient(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec,
                             bool orbit) {
  if (!orbit) return quotient_invariants(hom_lattice(x, y), ideal_lattice(x, y, spec));
  GroupInvariants total;
  const auto range = shift_range(x, y);
  if (!range) return total;
  for (int i = range->first; i <= range->second; ++i) {
    const BoundedComplex yi = shift(y, i);
    total = total.merged(quotient_invariants(hom_lattice(x, yi), ideal_lattice(x, yi, spec)));
  }
  return total;
}

std::size_t hom_rank_quotient(const BoundedComplex& x, const BoundedComplex& y, IdealSpec spec,
                              bool orbit) {
  return hom_quotient(x, y, spec, orbit).free_rank;
}

GroupInvariants diff_homotopy_quotient(const DiffStructure& source, const DiffStructure& target) {
  const Lattice all = Lattice::from_columns(intertwiner_basis(source, target));
  const Lattice null = Lattice::from_columns(homotopy_operator(source, target));
  return quotient_invariants(all, null);
}

bool iso_in_bottom(const SubgroupEmbedding& e1, const SubgroupEmbedding& e2) {
  return cokernel_torsion(e1) == cokernel_torsion(e2);
}

}  // namespace dualz
