#include "dualz/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {

BoundedComplex BoundedComplex::make(int low_degree, std::vector<std::size_t> ranks,
                                    std::vector<IntMatrix> differentials) {
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (differentials.size() != expected)
    throw DimensionError("complex with " + std::to_string(ranks.size()) + " terms needs " +
                         std::to_string(expected) + " differentials");
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    const IntMatrix& d = differentials[i];
    if (d.rows() != ranks[i + 1] || d.cols() != ranks[i])
      throw DimensionError("differential in degree " + std::to_string(low_degree + int(i)) +
                           " must be " + std::to_string(ranks[i + 1]) + "x" +
                           std::to_string(ranks[i]));
    if (i > 0 && !(d * differentials[i - 1]).is_zero())
      throw InvalidStructureError("differentials do not compose to zero at degree " +
                                  std::to_string(low_degree + int(i)));
  }

  std::size_t first = 0;
  while (first < ranks.size() && ranks[first] == 0) ++first;
  if (first == ranks.size()) return {};
  std::size_t last = ranks.size() - 1;
  while (ranks[last] == 0) --last;

  BoundedComplex x;
  x.low_ = low_degree + static_cast<int>(first);
  x.ranks_.assign(ranks.begin() + first, ranks.begin() + last + 1);
  x.differentials_.assign(differentials.begin() + first, differentials.begin() + last);
  return x;
}

BoundedComplex BoundedComplex::stalk(int degree, std::size_t rank) {
  return make(degree, {rank}, {});
}

BoundedComplex BoundedComplex::projective(int low_degree) {
  return make(low_degree, {1, 1}, {IntMatrix{{1}}});
}

BoundedComplex BoundedComplex::from_embedding(const SubgroupEmbedding& e, int low_degree) {
  return make(low_degree, {e.sub_rank(), e.ambient_rank()}, {e.matrix()});
}

std::size_t BoundedComplex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks_) t += r;
  return t;
}

std::size_t BoundedComplex::rank_at(int degree) const {
  if (is_zero() || degree < low_ || degree > high_degree()) return 0;
  return ranks_[static_cast<std::size_t>(degree - low_)];
}

IntMatrix BoundedComplex::differential_at(int degree) const {
  if (!is_zero() && degree >= low_ && degree < high_degree())
    return differentials_[static_cast<std::size_t>(degree - low_)];
  return IntMatrix(rank_at(degree + 1), rank_at(degree));
}

BoundedComplex shift(const BoundedComplex& x, int i) {
  if (x.is_zero()) return x;
  return BoundedComplex::make(x.low_degree() + i, x.ranks(), x.differentials());
}

BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.low_degree(), b.low_degree());
  const int hi = std::max(a.high_degree(), b.high_degree());
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int m = lo; m <= hi; ++m) {
    ranks.push_back(a.rank_at(m) + b.rank_at(m));
    if (m < hi) diffs.push_back(block_diag(a.differential_at(m), b.differential_at(m)));
  }
  return BoundedComplex::make(lo, std::move(ranks), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Chain maps

namespace {

void check_component_shapes(const BoundedComplex& source, const BoundedComplex& target,
                            const std::vector<IntMatrix>& components) {
  if (components.size() != source.ranks().size())
    throw DimensionError("chain map needs one component per source degree");
  for (std::size_t t = 0; t < components.size(); ++t) {
    const int m = source.low_degree() + static_cast<int>(t);
    if (components[t].rows() != target.rank_at(m) || components[t].cols() != source.rank_at(m))
      throw DimensionError("chain map component in degree " + std::to_string(m) + " must be " +
                           std::to_string(target.rank_at(m)) + "x" +
                           std::to_string(source.rank_at(m)));
  }
}

IntMatrix component_or_zero(const std::vector<IntMatrix>& comps, const BoundedComplex& source,
                            const BoundedComplex& target, int m) {
  if (source.is_zero() || m < source.low_degree() || m > source.high_degree())
    return IntMatrix(target.rank_at(m), source.rank_at(m));
  return comps[static_cast<std::size_t>(m - source.low_degree())];
}

}  // namespace

bool is_chain_map(const BoundedComplex& source, const BoundedComplex& target,
                  const std::vector<IntMatrix>& components) {
  check_component_shapes(source, target, components);
  if (source.is_zero()) return true;
  for (int m = source.low_degree(); m <= source.high_degree(); ++m) {
    const IntMatrix next = component_or_zero(components, source, target, m + 1);
    const IntMatrix cur = component_or_zero(components, source, target, m);
    if (!(next * source.differential_at(m) == target.differential_at(m) * cur)) return false;
  }
  return true;
}

ChainMap ChainMap::make(BoundedComplex source, BoundedComplex target,
                        std::vector<IntMatrix> components) {
  if (!is_chain_map(source, target, components))
    throw InvalidStructureError("components do not commute with the differentials");
  return ChainMap(std::move(source), std::move(target), std::move(components));
}

ChainMap ChainMap::zero(BoundedComplex source, BoundedComplex target) {
  std::vector<IntMatrix> comps;
  if (!source.is_zero())
    for (int m = source.low_degree(); m <= source.high_degree(); ++m)
      comps.emplace_back(target.rank_at(m), source.rank_at(m));
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

ChainMap ChainMap::identity(const BoundedComplex& x) {
  std::vector<IntMatrix> comps;
  for (auto r : x.ranks()) comps.push_back(IntMatrix::identity(r));
  return ChainMap(x, x, std::move(comps));
}

std::size_t hom_coordinate_dim(const BoundedComplex& source, const BoundedComplex& target) {
  std::size_t n = 0;
  if (source.is_zero()) return 0;
  for (int m = source.low_degree(); m <= source.high_degree(); ++m)
    n += source.rank_at(m) * target.rank_at(m);
  return n;
}

ChainMap ChainMap::unflatten(BoundedComplex source, BoundedComplex target, const IntVector& v) {
  if (v.size() != hom_coordinate_dim(source, target))
    throw DimensionError("chain map coordinate vector has the wrong length");
  std::vector<IntMatrix> comps;
  std::size_t off = 0;
  if (!source.is_zero())
    for (int m = source.low_degree(); m <= source.high_degree(); ++m) {
      const std::size_t r = target.rank_at(m), c = source.rank_at(m);
      comps.push_back(dualz::unflatten(std::span<const Int>(v).subspan(off, r * c), r, c));
      off += r * c;
    }
  return make(std::move(source), std::move(target), std::move(comps));
}

IntMatrix ChainMap::component_at(int degree) const {
  return component_or_zero(components_, source_, target_, degree);
}

bool ChainMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const IntMatrix& m) { return m.is_zero(); });
}

IntVector ChainMap::flatten() const {
  IntVector v;
  for (const auto& c : components_) {
    const auto f = dualz::flatten(c);
    v.insert(v.end(), f.begin(), f.end());
  }
  return v;
}

IntMatrix chain_map_basis(const BoundedComplex& source, const BoundedComplex& target) {
  const std::size_t dim = hom_coordinate_dim(source, target);
  if (dim == 0) return IntMatrix(0, 0);
  // Variable offsets per source degree.
  std::vector<std::size_t> offset;
  std::size_t off = 0;
  for (int m = source.low_degree(); m <= source.high_degree(); ++m) {
    offset.push_back(off);
    off += source.rank_at(m) * target.rank_at(m);
  }
  auto var_offset = [&](int m) { return offset[static_cast<std::size_t>(m - source.low_degree())]; };

  // One block of rows per square X^m -> Y^{m+1}: f^{m+1} d_X^m - d_Y^m f^m.
  std::vector<IntMatrix> blocks;
  for (int m = source.low_degree(); m <= source.high_degree(); ++m) {
    const std::size_t rows = target.rank_at(m + 1) * source.rank_at(m);
    if (rows == 0) continue;
    IntMatrix block(rows, dim);
    if (m + 1 <= source.high_degree() && source.rank_at(m + 1) > 0)
      block.set_block(0, var_offset(m + 1),
                      sandwich_operator(IntMatrix::identity(target.rank_at(m + 1)),
                                        source.differential_at(m)));
    if (target.rank_at(m) > 0)
      block.set_block(0, var_offset(m),
                      -sandwich_operator(target.differential_at(m),
                                         IntMatrix::identity(source.rank_at(m))));
    blocks.push_back(std::move(block));
  }
  IntMatrix constraints(0, dim);
  for (const auto& b : blocks) constraints = vstack(constraints, b);
  return kernel_basis(constraints);
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
  if (!(inner.target() == outer.source()))
    throw DimensionError("composition of chain maps with mismatched ends");
  std::vector<IntMatrix> comps;
  const BoundedComplex& x = inner.source();
  if (!x.is_zero())
    for (int m = x.low_degree(); m <= x.high_degree(); ++m)
      comps.push_back(outer.component_at(m) * inner.component_at(m));
  return ChainMap::make(x, outer.target(), std::move(comps));
}

ChainMap shift(const ChainMap& f, int i) {
  return ChainMap::make(shift(f.source(), i), shift(f.target(), i), f.components());
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw DimensionError("sum of chain maps with different ends");
  std::vector<IntMatrix> comps = a.components();
  for (std::size_t t = 0; t < comps.size(); ++t) comps[t] += b.components()[t];
  return ChainMap::make(a.source(), a.target(), std::move(comps));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw DimensionError("difference of chain maps with different ends");
  std::vector<IntMatrix> comps = a.components();
  for (std::size_t t = 0; t < comps.size(); ++t) comps[t] -= b.components()[t];
  return ChainMap::make(a.source(), a.target(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Orbit category

OrbitMorphism OrbitMorphism::from_chain_map(const ChainMap& f) {
  OrbitMorphism m(f.source(), f.target());
  m.add(0, f);
  return m;
}

void OrbitMorphism::add(int i, const ChainMap& f) {
  if (!(f.source() == source_) || !(f.target() == shift(target_, i)))
    throw DimensionError("orbit component " + std::to_string(i) + " has the wrong ends");
  auto it = components_.find(i);
  if (it == components_.end()) {
    if (!f.is_zero()) components_.emplace(i, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) components_.erase(it);
}

ChainMap OrbitMorphism::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return ChainMap::zero(source_, shift(target_, i));
}

OrbitMorphism operator+(const OrbitMorphism& a, const OrbitMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw DimensionError("sum of orbit morphisms with different ends");
  OrbitMorphism s = a;
  for (const auto& [i, f] : b.components()) s.add(i, f);
  return s;
}

OrbitMorphism operator-(const OrbitMorphism& a, const OrbitMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw DimensionError("difference of orbit morphisms with different ends");
  OrbitMorphism s = a;
  for (const auto& [i, f] : b.components()) s.add(i, ChainMap::zero(f.source(), f.target()) - f);
  return s;
}

OrbitMorphism compose(const OrbitMorphism& outer, const OrbitMorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw DimensionError("composition of orbit morphisms with mismatched ends");
  OrbitMorphism out(inner.source(), outer.target());
  for (const auto& [i, f] : inner.components())
    for (const auto& [j, g] : outer.components()) out.add(i + j, compose(shift(g, i), f));
  return out;
}

std::optional<std::pair<int, int>> shift_range(const BoundedComplex& x, const BoundedComplex& y) {
  if (x.is_zero() || y.is_zero()) return std::nullopt;
  return std::make_pair(x.low_degree() - y.high_degree(), x.high_degree() - y.low_degree());
}

std::vector<OrbitMorphism> orbit_hom_basis(const BoundedComplex& x, const BoundedComplex& y) {
  std::vector<OrbitMorphism> basis;
  const auto range = shift_range(x, y);
  if (!range) return basis;
  for (int i = range->first; i <= range->second; ++i) {
    const BoundedComplex yi = shift(y, i);
    const IntMatrix b = chain_map_basis(x, yi);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      OrbitMorphism m(x, y);
      m.add(i, ChainMap::unflatten(x, yi, b.col(j)));
      basis.push_back(std::move(m));
    }
  }
  return basis;
}

std::size_t orbit_hom_rank(const BoundedComplex& x, const BoundedComplex& y) {
  std::size_t r = 0;
  const auto range = shift_range(x, y);
  if (!range) return 0;
  for (int i = range->first; i <= range->second; ++i) r += chain_map_basis(x, shift(y, i)).cols();
  return r;
}

// ---------------------------------------------------------------------------
// Push-down

namespace {

// Offset of degree m inside the total group of x.
std::size_t total_offset(const BoundedComplex& x, int m) {
  std::size_t off = 0;
  for (int t = x.low_degree(); t < m; ++t) off += x.rank_at(t);
  return off;
}

}  // namespace

DiffStructure pushdown_eta(const BoundedComplex& x) {
  const std::size_t n = x.total_rank();
  IntMatrix e(n, n);
  if (!x.is_zero())
    for (int m = x.low_degree(); m < x.high_degree(); ++m)
      e.set_block(total_offset(x, m + 1), total_offset(x, m), x.differential_at(m));
  return DiffStructure::make(n, std::move(e));
}

DiffMorphism pushdown_eta(const OrbitMorphism& f) {
  const BoundedComplex& x = f.source();
  const BoundedComplex& y = f.target();
  IntMatrix g(y.total_rank(), x.total_rank());
  for (const auto& [i, c] : f.components())
    for (int m = x.low_degree(); m <= x.high_degree(); ++m) {
      const IntMatrix block = c.component_at(m);  // X^m -> Y^{m-i}
      if (block.empty()) continue;
      IntMatrix cur = g.block(total_offset(y, m - i), total_offset(x, m), block.rows(), block.cols());
      g.set_block(total_offset(y, m - i), total_offset(x, m), cur + block);
    }
  return DiffMorphism::make(pushdown_eta(x), pushdown_eta(y), std::move(g));
}

// ---------------------------------------------------------------------------
// Width-two splitting

Width2Decomposition decompose_width2(const BoundedComplex& x) {
  Width2Decomposition out;
  if (x.is_zero()) return out;
  const int lo = x.low_degree();
  const std::size_t len = x.ranks().size();

  // Columns of v[t]: r[t] complement vectors, then a basis of Ker d^m.
  std::vector<IntMatrix> v(len), v_inv(len);
  std::vector<std::size_t> r(len);
  for (std::size_t t = 0; t < len; ++t) {
    const auto s = snf(x.differential_at(lo + int(t)));
    r[t] = s.rank();
    v[t] = s.V;
    v_inv[t] = inverse_unimodular(s.V);
  }
  auto k = [&](std::size_t t) { return x.ranks()[t] - r[t]; };

  // mu[t] : C_t -> K_{t+1}, diagonalized: u2[t] mu[t] v2[t] = dd[t].
  std::vector<SmithDecomposition> s2(len);
  for (std::size_t t = 0; t + 1 < len; ++t) {
    const IntMatrix conj = v_inv[t + 1] * x.differential_at(lo + int(t)) * v[t];
    const IntMatrix mu = conj.block(r[t + 1], 0, k(t + 1), r[t]);
    IntMatrix expect(conj.rows(), conj.cols());
    expect.set_block(r[t + 1], 0, mu);
    if (!(conj == expect)) throw std::logic_error("decompose_width2: kernel basis is not closed");
    s2[t] = snf(mu);
  }
  s2[len - 1] = snf(IntMatrix(0, r[len - 1]));  // r at the top degree is 0

  std::vector<IntMatrix> diffs;
  for (std::size_t t = 0; t < len; ++t) {
    const IntMatrix left = inverse_unimodular(s2[t].V);
    const IntMatrix right = t == 0 ? IntMatrix::identity(k(0)) : s2[t - 1].U;
    out.certificate.push_back(block_diag(left, right) * v_inv[t]);
    if (t + 1 < len) {
      IntMatrix d(x.ranks()[t + 1], x.ranks()[t]);
      d.set_block(r[t + 1], 0, s2[t].D);
      diffs.push_back(std::move(d));
    }
    if (k(t) == 0) continue;
    const IntMatrix u = t == 0 ? IntMatrix(k(0), 0) : s2[t - 1].D;
    out.summands.push_back({lo + int(t), SubgroupEmbedding::make(k(t), u)});
  }
  out.normal = BoundedComplex::make(lo, x.ranks(), std::move(diffs));
  return out;
}

BoundedComplex assemble_width2(const std::vector<Width2Summand>& summands) {
  // Group summands by degree, direct-summing repeats.
  std::map<int, SubgroupEmbedding> by_degree;
  for (const auto& s : summands) {
    auto it = by_degree.find(s.degree);
    if (it == by_degree.end())
      by_degree.emplace(s.degree, s.embedding);
    else
      it->second = direct_sum(it->second, s.embedding);
  }
  if (by_degree.empty()) return {};
  const int lo = by_degree.begin()->first - 1;
  const int hi = by_degree.rbegin()->first;
  auto a_rank = [&](int m) -> std::size_t {  // A of the summand with B in degree m + 1
    auto it = by_degree.find(m + 1);
    return it == by_degree.end() ? 0 : it->second.sub_rank();
  };
  auto b_rank = [&](int m) -> std::size_t {
    auto it = by_degree.find(m);
    return it == by_degree.end() ? 0 : it->second.ambient_rank();
  };
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int m = lo; m <= hi; ++m) {
    ranks.push_back(a_rank(m) + b_rank(m));
    if (m == hi) break;
    IntMatrix d(a_rank(m + 1) + b_rank(m + 1), a_rank(m) + b_rank(m));
    if (auto it = by_degree.find(m + 1); it != by_degree.end())
      d.set_block(a_rank(m + 1), 0, it->second.matrix());
    diffs.push_back(std::move(d));
  }
  return BoundedComplex::make(lo, std::move(ranks), std::move(diffs));
}

GroupInvariants cohomology(const BoundedComplex& x, int degree) {
  const IntMatrix out = x.differential_at(degree);
  const IntMatrix in = x.differential_at(degree - 1);
  const IntMatrix ker = kernel_basis(out);
  if (ker.cols() == 0) return {};
  // Image of d^{degree-1} written in the kernel basis.
  IntMatrix coords(ker.cols(), in.cols());
  for (std::size_t j = 0; j < in.cols(); ++j) {
    const auto sol = solve_linear(ker, in.col(j));
    if (!sol) throw std::logic_error("cohomology: image not inside kernel");
    for (std::size_t i = 0; i < ker.cols(); ++i) coords(i, j) = sol->x[i];
  }
  return cokernel_invariants(coords);
}

FiniteAbGroupInv cohomology_torsion(const BoundedComplex& x) {
  FiniteAbGroupInv t;
  if (x.is_zero()) return t;
  for (int m = x.low_degree(); m <= x.high_degree(); ++m) t = t.merged(cohomology(x, m).torsion);
  return t;
}

}  // namespace dualz
