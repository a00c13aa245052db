#include "dualz/fuzz.hpp"

#include <algorithm>

#include "dualz/normal_form.hpp"

namespace dualz {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::size_t Rng::uniform_size(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry) {
  IntMatrix m(rows, cols);
  for (auto& x : m.entries()) x = rng.uniform(-max_entry, max_entry);
  return m;
}

Unimodular random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  Unimodular u{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 0) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t kind = rng.below(n > 1 ? 3 : 1);
    if (kind == 0) {
      const std::size_t a = rng.below(n);
      u.matrix.negate_row(a);
      for (std::size_t i = 0; i < n; ++i) u.inverse(i, a) = -u.inverse(i, a);
    } else if (kind == 1) {
      const std::size_t a = rng.below(n);
      std::size_t b = rng.below(n - 1);
      if (b >= a) ++b;
      u.matrix.swap_rows(a, b);
      u.inverse.swap_cols(a, b);
    } else {
      const std::size_t a = rng.below(n);
      std::size_t b = rng.below(n - 1);
      if (b >= a) ++b;
      const Int t = rng.chance(1, 2) ? 1 : -1;
      u.matrix.add_row_multiple(a, b, t);
      u.inverse.add_col_multiple(b, a, -t);
    }
  }
  return u;
}

namespace {

bool bounded(const IntMatrix& m, long max_entry) {
  for (const auto& x : m.entries())
    if (abs(x) > max_entry) return false;
  return true;
}

// An index pair a != b below n.
std::pair<std::size_t, std::size_t> distinct_pair(Rng& rng, std::size_t n) {
  const std::size_t a = rng.below(n);
  std::size_t b = rng.below(n - 1);
  if (b >= a) ++b;
  return {a, b};
}

IntVector random_divisors(Rng& rng, std::size_t k, long max_entry) {
  IntVector d;
  const long cap = std::max(1L, std::min(max_entry, 12L));
  for (std::size_t i = 0; i < k; ++i) d.push_back(rng.chance(1, 4) ? Int(1) : Int(rng.uniform(1, cap)));
  return d;
}

}  // namespace

SubgroupEmbedding random_embedding(Rng& rng, const EmbeddingParams& p) {
  const std::size_t n = rng.uniform_size(p.allow_zero ? 0 : 1, std::max<std::size_t>(1, p.max_rank));
  const std::size_t k = p.full_rank ? n : rng.uniform_size(0, n);
  IntMatrix m = IntMatrix::diagonal(random_divisors(rng, k, p.max_entry), n, k);
  const std::size_t steps = 3 * (n + k);
  for (std::size_t s = 0; s < steps; ++s) {
    const bool rows = k < 2 || rng.chance(1, 2);
    const std::size_t dim = rows ? n : k;
    if (dim < 2) continue;
    const auto [a, b] = distinct_pair(rng, dim);
    const Int t = rng.chance(1, 2) ? 1 : -1;
    IntMatrix next = m;
    if (rows)
      next.add_row_multiple(a, b, t);
    else
      next.add_col_multiple(a, b, t);
    if (bounded(next, p.max_entry)) m = std::move(next);
  }
  return SubgroupEmbedding::make(n, std::move(m));
}

DiffStructure random_diff_structure(Rng& rng, std::size_t max_rank, long max_entry) {
  const std::size_t n = rng.uniform_size(1, std::max<std::size_t>(1, max_rank));
  const std::size_t r = rng.uniform_size(0, n / 2);
  IntMatrix e(n, n);
  const IntVector mu = random_divisors(rng, r, max_entry);
  for (std::size_t i = 0; i < r; ++i) e(r + i, i) = mu[i];
  if (n < 2) return DiffStructure::make(n, std::move(e));
  for (std::size_t s = 0; s < 4 * n; ++s) {
    // e <- E e E^-1 with E = I + t e_ab
    const auto [a, b] = distinct_pair(rng, n);
    const Int t = rng.chance(1, 2) ? 1 : -1;
    IntMatrix next = e;
    next.add_row_multiple(a, b, t);
    next.add_col_multiple(b, a, -t);
    if (bounded(next, max_entry)) e = std::move(next);
  }
  return DiffStructure::make(n, std::move(e));
}

IntMatrix random_intertwiner(Rng& rng, const DiffStructure& source, const DiffStructure& target,
                             long coeff) {
  const IntMatrix basis = intertwiner_basis(source, target);
  IntVector v(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const Int c = rng.uniform(-coeff, coeff);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * basis(i, j);
  }
  return unflatten(v, target.rank(), source.rank());
}

IntMatrix random_null_homotopic(Rng& rng, const DiffStructure& source,
                                const DiffStructure& target, long max_entry) {
  const IntMatrix h = random_matrix(rng, target.rank(), source.rank(), max_entry);
  return h * source.e() + target.e() * h;
}

BoundedComplex random_complex(Rng& rng, const ComplexParams& p) {
  const std::size_t len = rng.uniform_size(1, std::max<std::size_t>(1, p.max_length));
  const int low = static_cast<int>(rng.uniform(p.min_low, p.max_low));
  std::vector<std::size_t> ranks(len);
  for (auto& r : ranks) r = rng.uniform_size(1, std::max<std::size_t>(1, p.max_rank));
  // r[t] = rank of the part of X^t mapping injectively into X^{t+1}.
  std::vector<std::size_t> im(len, 0);
  for (std::size_t t = len - 1; t-- > 0;)
    im[t] = rng.uniform_size(0, std::min(ranks[t], ranks[t + 1] - im[t + 1]));

  std::vector<Width2Summand> pieces;
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t k = ranks[t] - im[t];
    const std::size_t a = t == 0 ? 0 : im[t - 1];
    if (k == 0) continue;
    pieces.push_back({low + int(t), SubgroupEmbedding::make(
                                        k, IntMatrix::diagonal(random_divisors(rng, a, p.max_entry), k, a))});
  }
  BoundedComplex base = assemble_width2(pieces);
  if (base.is_zero()) return base;

  std::vector<IntMatrix> d = base.differentials();
  const std::vector<std::size_t>& rk = base.ranks();
  const std::size_t total_steps = 3 * base.total_rank();
  for (std::size_t s = 0; s < total_steps; ++s) {
    const std::size_t t = rng.below(rk.size());
    if (rk[t] < 2) continue;
    // Base change E = I + c e_ab in degree t: d^{t-1} <- E d^{t-1}, d^t <- d^t E^-1.
    const auto [a, b] = distinct_pair(rng, rk[t]);
    const Int c = rng.chance(1, 2) ? 1 : -1;
    IntMatrix before = t > 0 ? d[t - 1] : IntMatrix();
    IntMatrix after = t < d.size() ? d[t] : IntMatrix();
    if (t > 0) before.add_row_multiple(a, b, c);
    if (t < d.size()) after.add_col_multiple(b, a, -c);
    if ((t > 0 && !bounded(before, p.max_entry)) || (t < d.size() && !bounded(after, p.max_entry)))
      continue;
    if (t > 0) d[t - 1] = std::move(before);
    if (t < d.size()) d[t] = std::move(after);
  }
  return BoundedComplex::make(base.low_degree(), rk, std::move(d));
}

BoundedComplex random_width2(Rng& rng, const ComplexParams& p) {
  const SubgroupEmbedding e = random_embedding(rng, {p.max_rank, p.max_entry, false, false});
  return BoundedComplex::from_embedding(e, static_cast<int>(rng.uniform(p.min_low, p.max_low)));
}

ChainMap random_chain_map(Rng& rng, const BoundedComplex& x, const BoundedComplex& y, long coeff) {
  const IntMatrix basis = chain_map_basis(x, y);
  IntVector v(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const Int c = rng.uniform(-coeff, coeff);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * basis(i, j);
  }
  return ChainMap::unflatten(x, y, v);
}

OrbitMorphism random_orbit_morphism(Rng& rng, const BoundedComplex& x, const BoundedComplex& y,
                                    long coeff) {
  OrbitMorphism f(x, y);
  const auto range = shift_range(x, y);
  if (!range) return f;
  for (int i = range->first; i <= range->second; ++i)
    if (rng.chance(2, 3)) f.add(i, random_chain_map(rng, x, shift(y, i), coeff));
  return f;
}

IntVector random_lattice_vector(Rng& rng, const Lattice& l, long coeff) {
  IntVector v(l.ambient_dim());
  const IntMatrix& b = l.basis_rows();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const Int c = rng.uniform(-coeff, coeff);
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b(i, j);
  }
  return v;
}

}  // namespace dualz
