#include "dualz/normal_form.hpp"

#include <optional>
#include <utility>

#include "dualz/errors.hpp"

namespace dualz {
namespace {

// Zeroes entry (i, c) against the pivot at (t, c) with a determinant-one
// row transform, mirrored on the left transform U.
void eliminate_below(IntMatrix& d, IntMatrix& u, std::size_t t, std::size_t i, std::size_t c) {
  const Int a = d(t, c);
  const Int b = d(i, c);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Int q = -(b / a);
    d.add_row_multiple(i, t, q);
    u.add_row_multiple(i, t, q);
    return;
  }
  const auto [g, s, x] = xgcd(a, b);
  const Int r = -(b / g);
  const Int w = a / g;
  d.combine_rows(t, i, s, x, r, w);
  u.combine_rows(t, i, s, x, r, w);
}

void eliminate_right(IntMatrix& d, IntMatrix& v, std::size_t t, std::size_t j) {
  const Int a = d(t, t);
  const Int b = d(t, j);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Int q = -(b / a);
    d.add_col_multiple(j, t, q);
    v.add_col_multiple(j, t, q);
    return;
  }
  const auto [g, s, x] = xgcd(a, b);
  const Int r = -(b / g);
  const Int w = a / g;
  d.combine_cols(t, j, s, x, r, w);
  v.combine_cols(t, j, s, x, r, w);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      if (!best || mpz_cmpabs(d(i, j).get_mpz_t(), d(best->first, best->second).get_mpz_t()) < 0) best = {{i, j}};
    }
  return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && sgn(D(r, r)) != 0) ++r;
  return r;
}

IntVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    const auto pivot = smallest_entry(d, t);
    if (!pivot) break;
    d.swap_rows(t, pivot->first);
    u.swap_rows(t, pivot->first);
    d.swap_cols(t, pivot->second);
    v.swap_cols(t, pivot->second);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) eliminate_below(d, u, t, i, t);
      for (std::size_t j = t + 1; j < n; ++j) eliminate_right(d, v, t, j);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m && column_clear; ++i) column_clear = sgn(d(i, t)) == 0;
      if (!column_clear) continue;

      // The pivot must divide the whole trailing block; fold a witness row in
      // otherwise, which strictly lowers |pivot| on the next pass.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row_multiple(t, *bad_row, Int(1));
      u.add_row_multiple(t, *bad_row, Int(1));
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

std::size_t HermiteDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < H.cols() && !nonzero; ++j) nonzero = sgn(H(i, j)) != 0;
    if (!nonzero) break;
    ++r;
  }
  return r;
}

IntMatrix HermiteDecomposition::basis_rows() const { return H.row_range(0, rank()); }

HermiteDecomposition hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      if (sgn(h(r, c)) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      eliminate_below(h, u, r, i, c);
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      if (sgn(q) == 0) continue;
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(u), std::move(h)};
}

Int determinant(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.square()) return false;
  return abs(determinant(a)) == 1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.square()) throw InvalidStructureError("inverse of a non-square matrix");
  auto h = hnf(a);
  if (!(h.H == IntMatrix::identity(a.rows())))
    throw InvalidStructureError("matrix is not unimodular");
  return std::move(h.U);
}

}  // namespace dualz
