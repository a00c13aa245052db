#pragma once

// Brute-force reference computations used only by the tests. None of them
// go through the normal-form or lattice code of the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "dualz/complex.hpp"

namespace oracle {

using dualz::Int;
using dualz::IntMatrix;
using dualz::IntVector;

// Leibniz expansion of the determinant.
inline Int leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Int term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    fn(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

// gcd of all k x k minors.
inline Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
      IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rs[i], cs[j]);
      g = gcd(g, leibniz_det(minor));
    });
  });
  return g;
}

// d_k = D_k / D_{k-1}, zero once the minors vanish.
inline IntVector invariant_factors(const IntMatrix& a) {
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    const Int dk = determinantal_divisor(a, k);
    if (dk == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// All x in [-box, box]^cols with A x = b.
inline std::vector<IntVector> solutions_in_box(const IntMatrix& a, const IntVector& b, long box) {
  std::vector<IntVector> found;
  IntVector x(a.cols(), Int(-box));
  if (a.cols() == 0) {
    bool zero = std::all_of(b.begin(), b.end(), [](const Int& v) { return v == 0; });
    if (zero) found.push_back(x);
    return found;
  }
  while (true) {
    if (a * x == b) found.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == box) x[i++] = -box;
    if (i == x.size()) break;
    ++x[i];
  }
  return found;
}

// Maps through sums of stalks are exactly those killing the incoming
// differential and killed by the outgoing one, degree by degree.
inline bool stalk_ideal_member(const dualz::ChainMap& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  if (x.is_zero()) return true;
  for (int m = x.low_degree(); m <= x.high_degree(); ++m) {
    const IntMatrix c = f.component_at(m);
    if (!(c * x.differential_at(m - 1)).is_zero()) return false;
    if (!(y.differential_at(m) * c).is_zero()) return false;
  }
  return true;
}

// Torsion of Z^n / column span by determinantal divisors.
inline IntVector cokernel_torsion_factors(const IntMatrix& a) {
  IntVector t;
  for (const auto& d : invariant_factors(a))
    if (d >= 2) t.push_back(d);
  return t;
}

}  // namespace oracle
