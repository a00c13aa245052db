#pragma once

#include <cstdint>
#include <random>

#include "dualz/complex.hpp"

namespace dualz {

/// Seeded generator whose streams are identical on every platform: the
/// engine is fully specified by the standard and the bounded draws avoid the
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  std::size_t uniform_size(std::size_t lo, std::size_t hi);
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-case seed derived from a run seed (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry);

struct Unimodular {
  IntMatrix matrix;
  IntMatrix inverse;
};
/// Product of `steps` random elementary operations, with its inverse.
Unimodular random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

struct EmbeddingParams {
  std::size_t max_rank = 4;
  long max_entry = 9;
  bool full_rank = false;
  bool allow_zero = false;  // permit ambient rank 0
};
/// Diagonal object with random divisors, scrambled by bounded basis changes
/// on both sides.
SubgroupEmbedding random_embedding(Rng& rng, const EmbeddingParams& p);

/// Random normal form conjugated by bounded elementary operations.
DiffStructure random_diff_structure(Rng& rng, std::size_t max_rank, long max_entry);
/// Integer combination of the intertwiner basis with coefficients in [-coeff, coeff].
IntMatrix random_intertwiner(Rng& rng, const DiffStructure& source, const DiffStructure& target,
                             long coeff);
/// h e + e' h for a random h.
IntMatrix random_null_homotopic(Rng& rng, const DiffStructure& source,
                                const DiffStructure& target, long max_entry);

struct ComplexParams {
  std::size_t max_length = 3;
  std::size_t max_rank = 4;
  long max_entry = 9;
  int min_low = -1;
  int max_low = 1;
};
/// Sum of random width-two pieces, scrambled degreewise within the entry bound.
BoundedComplex random_complex(Rng& rng, const ComplexParams& p);
/// (A ⊂ B) placed at a random low degree.
BoundedComplex random_width2(Rng& rng, const ComplexParams& p);

ChainMap random_chain_map(Rng& rng, const BoundedComplex& x, const BoundedComplex& y, long coeff);
OrbitMorphism random_orbit_morphism(Rng& rng, const BoundedComplex& x, const BoundedComplex& y,
                                    long coeff);
/// Random integer combination of lattice basis vectors.
IntVector random_lattice_vector(Rng& rng, const Lattice& l, long coeff);

}  // namespace dualz
