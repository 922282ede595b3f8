#pragma once

// Seeded generators for test matrices. A seed determines every draw; split()
// derives independent streams so trials can be generated in any order.

#include <cstdint>
#include <random>

#include "extsq/linalg.hpp"
#include "extsq/words.hpp"

namespace extsq {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  int range(int lo, int hi);
  // Independent child stream, a pure function of (seed, stream).
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Z/mZ: uniform residue. Z: uniform in [-bound, bound]. Z[x..]: a random
// integer combination of 1 and the variables with coefficients in that range.
RingElem random_elem(Rng& rng, const Ring& ring, int bound = 9);
// Same as random_elem but never zero.
RingElem random_nonzero(Rng& rng, const Ring& ring, int bound = 9);

// (i, j) uniform over ordered pairs of distinct indices in [1, n].
std::pair<int, int> random_letter_indices(Rng& rng, int n);

ElemWord random_elem_word(Rng& rng, int n, int length, const Ring& ring);

// x and x^{-1} in GL_n for x a product of `length` random elementary
// transvections t_{i,j}(xi).
InvPair random_gl(Rng& rng, int n, int length, const Ring& ring);

// As random_gl, restricted to transvections that keep span(e_1, e_2)
// invariant: x is block upper triangular with blocks {1,2} and {3..n}.
InvPair random_parabolic_gl(Rng& rng, int n, int length, const Ring& ring);

// c * y where y is a product of transvections whose parameters are multiples
// of d; x is congruent to the scalar c mod d. c must be a unit.
InvPair random_scalar_congruent_gl(Rng& rng, int n, int length, const RingElem& c, std::uint64_t d);

// cauchy_binet(x) paired with cauchy_binet(x^{-1}).
InvPair exterior_pair(const InvPair& x);

}  // namespace extsq
