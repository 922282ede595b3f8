#include "extsq/random.hpp"

#include <limits>

#include "extsq/exterior.hpp"

namespace extsq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

// Rejection sampling rather than std::uniform_int_distribution, whose output
// is implementation-defined; generated corpora must not depend on the stdlib.
std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::precondition, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

RingElem random_elem(Rng& rng, const Ring& ring, int bound) {
  switch (ring.kind()) {
    case RingKind::zmod:
      return ring.from_integer(mpz_class(static_cast<unsigned long>(rng.uniform(ring.modulus()))));
    case RingKind::poly_int: {
      RingElem out = ring.from_int(rng.range(-bound, bound));
      for (std::size_t v = 0; v < ring.variable_count(); ++v) out += ring.from_int(rng.range(-bound, bound)) * ring.variable(v);
      return out;
    }
    case RingKind::integer:
      break;
  }
  return ring.from_int(rng.range(-bound, bound));
}

RingElem random_nonzero(Rng& rng, const Ring& ring, int bound) {
  for (;;) {
    RingElem v = random_elem(rng, ring, bound);
    if (!v.is_zero()) return v;
  }
}

std::pair<int, int> random_letter_indices(Rng& rng, int n) {
  const int i = rng.range(1, n);
  int j = rng.range(1, n - 1);
  if (j >= i) ++j;
  return {i, j};
}

ElemWord random_elem_word(Rng& rng, int n, int length, const Ring& ring) {
  ElemWord w{n, {}};
  for (int t = 0; t < length; ++t) {
    auto [i, j] = random_letter_indices(rng, n);
    w.letters.push_back({i, j, random_elem(rng, ring)});
  }
  return w;
}

namespace {

template <class Accept, class Param>
InvPair transvection_product(Rng& rng, int n, int length, Matrix fwd, Matrix bwd, Accept accept, Param param) {
  for (int t = 0; t < length;) {
    auto [i, j] = random_letter_indices(rng, n);
    if (!accept(i, j)) continue;
    const RingElem xi = param();
    // fwd <- fwd * t_ij(xi), bwd <- t_ij(-xi) * bwd
    fwd.add_col_multiple(j - 1, i - 1, xi);
    bwd.add_row_multiple(i - 1, j - 1, -xi);
    ++t;
  }
  return InvPair::trusted(std::move(fwd), std::move(bwd));
}

}  // namespace

InvPair random_gl(Rng& rng, int n, int length, const Ring& ring) {
  return transvection_product(
      rng, n, length, Matrix::identity(n, ring), Matrix::identity(n, ring), [](int, int) { return true; },
      [&] { return random_elem(rng, ring); });
}

InvPair random_parabolic_gl(Rng& rng, int n, int length, const Ring& ring) {
  return transvection_product(
      rng, n, length, Matrix::identity(n, ring), Matrix::identity(n, ring),
      [](int i, int j) { return i <= 2 || j >= 3; }, [&] { return random_elem(rng, ring); });
}

InvPair random_scalar_congruent_gl(Rng& rng, int n, int length, const RingElem& c, std::uint64_t d) {
  const Ring& ring = c.ring();
  const RingElem cinv = ring.kind() == RingKind::zmod ? zmod_inverse(c) : c;
  if (ring.kind() != RingKind::zmod && !(c * c).is_one()) {
    throw Error(ErrorKind::non_unit, "scalar must be a unit");
  }
  const RingElem step = ring.from_integer(mpz_class(static_cast<unsigned long>(d)));
  return transvection_product(
      rng, n, length, Matrix::scalar(n, c), Matrix::scalar(n, cinv), [](int, int) { return true; },
      [&] { return step * random_elem(rng, ring); });
}

InvPair exterior_pair(const InvPair& x) { return InvPair::trusted(cauchy_binet(x.fwd()), cauchy_binet(x.bwd())); }

}  // namespace extsq
