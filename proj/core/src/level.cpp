#include "extsq/level.hpp"

#include <string>

namespace extsq {

std::vector<LevelGenerator> level_generators(const Matrix& g) {
  const int dim = g.dim();
  const int n = ambient_rank(dim);
  std::vector<LevelGenerator> out;
  out.reserve(static_cast<std::size_t>(dim) * dim - 1);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (r == c) continue;
      out.push_back({LevelKind::entry, unrank(r, n), unrank(c, n), g.at(r, c)});
    }
  }
  for (int r = 0; r + 1 < dim; ++r) {
    out.push_back({LevelKind::diagdiff, unrank(r, n), unrank(r + 1, n), g.at(r, r) - g.at(r + 1, r + 1)});
  }
  return out;
}

bool ideal_contains(const IdealSpec& ideal, const RingElem& x) {
  require_same_ring(ideal.ring, x.ring());
  if (ideal.ring.kind() == RingKind::poly_int) {
    throw Error(ErrorKind::undecidable, "membership undecidable in this artifact");
  }
  mpz_class d = ideal.ring.kind() == RingKind::zmod ? mpz_class(static_cast<unsigned long>(ideal.ring.modulus())) : 0;
  for (const auto& gen : ideal.generators) {
    require_same_ring(ideal.ring, gen.ring());
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), lift(gen).get_mpz_t());
  }
  const mpz_class v = lift(x);
  if (d == 0) return v == 0;
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

Matrix reduce_mod(const Matrix& g, std::uint64_t d) {
  if (d < 2) throw Error(ErrorKind::precondition, "reduction modulus must be at least 2");
  switch (g.ring().kind()) {
    case RingKind::poly_int:
      throw Error(ErrorKind::precondition, "reduction needs an integer or Z/mZ source");
    case RingKind::zmod:
      if (g.ring().modulus() % d != 0) {
        throw Error(ErrorKind::precondition,
                    "modulus " + std::to_string(d) + " does not divide " + std::to_string(g.ring().modulus()));
      }
      break;
    case RingKind::integer:
      break;
  }
  Ring target = Ring::zmod(d);
  Matrix out(g.dim(), target);
  for (int r = 0; r < g.dim(); ++r) {
    for (int c = 0; c < g.dim(); ++c) out.set(r, c, target.from_integer(lift(g.at(r, c))));
  }
  return out;
}

bool is_scalar(const Matrix& g) {
  for (const auto& gen : level_generators(g)) {
    if (!gen.value.is_zero()) return false;
  }
  return true;
}

const char* to_string(CongruenceClass c) {
  switch (c) {
    case CongruenceClass::principal:
      return "principal";
    case CongruenceClass::full:
      return "full";
    case CongruenceClass::neither:
      break;
  }
  return "neither";
}

CongruenceClass congruence_class(const Matrix& g, std::uint64_t d) {
  Matrix r = reduce_mod(g, d);
  if (r.is_identity()) return CongruenceClass::principal;
  return is_scalar(r) ? CongruenceClass::full : CongruenceClass::neither;
}

}  // namespace extsq
