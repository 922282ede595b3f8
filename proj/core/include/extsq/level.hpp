#pragma once

// Upper level of an N x N matrix, reduction maps and congruence classes.

#include <cstdint>
#include <vector>

#include "extsq/indexing.hpp"
#include "extsq/linalg.hpp"

namespace extsq {

enum class LevelKind { entry, diagdiff };

struct LevelGenerator {
  LevelKind kind = LevelKind::entry;
  Index2 I;
  Index2 J;  // entry: the column; diagdiff: the successor of I in rank order
  RingElem value;

  friend bool operator==(const LevelGenerator&, const LevelGenerator&) = default;
};

// Off-diagonal entries in row-major order, then g_{I,I} - g_{I+1,I+1}.
// Exactly N^2 - 1 generators.
std::vector<LevelGenerator> level_generators(const Matrix& g);

struct IdealSpec {
  Ring ring;
  std::vector<RingElem> generators;
};

// Integer and Z/mZ only; Error(undecidable) for polynomial rings.
bool ideal_contains(const IdealSpec& ideal, const RingElem& x);

// Entrywise image in Z/dZ. For a Z/mZ source d must divide m.
Matrix reduce_mod(const Matrix& g, std::uint64_t d);

bool is_scalar(const Matrix& g);

enum class CongruenceClass { principal, full, neither };
const char* to_string(CongruenceClass c);

CongruenceClass congruence_class(const Matrix& g, std::uint64_t d);

}  // namespace extsq
