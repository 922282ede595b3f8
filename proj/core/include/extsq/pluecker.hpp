#pragma once

// Plucker relations on bivector coordinates and the bilinear criterion for
// membership of an N x N matrix in the exterior square of GL_n.

#include <vector>

#include "extsq/indexing.hpp"
#include "extsq/linalg.hpp"

namespace extsq {

struct ColumnTag {};
struct RowTag {};

// C(n,2) coordinates indexed by pairs in lexicographic order.
template <class Role>
struct Coords {
  int n = 0;
  std::vector<RingElem> entries;

  const RingElem& operator[](Index2 I) const { return entries.at(static_cast<std::size_t>(rank(I, n))); }
  RingElem& operator[](Index2 I) { return entries.at(static_cast<std::size_t>(rank(I, n))); }
  // Oriented coordinate w_{ij} = sign(i,j) * w_{canon(i,j)}.
  RingElem oriented(int i, int j) const {
    auto [I, s] = canon(i, j, n);
    return s > 0 ? (*this)[I] : -(*this)[I];
  }
  friend bool operator==(const Coords&, const Coords&) = default;
};

using ColumnVector = Coords<ColumnTag>;
using RowVector = Coords<RowTag>;

ColumnVector column(const Matrix& g, Index2 J);
RowVector row(const Matrix& g, Index2 I);
ColumnVector zero_column(int n, const Ring& ring);

// f_{i,J}(w) = sign(i,j1) * sum_k (-1)^(k-1) w_{i,j_k} w_{J \ j_k}  with
// oriented w_{i,j_k} and J = {j1 < j2 < j3}; zero when i is in J. For i below
// or above all of J this is w_{j2j3} w_{j1 i} - w_{j1j3} w_{j2 i} + w_{j1j2} w_{j3 i}
// in canonical coordinates.
RingElem pluecker_poly(int i, const Index3& J, const ColumnVector& w);

// All short Plucker relations vanish on w.
bool column_satisfies(const ColumnVector& w);

using ShuffleSignFn = int (*)(Index2, Index2);

// sum over the six ordered splittings B u D = H of sign(B,D) g_{B,A} g_{D,C}.
RingElem a_sum(const Matrix& g, const Index4& H, Index2 A, Index2 C, ShuffleSignFn sign_fn = shuffle_sign);

// Both criterion families: a_sum vanishes whenever A and C meet, and
// shuffle_sign(A,C) * a_sum(A,C) depends only on A u C.
bool is_member(const Matrix& g, ShuffleSignFn sign_fn = shuffle_sign);

// For g whose column I is e_I: g_{K,J} = 0 for every K inside [n] \ I and
// every J with height(I,J) = 1. Error(precondition) if column I is not e_I.
bool parabolic_zero_check(const Matrix& g, Index2 I);

}  // namespace extsq
