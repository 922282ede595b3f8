#pragma once

// Combinatorics of the basis e_i ^ e_j (i < j) of the exterior square.
//
// Pairs are enumerated lexicographically: {1,2}, {1,3}, ..., {n-1,n}; this
// order fixes the row/column order of every C(n,2) x C(n,2) matrix.

#include <array>
#include <compare>
#include <utility>
#include <vector>

namespace extsq {

struct Index2 {
  int i1 = 1;
  int i2 = 2;

  auto operator<=>(const Index2&) const = default;
  bool contains(int x) const { return i1 == x || i2 == x; }
  // The element of the pair that is not `x`; `x` must be a member.
  int other(int x) const { return i1 == x ? i2 : i1; }
};

struct Index3 {
  std::array<int, 3> v{};
  auto operator<=>(const Index3&) const = default;
};

struct Index4 {
  std::array<int, 4> v{};
  auto operator<=>(const Index4&) const = default;
};

// sign(i, j) = +1 if i < j, -1 if i > j.
int sign(int i, int j);

// Sorted pair and sign(i, j). Error(bad_index) on i == j or out of range.
std::pair<Index2, int> canon(int i, int j, int n);
// Sorted pair without range checking against n.
Index2 make_pair_index(int i, int j);

int pair_count(int n);  // C(n, 2)
// The unique n >= 2 with C(n,2) == dim; Error(dimension_mismatch) otherwise.
int ambient_rank(int dim);

int rank(Index2 index, int n);
Index2 unrank(int position, int n);

int height(Index2 a, Index2 b);

// Sign of the permutation sorting (b1, b2, d1, d2); Error(bad_index) when
// the pairs overlap.
int shuffle_sign(Index2 b, Index2 d);

bool valid(Index2 index, int n);
Index3 make_index3(int a, int b, int c);
Index4 make_index4(int a, int b, int c, int d);

std::vector<Index2> all_pairs(int n);
std::vector<Index3> all_triples(int n);
std::vector<Index4> all_quads(int n);

// The three unordered splittings of a 4-set into two pairs, each listed in
// both orders: six (B, D) with B and D disjoint and B u D = h.
std::array<std::pair<Index2, Index2>, 6> splittings(const Index4& h);

}  // namespace extsq
