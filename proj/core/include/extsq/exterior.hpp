#pragma once

// The Cauchy-Binet homomorphism GL_n -> GL_{C(n,2)}, the expansion of an
// exterior transvection into n-2 elementary transvections of E_{C(n,2)},
// the monomial elements P_ij and the routes built from them.

#include <vector>

#include "extsq/indexing.hpp"
#include "extsq/linalg.hpp"
#include "extsq/words.hpp"

namespace extsq {

// Elementary transvection t_{row,col}(xi) of E_N, indexed by pairs.
struct Transvection {
  Index2 row;
  Index2 col;
  RingElem xi;
};

struct TransvectionWord {
  int n = 0;
  std::vector<Transvection> letters;
};

// One factor of an exterior transvection: t_{row,col}(sign * xi).
struct PatternEntry {
  Index2 row;
  Index2 col;
  int sign = 1;

  auto operator<=>(const PatternEntry&) const = default;
};

// For i < j this is
//   prod_{k<i} t_{ki,kj}(xi) * prod_{i<l<j} t_{il,lj}(-xi) * prod_{m>j} t_{im,jm}(xi);
// in general the factor for a not in {i,j} is
//   t_{{a,i},{a,j}}(sign(a,i) sign(a,j) xi), a ascending.
std::vector<PatternEntry> expansion_pattern(int i, int j, int n);
TransvectionWord expand_pattern(const std::vector<PatternEntry>& pattern, const RingElem& xi, int n);

// wedge2 t_{i,j}(xi) as a word of n-2 elementary transvections. The pattern
// for each rank n is certified against cauchy_binet over Z[xi] on first use.
TransvectionWord ext_transvection(int i, int j, const RingElem& xi, int n);

Matrix eval_transvections(const TransvectionWord& w, const Ring& ring);
void apply_left(const TransvectionWord& w, Matrix& m);
void apply_right(Matrix& m, const TransvectionWord& w);

// t_{i,j}(xi) in GL_n (1-based indices).
Matrix elementary(int n, int i, int j, const RingElem& xi);

// Matrix of 2x2 minors, rows and columns in lexicographic pair order.
Matrix cauchy_binet(const Matrix& x);

// wedge2 t_{i,j}(1) wedge2 t_{j,i}(-1) wedge2 t_{i,j}(1).
ElemWord p_element(int i, int j, int n, const Ring& ring);

// A product w of P-elements with  w wedge2 t_{2,3}(xi) w^{-1} = wedge2 t_{k,l}(xi).
// Shortest such product; three P-elements are needed only for (k,l) = (3,2).
ElemWord monomial_route_target(int k, int l, int n, const Ring& ring);

struct SourceRoute {
  ElemWord word;
  int sigma = 1;
};

// For height(I,J) = 1: a product w of at most three P-elements such that
// (w g w^{-1})_{13,12} = sigma * g_{I,J} for every g.
SourceRoute monomial_route_source(Index2 I, Index2 J, int n, const Ring& ring);

}  // namespace extsq
