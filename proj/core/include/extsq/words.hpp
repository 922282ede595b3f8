#pragma once

// Words in exterior transvections wedge2 t_{i,j}(xi) and products of
// elementary conjugates g^{+-h} = h^{-1} g^{+-1} h.
//
// Words are never reduced: the number of letters and terms is part of what
// the decomposition engine promises, so every operation keeps them verbatim.

#include <cstddef>
#include <vector>

#include "extsq/linalg.hpp"

namespace extsq {

// One exterior letter wedge2 t_{i,j}(xi), 1 <= i != j <= n.
struct ElemLetter {
  int i = 1;
  int j = 2;
  RingElem xi;

  friend bool operator==(const ElemLetter& a, const ElemLetter& b) {
    return a.i == b.i && a.j == b.j && a.xi == b.xi;
  }
};

struct ElemWord {
  int n = 0;
  std::vector<ElemLetter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const ElemWord&, const ElemWord&) = default;
};

ElemWord single_letter(int i, int j, const RingElem& xi, int n);
ElemWord concat(const ElemWord& a, const ElemWord& b);
// Letters reversed, each xi negated.
ElemWord elem_invert(const ElemWord& w);
void validate(const ElemWord& w);

// The C(n,2) x C(n,2) matrix of the word with its inverse.
InvPair elem_eval(const ElemWord& w, const Ring& ring);
// m <- eval(w) * m, via row operations.
void apply_left(const ElemWord& w, Matrix& m);
// m <- m * eval(w), via column operations.
void apply_right(Matrix& m, const ElemWord& w);

// g^{eps} conjugated on the right by h: h^{-1} g^{eps} h.
struct ConjTerm {
  int eps = 1;
  ElemWord h;

  friend bool operator==(const ConjTerm&, const ConjTerm&) = default;
};

struct ConjWord {
  int n = 0;
  std::vector<ConjTerm> terms;

  std::size_t size() const noexcept { return terms.size(); }
  friend bool operator==(const ConjWord&, const ConjWord&) = default;
};

Matrix conj_eval(const ConjWord& w, const InvPair& g);
// Terms reversed and each eps flipped; same length, evaluates to the inverse.
ConjWord conj_invert(const ConjWord& w);
ConjWord conj_concat(const ConjWord& a, const ConjWord& b);
// Replaces every conjugator h with prefix * h * suffix. If w evaluates to y
// for g' = prefix^{-1} g prefix, the result evaluates to suffix^{-1} y suffix
// for g; the length is unchanged.
ConjWord reconjugate(const ConjWord& w, const ElemWord& prefix, const ElemWord& suffix);

}  // namespace extsq
