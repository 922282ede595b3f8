#include "extsq/words.hpp"

#include <string>

#include "extsq/exterior.hpp"
#include "extsq/indexing.hpp"

namespace extsq {

ElemWord single_letter(int i, int j, const RingElem& xi, int n) { return ElemWord{n, {ElemLetter{i, j, xi}}}; }

ElemWord concat(const ElemWord& a, const ElemWord& b) {
  if (a.n != b.n) throw Error(ErrorKind::dimension_mismatch, "words over different ranks");
  ElemWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

ElemWord elem_invert(const ElemWord& w) {
  ElemWord out{w.n, {}};
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(ElemLetter{it->i, it->j, -it->xi});
  }
  return out;
}

void validate(const ElemWord& w) {
  for (const auto& l : w.letters) {
    if (l.i == l.j || l.i < 1 || l.j < 1 || l.i > w.n || l.j > w.n) {
      throw Error(ErrorKind::bad_index, "invalid letter (" + std::to_string(l.i) + "," + std::to_string(l.j) +
                                            ") for n=" + std::to_string(w.n));
    }
  }
}

namespace {

void check_shape(const ElemWord& w, const Matrix& m) {
  if (m.dim() != pair_count(w.n)) {
    throw Error(ErrorKind::dimension_mismatch, "word of rank " + std::to_string(w.n) + " against a " +
                                                   std::to_string(m.dim()) + "x" + std::to_string(m.dim()) +
                                                   " matrix");
  }
}

}  // namespace

void apply_left(const ElemWord& w, Matrix& m) {
  validate(w);
  check_shape(w, m);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    apply_left(ext_transvection(it->i, it->j, it->xi, w.n), m);
  }
}

void apply_right(Matrix& m, const ElemWord& w) {
  validate(w);
  check_shape(w, m);
  for (const auto& l : w.letters) apply_right(m, ext_transvection(l.i, l.j, l.xi, w.n));
}

InvPair elem_eval(const ElemWord& w, const Ring& ring) {
  int dim = pair_count(w.n);
  Matrix fwd = Matrix::identity(dim, ring);
  Matrix bwd = Matrix::identity(dim, ring);
  apply_right(fwd, w);
  apply_right(bwd, elem_invert(w));
  return InvPair::trusted(std::move(fwd), std::move(bwd));
}

Matrix conj_eval(const ConjWord& w, const InvPair& g) {
  if (g.dim() != pair_count(w.n)) throw Error(ErrorKind::dimension_mismatch, "conjugate word rank does not match g");
  Matrix acc = Matrix::identity(g.dim(), g.ring());
  bool first = true;
  for (const auto& t : w.terms) {
    if (t.eps != 1 && t.eps != -1) throw Error(ErrorKind::precondition, "eps must be +1 or -1");
    Matrix term = t.eps > 0 ? g.fwd() : g.bwd();
    apply_left(elem_invert(t.h), term);
    apply_right(term, t.h);
    if (first) {
      acc = std::move(term);
      first = false;
    } else {
      acc = acc * term;
    }
  }
  return acc;
}

ConjWord conj_invert(const ConjWord& w) {
  ConjWord out{w.n, {}};
  out.terms.reserve(w.size());
  for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) out.terms.push_back(ConjTerm{-it->eps, it->h});
  return out;
}

ConjWord conj_concat(const ConjWord& a, const ConjWord& b) {
  if (a.n != b.n) throw Error(ErrorKind::dimension_mismatch, "conjugate words over different ranks");
  ConjWord out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

ConjWord reconjugate(const ConjWord& w, const ElemWord& prefix, const ElemWord& suffix) {
  ConjWord out{w.n, {}};
  out.terms.reserve(w.size());
  for (const auto& t : w.terms) out.terms.push_back(ConjTerm{t.eps, concat(concat(prefix, t.h), suffix)});
  return out;
}

}  // namespace extsq
