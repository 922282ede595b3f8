#include "extsq/stabilizer.hpp"

#include "extsq/exterior.hpp"

namespace extsq {

namespace {

const Ring& ring_of(const std::vector<RingElem>& v) {
  if (v.empty()) throw Error(ErrorKind::dimension_mismatch, "empty coordinate vector");
  return v.front().ring();
}

}  // namespace

ElemWord t_star_col(int j, const ColumnVector& w) {
  if (w.n < 3) throw Error(ErrorKind::rank_too_small, "rank too small");
  if (j < 1 || j > w.n) throw Error(ErrorKind::bad_index, "bad column index");
  ElemWord out{w.n, {}};
  for (int s = 1; s <= w.n; ++s) {
    if (s == j) continue;
    out.letters.push_back({s, j, w.oriented(s, j)});
  }
  return out;
}

RingElem z_term(int p, int q, int j, const ColumnVector& w) {
  if (p == q || p == j || q == j) throw Error(ErrorKind::bad_index, "z_term needs distinct p, q, j");
  auto at = [&](int a, int b) { return w[canon(a, b, w.n).first]; };
  const int first = sign(p, q) * sign(j, q) * sign(p, j);
  const int second = sign(q, p) * sign(j, p) * sign(q, j);
  RingElem x = at(p, j) * at(j, q);
  RingElem y = at(q, j) * at(j, p);
  return (first > 0 ? x : -x) + (second > 0 ? y : -y);
}

ElemWord t_star_row(int i, const RowVector& z) {
  if (z.n < 3) throw Error(ErrorKind::rank_too_small, "rank too small");
  if (i < 1 || i > z.n) throw Error(ErrorKind::bad_index, "bad row index");
  ElemWord out{z.n, {}};
  for (int s = 1; s <= z.n; ++s) {
    if (s == i) continue;
    out.letters.push_back({i, s, z.oriented(i, s)});
  }
  return out;
}

ElemWord t_one(const ColumnVector& w) {
  if (w.n < 5) throw Error(ErrorKind::rank_too_small, "rank too small (T_1 needs n >= 5)");
  if (!column_satisfies(w)) throw Error(ErrorKind::not_wedge_column, "not a wedge-square column");
  return ElemWord{w.n,
                  {{2, 3, w[{4, 5}]}, {2, 4, -w[{3, 5}]}, {2, 5, w[{3, 4}]}}};
}

ColumnVector act(const ElemWord& word, const ColumnVector& w) {
  validate(word);
  ColumnVector out = w;
  const Ring& ring = ring_of(w.entries);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    auto t = ext_transvection(it->i, it->j, it->xi, word.n);
    for (auto lt = t.letters.rbegin(); lt != t.letters.rend(); ++lt) {
      require_same_ring(ring, lt->xi.ring());
      out[lt->row] += lt->xi * out[lt->col];
    }
  }
  return out;
}

RowVector act(const RowVector& z, const ElemWord& word) {
  validate(word);
  RowVector out = z;
  const Ring& ring = ring_of(z.entries);
  for (const auto& letter : word.letters) {
    auto t = ext_transvection(letter.i, letter.j, letter.xi, word.n);
    for (const auto& lt : t.letters) {
      require_same_ring(ring, lt.xi.ring());
      out[lt.col] += out[lt.row] * lt.xi;
    }
  }
  return out;
}

}  // namespace extsq
