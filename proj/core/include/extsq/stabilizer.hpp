#pragma once

// Elements of the exterior elementary group that fix a given column (or row)
// of an N x N matrix.

#include "extsq/pluecker.hpp"
#include "extsq/words.hpp"

namespace extsq {

// T_{*,j} = prod_{s != j} wedge2 t_{s,j}(sign(s,j) w_{sj}); fixes every w.
ElemWord t_star_col(int j, const ColumnVector& w);

// Increment T_{*,j} adds to coordinate {p,q}:
//   sign(pq,jq) sign(p,j) w_pj w_jq + sign(qp,jp) sign(q,j) w_qj w_jp
// with sign(ab,cd) = sign(a,b) sign(c,d) and canonical coordinates.
RingElem z_term(int p, int q, int j, const ColumnVector& w);

// T_{i,*} = prod_{s != i} wedge2 t_{i,s}(sign(i,s) z_is); z * T_{i,*} = z.
ElemWord t_star_row(int i, const RowVector& z);

// T_1 = wedge2 t_{2,3}(w_45) wedge2 t_{2,4}(-w_35) wedge2 t_{2,5}(w_34).
// Requires n >= 5 and w satisfying the Plucker relations.
ElemWord t_one(const ColumnVector& w);

// eval(word) * w and z * eval(word), applied letter by letter.
ColumnVector act(const ElemWord& word, const ColumnVector& w);
RowVector act(const RowVector& z, const ElemWord& word);

}  // namespace extsq
