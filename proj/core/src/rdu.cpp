#include "extsq/rdu.hpp"

#include <string>

#include "extsq/exterior.hpp"
#include "extsq/pluecker.hpp"
#include "extsq/stabilizer.hpp"

namespace extsq {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::h1_entry:
      return "h1-entry";
    case CaseTag::h0_entry:
      return "h0-entry";
    case CaseTag::h1_diag:
      return "h1-diag";
    case CaseTag::h0_diag:
      break;
  }
  return "h0-diag";
}

CaseTag case_tag_from_string(const std::string& text) {
  for (CaseTag t : {CaseTag::h1_entry, CaseTag::h0_entry, CaseTag::h1_diag, CaseTag::h0_diag}) {
    if (text == to_string(t)) return t;
  }
  throw Error(ErrorKind::parse, "unknown case tag '" + text + "'");
}

std::size_t expected_length(CaseTag tag) {
  switch (tag) {
    case CaseTag::h1_entry:
      return 8;
    case CaseTag::h0_entry:
      return 16;
    case CaseTag::h1_diag:
      return 24;
    case CaseTag::h0_diag:
      break;
  }
  return 48;
}

bool verify(const ConjWord& word, const InvPair& g, int k, int l, const RingElem& xi) {
  Matrix lhs = conj_eval(word, g);
  Matrix rhs = Matrix::identity(g.dim(), g.ring());
  apply_left(single_letter(k, l, xi, word.n), rhs);
  return lhs == rhs;
}

namespace {

using Certs = std::vector<Certificate>;

void check(Certs& certs, const std::string& name, bool ok) {
  certs.push_back({name, ok});
  if (!ok) throw Error(ErrorKind::proof_step, "proof-step violated: " + name);
}

void absorb(Certs& certs, const Certs& sub, const std::string& prefix) {
  for (const auto& c : sub) certs.push_back({prefix + c.name, c.ok});
}

int rank_of(const InvPair& g) {
  const int n = ambient_rank(g.dim());
  if (n < 4) throw Error(ErrorKind::rank_too_small, "rank: reverse decomposition needs n >= 4");
  return n;
}

void require_pairs(Index2 I, Index2 J, int k, int l, int n) {
  if (!valid(I, n) || !valid(J, n)) throw Error(ErrorKind::bad_index, "bad pair index");
  if (k == l || k < 1 || l < 1 || k > n || l > n) throw Error(ErrorKind::bad_index, "bad target (k,l)");
}

void require_height(Index2 I, Index2 J, int h) {
  if (height(I, J) != h) {
    throw Error(ErrorKind::height, "height: case needs height(I,J) = " + std::to_string(h));
  }
}

void require_member(const InvPair& g) {
  if (!is_member(g.fwd())) throw Error(ErrorKind::membership, "membership: g fails the exterior-square criterion");
}

RingElem entry(const InvPair& g, Index2 I, Index2 J, int n) { return g.fwd().at(rank(I, n), rank(J, n)); }

// w g w^{-1}
InvPair conjugate_by(const InvPair& g, const ElemWord& w) {
  const ElemWord wi = elem_invert(w);
  Matrix f = g.fwd();
  Matrix b = g.bwd();
  apply_left(w, f);
  apply_right(f, wi);
  apply_left(w, b);
  apply_right(b, wi);
  return InvPair::trusted(std::move(f), std::move(b));
}

bool column_is_standard(const Matrix& m, int c) {
  for (int r = 0; r < m.dim(); ++r) {
    RingElem v = m.at(r, c);
    if (r == c ? !v.is_one() : !v.is_zero()) return false;
  }
  return true;
}

// Block unitriangular for the flag span(e_12) < pairs meeting {1,2} < rest.
bool in_radical_flag(const Matrix& u, int n) {
  const Index2 base{1, 2};
  for (int r = 0; r < u.dim(); ++r) {
    const int br = 2 - height(unrank(r, n), base);
    for (int c = 0; c < u.dim(); ++c) {
      const int bc = 2 - height(unrank(c, n), base);
      RingElem v = u.at(r, c);
      if (r == c) {
        if (!v.is_one()) return false;
      } else if (br >= bc && !v.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool commutes(const Matrix& u, const ElemWord& x) {
  Matrix a = u;
  Matrix b = u;
  apply_left(x, a);
  apply_right(b, x);
  return a == b;
}

DecompositionResult entry_h1(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  const int n = rank_of(g);
  require_pairs(I, J, k, l, n);
  require_height(I, J, 1);
  const Ring& ring = g.ring();
  const RingElem one = ring.one();
  Certs certs;

  // (a) move the entry to position (13,12).
  const SourceRoute src = monomial_route_source(I, J, n, ring);
  const InvPair gp = conjugate_by(g, src.word);
  const RingElem gij = entry(g, I, J, n);
  const RingElem c = entry(gp, {1, 3}, {1, 2}, n);
  check(certs, "source route places g_IJ at (13,12)", c == (src.sigma > 0 ? gij : -gij));

  // (b) column stabilizer of column 12.
  const int c12 = rank({1, 2}, n);
  ElemWord T{n, {}};
  for (int s = 2; s <= n; ++s) T.letters.push_back({s, 1, gp.fwd().at(rank({1, s}, n), c12)});
  const ElemWord Ti = elem_invert(T);
  const ColumnVector w = column(gp.fwd(), {1, 2});
  check(certs, "T fixes column 12", act(T, w) == w);

  // (c) h = g'^{-1} T g' lies in the parabolic of column 12.
  Matrix h = gp.fwd();
  apply_left(T, h);
  h = gp.bwd() * h;
  check(certs, "h column 12 is standard", column_is_standard(h, c12));
  check(certs, "h parabolic zero block", parabolic_zero_check(h, {1, 2}));

  // (d) z = [T^{-1} h, t]^{T^{-1}} as four conjugates.
  const ElemWord t = single_letter(2, 3, one, n);
  const ElemWord ti = elem_invert(t);
  const ConjWord z{n,
                   {ConjTerm{-1, concat(T, Ti)}, ConjTerm{1, Ti}, ConjTerm{-1, concat(ti, Ti)},
                    ConjTerm{1, concat(concat(T, ti), Ti)}}};
  Matrix hinv = gp.fwd();
  apply_left(Ti, hinv);
  hinv = gp.bwd() * hinv;
  Matrix u = h;
  apply_right(u, t);
  u = u * hinv;
  apply_right(u, ti);
  const Matrix tT = elem_eval(concat(concat(t, T), concat(ti, Ti)), ring).fwd();
  check(certs, "z = [h,t][t,T]", conj_eval(z, gp) == u * tT);
  check(certs, "[t,T] = t_21(g'_13,12)", tT == elem_eval(single_letter(2, 1, c, n), ring).fwd());
  check(certs, "[h,t] in unipotent radical", in_radical_flag(u, n));
  check(certs, "[h,t] commutes with t_13(-1)", commutes(u, single_letter(1, 3, -one, n)));
  check(certs, "[h,t] commutes with t_23(g'_13,12)", commutes(u, single_letter(2, 3, c, n)));

  // (e) final = [t_13(-1), z].
  const ElemWord s_inv = single_letter(1, 3, one, n);
  ConjWord fin{n, {}};
  for (const auto& term : z.terms) fin.terms.push_back({term.eps, concat(term.h, s_inv)});
  fin = conj_concat(fin, conj_invert(z));
  check(certs, "[t_13(-1), z] = t_23(g'_13,12)", verify(fin, gp, 2, 3, c));

  // (f) route back to g and to the target (k,l).
  ConjWord word = reconjugate(fin, elem_invert(src.word), elem_invert(monomial_route_target(k, l, n, ring)));
  if (src.sigma < 0) word = conj_invert(word);
  check(certs, "length 8", word.size() == 8);
  check(certs, "verified", verify(word, g, k, l, gij));
  return {CaseTag::h1_entry, std::move(word), gij, k, l, std::move(certs)};
}

DecompositionResult entry_h0(const InvPair& g, Index2 A, Index2 B, int k, int l) {
  const int n = rank_of(g);
  require_pairs(A, B, k, l, n);
  require_height(A, B, 0);
  Certs certs;
  const int j = A.i1, h1 = A.i2, i = B.i1, h2 = B.i2;
  const ElemWord x = single_letter(i, j, -g.ring().one(), n);
  const InvPair gx = conjugate_by(g, elem_invert(x));
  const Index2 I2 = make_pair_index(i, h1);
  const Index2 J2 = make_pair_index(i, h2);
  const int delta = sign(h1, i) * sign(h1, j);
  const RingElem gab = entry(g, A, B, n);
  const RingElem shifted = entry(gx, I2, J2, n);
  check(certs, "entry of g^x at (ih1,ih2)", shifted == entry(g, I2, J2, n) + (delta > 0 ? gab : -gab));

  DecompositionResult first = entry_h1(gx, I2, J2, k, l);
  DecompositionResult second = entry_h1(g, I2, J2, k, l);
  absorb(certs, first.certificates, "g^x: ");
  absorb(certs, second.certificates, "g: ");
  check(certs, "additivity seam", first.param - second.param == (delta > 0 ? gab : -gab));
  ConjWord word = conj_concat(reconjugate(first.word, x, ElemWord{n, {}}), conj_invert(second.word));
  if (delta < 0) word = conj_invert(word);
  check(certs, "length 16", word.size() == 16);
  check(certs, "verified", verify(word, g, k, l, gab));
  return {CaseTag::h0_entry, std::move(word), gab, k, l, std::move(certs)};
}

DecompositionResult diag_h1(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  const int n = rank_of(g);
  require_pairs(I, J, k, l, n);
  require_height(I, J, 1);
  Certs certs;
  const int h = I.contains(J.i1) ? J.i1 : J.i2;
  const int i = I.other(h), j = J.other(h);
  const ElemWord x = single_letter(i, j, g.ring().one(), n);
  const InvPair gx = conjugate_by(g, elem_invert(x));
  const int s = sign(h, i) * sign(h, j);
  const RingElem diff = entry(g, I, I, n) - entry(g, J, J, n);
  const RingElem gIJ = entry(g, I, J, n);
  const RingElem gJI = entry(g, J, I, n);
  check(certs, "entry of g^x at (ih,jh)", entry(gx, I, J, n) == (s > 0 ? diff : -diff) + gIJ - gJI);

  DecompositionResult first = entry_h1(gx, I, J, k, l);
  DecompositionResult second = entry_h1(g, J, I, k, l);
  DecompositionResult third = entry_h1(g, I, J, k, l);
  absorb(certs, first.certificates, "g^x: ");
  absorb(certs, second.certificates, "g(JI): ");
  absorb(certs, third.certificates, "g(IJ): ");
  check(certs, "seam", first.param + second.param - third.param == (s > 0 ? diff : -diff));
  ConjWord word = conj_concat(conj_concat(reconjugate(first.word, x, ElemWord{n, {}}), second.word),
                              conj_invert(third.word));
  if (s < 0) word = conj_invert(word);
  check(certs, "length 24", word.size() == 24);
  check(certs, "verified", verify(word, g, k, l, diff));
  return {CaseTag::h1_diag, std::move(word), diff, k, l, std::move(certs)};
}

DecompositionResult diag_h0(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  const int n = rank_of(g);
  require_pairs(I, J, k, l, n);
  require_height(I, J, 0);
  Certs certs;
  const Index2 K = make_pair_index(I.i1, J.i1);
  DecompositionResult first = diag_h1(g, I, K, k, l);
  DecompositionResult second = diag_h1(g, K, J, k, l);
  absorb(certs, first.certificates, "I,K: ");
  absorb(certs, second.certificates, "K,J: ");
  const RingElem diff = entry(g, I, I, n) - entry(g, J, J, n);
  check(certs, "telescoping seam", first.param + second.param == diff);
  ConjWord word = conj_concat(first.word, second.word);
  check(certs, "length 48", word.size() == 48);
  check(certs, "verified", verify(word, g, k, l, diff));
  return {CaseTag::h0_diag, std::move(word), diff, k, l, std::move(certs)};
}

DecompositionResult dispatch(const InvPair& g, const GeneratorTarget& target) {
  const int n = rank_of(g);
  if (!valid(target.I, n) || !valid(target.J, n)) throw Error(ErrorKind::bad_index, "bad pair index");
  if (target.I == target.J) throw Error(ErrorKind::height, "height: target needs I != J");
  const bool adjacent = height(target.I, target.J) == 1;
  if (target.kind == TargetKind::entry) {
    return adjacent ? entry_h1(g, target.I, target.J, target.k, target.l)
                    : entry_h0(g, target.I, target.J, target.k, target.l);
  }
  return adjacent ? diag_h1(g, target.I, target.J, target.k, target.l)
                  : diag_h0(g, target.I, target.J, target.k, target.l);
}

}  // namespace

DecompositionResult decompose_entry_h1(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  rank_of(g);
  require_member(g);
  return entry_h1(g, I, J, k, l);
}

DecompositionResult decompose_entry_h0(const InvPair& g, Index2 A, Index2 B, int k, int l) {
  rank_of(g);
  require_member(g);
  return entry_h0(g, A, B, k, l);
}

DecompositionResult decompose_diag_h1(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  rank_of(g);
  require_member(g);
  return diag_h1(g, I, J, k, l);
}

DecompositionResult decompose_diag_h0(const InvPair& g, Index2 I, Index2 J, int k, int l) {
  rank_of(g);
  require_member(g);
  return diag_h0(g, I, J, k, l);
}

DecompositionResult decompose(const InvPair& g, const GeneratorTarget& target) {
  rank_of(g);
  require_member(g);
  return dispatch(g, target);
}

std::vector<DecompositionResult> decompose_level(const InvPair& g, int k, int l) {
  rank_of(g);
  require_member(g);
  std::vector<DecompositionResult> out;
  for (const auto& gen : level_generators(g.fwd())) {
    const TargetKind kind = gen.kind == LevelKind::entry ? TargetKind::entry : TargetKind::diagdiff;
    out.push_back(dispatch(g, {kind, gen.I, gen.J, k, l}));
  }
  return out;
}

}  // namespace extsq
