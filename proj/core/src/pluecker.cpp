#include "extsq/pluecker.hpp"

#include <optional>

namespace extsq {

ColumnVector column(const Matrix& g, Index2 J) {
  const int n = ambient_rank(g.dim());
  ColumnVector w{n, {}};
  const int c = rank(J, n);
  for (int r = 0; r < g.dim(); ++r) w.entries.push_back(g.at(r, c));
  return w;
}

RowVector row(const Matrix& g, Index2 I) {
  const int n = ambient_rank(g.dim());
  RowVector z{n, {}};
  const int r = rank(I, n);
  for (int c = 0; c < g.dim(); ++c) z.entries.push_back(g.at(r, c));
  return z;
}

ColumnVector zero_column(int n, const Ring& ring) {
  return ColumnVector{n, std::vector<RingElem>(static_cast<std::size_t>(pair_count(n)), ring.zero())};
}

RingElem pluecker_poly(int i, const Index3& J, const ColumnVector& w) {
  if (i < 1 || i > w.n) throw Error(ErrorKind::bad_index, "bad index in Plucker polynomial");
  const auto& j = J.v;
  const Ring& ring = w.entries.at(0).ring();
  if (i == j[0] || i == j[1] || i == j[2]) return ring.zero();
  RingElem sum = ring.zero();
  for (int k = 0; k < 3; ++k) {
    Index2 rest{j[(k + 1) % 3], j[(k + 2) % 3]};
    if (rest.i1 > rest.i2) std::swap(rest.i1, rest.i2);
    RingElem term = w.oriented(i, j[k]) * w[rest];
    if (k == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sign(i, j[0]) > 0 ? sum : -sum;
}

bool column_satisfies(const ColumnVector& w) {
  for (int i = 1; i <= w.n; ++i) {
    for (const auto& J : all_triples(w.n)) {
      if (!pluecker_poly(i, J, w).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Bilinear sums over raw entries: a(H, A, C) with precomputed ranks.
template <class Ops, class T>
T a_sum_raw(const Ops& o, std::span<const T> g, int dim, int n, const Index4& H, Index2 A, Index2 C,
            ShuffleSignFn sign_fn) {
  const int a = rank(A, n), c = rank(C, n);
  T acc = o.zero();
  for (const auto& [B, D] : splittings(H)) {
    const T& gb = g[static_cast<std::size_t>(rank(B, n)) * dim + a];
    const T& gd = g[static_cast<std::size_t>(rank(D, n)) * dim + c];
    if (o.is_zero(gb) || o.is_zero(gd)) continue;
    if (sign_fn(B, D) > 0) {
      o.add_mul(acc, gb, gd);
    } else {
      acc = o.sub(acc, o.mul(gb, gd));
    }
  }
  return acc;
}

}  // namespace

RingElem a_sum(const Matrix& g, const Index4& H, Index2 A, Index2 C, ShuffleSignFn sign_fn) {
  const int n = ambient_rank(g.dim());
  if (!valid(A, n) || !valid(C, n) || H.v[3] > n || H.v[0] < 1) throw Error(ErrorKind::bad_index, "bad index");
  return g.visit([&](const auto& o, auto raw) {
    return RingElem(g.ring(), a_sum_raw(o, raw, g.dim(), n, H, A, C, sign_fn));
  });
}

bool is_member(const Matrix& g, ShuffleSignFn sign_fn) {
  const int n = ambient_rank(g.dim());
  const auto pairs = all_pairs(n);
  const auto quads = all_quads(n);
  return g.visit([&](const auto& o, auto raw) {
    using T = typename decltype(raw)::value_type;
    for (const auto& H : quads) {
      for (const auto& A : pairs) {
        for (const auto& C : pairs) {
          if (height(A, C) == 0) continue;
          if (!o.is_zero(a_sum_raw(o, raw, g.dim(), n, H, A, C, sign_fn))) return false;
        }
      }
      for (const auto& S : quads) {
        std::optional<T> reference;
        for (const auto& [A, C] : splittings(S)) {
          T v = a_sum_raw(o, raw, g.dim(), n, H, A, C, sign_fn);
          if (sign_fn(A, C) < 0) v = o.neg(v);
          if (!reference) {
            reference = std::move(v);
          } else if (!o.eq(*reference, v)) {
            return false;
          }
        }
      }
    }
    return true;
  });
}

bool parabolic_zero_check(const Matrix& g, Index2 I) {
  const int n = ambient_rank(g.dim());
  if (!valid(I, n)) throw Error(ErrorKind::bad_index, "bad pair index");
  const int ci = rank(I, n);
  for (int r = 0; r < g.dim(); ++r) {
    RingElem v = g.at(r, ci);
    if (r == ci ? !v.is_one() : !v.is_zero()) {
      throw Error(ErrorKind::precondition, "precondition: column is not the standard basis vector");
    }
  }
  for (const auto& K : all_pairs(n)) {
    if (height(K, I) != 0) continue;
    for (const auto& J : all_pairs(n)) {
      if (height(I, J) != 1) continue;
      if (!g.at(rank(K, n), rank(J, n)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace extsq
