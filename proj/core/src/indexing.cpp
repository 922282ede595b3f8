#include "extsq/indexing.hpp"

#include <algorithm>
#include <string>

#include "extsq/error.hpp"

namespace extsq {

int sign(int i, int j) { return i < j ? 1 : -1; }

std::pair<Index2, int> canon(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorKind::bad_index,
                "bad index (" + std::to_string(i) + "," + std::to_string(j) + ") for n=" + std::to_string(n));
  }
  return {make_pair_index(i, j), sign(i, j)};
}

Index2 make_pair_index(int i, int j) { return i < j ? Index2{i, j} : Index2{j, i}; }

int pair_count(int n) { return n * (n - 1) / 2; }

int ambient_rank(int dim) {
  for (int n = 2; pair_count(n) <= dim; ++n) {
    if (pair_count(n) == dim) return n;
  }
  throw Error(ErrorKind::dimension_mismatch, "dimension " + std::to_string(dim) + " is not C(n,2)");
}

bool valid(Index2 index, int n) { return 1 <= index.i1 && index.i1 < index.i2 && index.i2 <= n; }

int rank(Index2 index, int n) {
  if (!valid(index, n)) throw Error(ErrorKind::bad_index, "bad pair index");
  // Pairs starting with a < i1 come first: sum_{a < i1} (n - a).
  int before = (index.i1 - 1) * n - (index.i1 - 1) * index.i1 / 2;
  return before + (index.i2 - index.i1 - 1);
}

Index2 unrank(int position, int n) {
  if (position < 0 || position >= pair_count(n)) throw Error(ErrorKind::bad_index, "rank out of range");
  int i1 = 1;
  while (position >= n - i1) {
    position -= n - i1;
    ++i1;
  }
  return {i1, i1 + 1 + position};
}

int height(Index2 a, Index2 b) {
  return static_cast<int>(a.contains(b.i1)) + static_cast<int>(a.contains(b.i2));
}

int shuffle_sign(Index2 b, Index2 d) {
  if (height(b, d) != 0) throw Error(ErrorKind::bad_index, "shuffle_sign of overlapping pairs");
  std::array<int, 4> seq{b.i1, b.i2, d.i1, d.i2};
  int inversions = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (seq[x] > seq[y]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Index3 make_index3(int a, int b, int c) {
  Index3 r{{a, b, c}};
  std::sort(r.v.begin(), r.v.end());
  if (r.v[0] == r.v[1] || r.v[1] == r.v[2]) throw Error(ErrorKind::bad_index, "repeated entry in 3-set");
  return r;
}

Index4 make_index4(int a, int b, int c, int d) {
  Index4 r{{a, b, c, d}};
  std::sort(r.v.begin(), r.v.end());
  for (int k = 0; k < 3; ++k) {
    if (r.v[k] == r.v[k + 1]) throw Error(ErrorKind::bad_index, "repeated entry in 4-set");
  }
  return r;
}

std::vector<Index2> all_pairs(int n) {
  std::vector<Index2> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  return out;
}

std::vector<Index3> all_triples(int n) {
  std::vector<Index3> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back({{a, b, c}});
  return out;
}

std::vector<Index4> all_quads(int n) {
  std::vector<Index4> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) out.push_back({{a, b, c, d}});
  return out;
}

std::array<std::pair<Index2, Index2>, 6> splittings(const Index4& h) {
  const auto& v = h.v;
  Index2 p01{v[0], v[1]}, p23{v[2], v[3]};
  Index2 p02{v[0], v[2]}, p13{v[1], v[3]};
  Index2 p03{v[0], v[3]}, p12{v[1], v[2]};
  return {{{p01, p23}, {p23, p01}, {p02, p13}, {p13, p02}, {p03, p12}, {p12, p03}}};
}

}  // namespace extsq
