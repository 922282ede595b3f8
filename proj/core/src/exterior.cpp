#include "extsq/exterior.hpp"

#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <type_traits>

namespace extsq {

namespace {

void check_rank(int n) {
  if (n < 3) throw Error(ErrorKind::rank_too_small, "rank too small (n=" + std::to_string(n) + ")");
}

void check_letter(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorKind::bad_index,
                "bad index (" + std::to_string(i) + "," + std::to_string(j) + ") for n=" + std::to_string(n));
  }
}

// Ranks whose expansion pattern has been checked against cauchy_binet.
std::atomic<std::uint64_t> g_certified_ranks{0};
std::mutex g_certify_mutex;

void certify_rank(int n) {
  if (n < 64 && (g_certified_ranks.load(std::memory_order_acquire) >> n & 1U)) return;
  std::lock_guard lock(g_certify_mutex);
  if (n < 64 && (g_certified_ranks.load(std::memory_order_relaxed) >> n & 1U)) return;
  Ring zx = Ring::polynomial({"xi"});
  RingElem xi = zx.variable(0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Matrix word = eval_transvections(expand_pattern(expansion_pattern(i, j, n), xi, n), zx);
      if (!(word == cauchy_binet(elementary(n, i, j, xi)))) {
        throw Error(ErrorKind::proof_step, "proof-step violated: exterior transvection expansion (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  if (n < 64) g_certified_ranks.fetch_or(std::uint64_t{1} << n, std::memory_order_release);
}

}  // namespace

std::vector<PatternEntry> expansion_pattern(int i, int j, int n) {
  check_rank(n);
  check_letter(i, j, n);
  std::vector<PatternEntry> out;
  out.reserve(static_cast<std::size_t>(n - 2));
  for (int a = 1; a <= n; ++a) {
    if (a == i || a == j) continue;
    out.push_back({make_pair_index(a, i), make_pair_index(a, j), sign(a, i) * sign(a, j)});
  }
  return out;
}

TransvectionWord expand_pattern(const std::vector<PatternEntry>& pattern, const RingElem& xi, int n) {
  TransvectionWord w{n, {}};
  w.letters.reserve(pattern.size());
  RingElem neg = -xi;
  for (const auto& p : pattern) w.letters.push_back({p.row, p.col, p.sign > 0 ? xi : neg});
  return w;
}

TransvectionWord ext_transvection(int i, int j, const RingElem& xi, int n) {
  auto pattern = expansion_pattern(i, j, n);
  certify_rank(n);
  return expand_pattern(pattern, xi, n);
}

void apply_left(const TransvectionWord& w, Matrix& m) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    m.add_row_multiple(rank(it->row, w.n), rank(it->col, w.n), it->xi);
  }
}

void apply_right(Matrix& m, const TransvectionWord& w) {
  for (const auto& t : w.letters) m.add_col_multiple(rank(t.col, w.n), rank(t.row, w.n), t.xi);
}

Matrix eval_transvections(const TransvectionWord& w, const Ring& ring) {
  Matrix m = Matrix::identity(pair_count(w.n), ring);
  apply_right(m, w);
  return m;
}

Matrix elementary(int n, int i, int j, const RingElem& xi) {
  check_letter(i, j, n);
  Matrix m = Matrix::identity(n, xi.ring());
  m.set(i - 1, j - 1, xi);
  return m;
}

Matrix cauchy_binet(const Matrix& x) {
  const int n = x.dim();
  check_rank(n);
  const auto pairs = all_pairs(n);
  const int dim = static_cast<int>(pairs.size());
  Matrix out(dim, x.ring());
  x.visit([&](const auto& o, auto a) {
    using T = typename decltype(a)::value_type;
    auto at = [&](int r, int c) -> const T& { return a[static_cast<std::size_t>(r - 1) * n + (c - 1)]; };
    out.visit_mut([&](const auto&, auto b) {
      if constexpr (std::is_same_v<typename decltype(b)::value_type, T>) {
        for (int r = 0; r < dim; ++r) {
          const Index2 I = pairs[r];
          for (int c = 0; c < dim; ++c) {
            const Index2 J = pairs[c];
            b[static_cast<std::size_t>(r) * dim + c] =
                o.sub(o.mul(at(I.i1, J.i1), at(I.i2, J.i2)), o.mul(at(I.i1, J.i2), at(I.i2, J.i1)));
          }
        }
      }
    });
  });
  return out;
}

ElemWord p_element(int i, int j, int n, const Ring& ring) {
  check_letter(i, j, n);
  RingElem one = ring.one();
  return ElemWord{n, {ElemLetter{i, j, one}, ElemLetter{j, i, -one}, ElemLetter{i, j, one}}};
}

// ---------------------------------------------------------------------------
// Monomial routes.
//
// wedge2 of P_xy is the signed transposition e_x -> -e_y, e_y -> e_x, and
// conjugating wedge2 t_{a,b}(xi) by it gives wedge2 t_{pi a, pi b}(eps_a eps_b xi).

namespace {

using Move = std::pair<int, int>;  // P_{x,y}

ElemWord word_of_moves(const std::vector<Move>& moves_in_order, int n, const Ring& ring) {
  // Conjugation by P1 then P2 is conjugation by P2 * P1.
  ElemWord w{n, {}};
  for (auto it = moves_in_order.rbegin(); it != moves_in_order.rend(); ++it) {
    w = concat(w, p_element(it->first, it->second, n, ring));
  }
  return w;
}

std::vector<Move> search_target_route(int k, int l, int n) {
  struct State {
    int a, b, s;
    auto operator<=>(const State&) const = default;
  };
  std::map<State, std::pair<State, Move>> parent;
  std::deque<State> queue{{2, 3, 1}};
  parent[{2, 3, 1}] = {{0, 0, 0}, {0, 0}};
  const State goal{k, l, 1};
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    if (cur == goal) break;
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (x == y) continue;
        auto image = [&](int v) { return v == x ? y : v == y ? x : v; };
        auto eps = [&](int v) { return v == x ? -1 : 1; };
        State next{image(cur.a), image(cur.b), cur.s * eps(cur.a) * eps(cur.b)};
        if (parent.count(next)) continue;
        parent[next] = {cur, {x, y}};
        queue.push_back(next);
      }
    }
  }
  if (!parent.count(goal)) throw Error(ErrorKind::precondition, "no monomial route");
  std::vector<Move> moves;
  for (State s = goal; !(s == State{2, 3, 1}); s = parent[s].first) moves.push_back(parent[s].second);
  return {moves.rbegin(), moves.rend()};
}

void verify_target_route(const ElemWord& w, int k, int l, int n) {
  Ring zx = Ring::polynomial({"xi"});
  RingElem xi = zx.variable(0);
  Matrix m = elem_eval(single_letter(2, 3, xi, n), zx).fwd();
  apply_left(w, m);
  apply_right(m, elem_invert(w));
  if (!(m == elem_eval(single_letter(k, l, xi, n), zx).fwd())) {
    throw Error(ErrorKind::proof_step, "proof-step violated: monomial target route");
  }
}

std::mutex g_route_mutex;

}  // namespace

ElemWord monomial_route_target(int k, int l, int n, const Ring& ring) {
  if (n < 4) throw Error(ErrorKind::rank_too_small, "monomial routes need n >= 4");
  check_letter(k, l, n);
  static std::map<std::tuple<int, int, int>, std::vector<Move>> cache;
  std::vector<Move> moves;
  {
    std::lock_guard lock(g_route_mutex);
    auto key = std::make_tuple(n, k, l);
    auto it = cache.find(key);
    if (it == cache.end()) {
      auto found = search_target_route(k, l, n);
      verify_target_route(word_of_moves(found, n, Ring::polynomial({"xi"})), k, l, n);
      it = cache.emplace(key, std::move(found)).first;
    }
    moves = it->second;
  }
  return word_of_moves(moves, n, ring);
}

SourceRoute monomial_route_source(Index2 I, Index2 J, int n, const Ring& ring) {
  if (n < 4) throw Error(ErrorKind::rank_too_small, "monomial routes need n >= 4");
  if (!valid(I, n) || !valid(J, n)) throw Error(ErrorKind::bad_index, "bad pair index");
  if (height(I, J) != 1) throw Error(ErrorKind::height, "source route needs height(I,J) = 1");
  static std::map<std::tuple<int, Index2, Index2>, std::pair<std::vector<Move>, int>> cache;
  std::vector<Move> moves;
  int sigma = 1;
  {
    std::lock_guard lock(g_route_mutex);
    auto key = std::make_tuple(n, I, J);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const int common = I.contains(J.i1) ? J.i1 : J.i2;
      const int only_i = I.other(common);
      const int only_j = J.other(common);
      // pos[v]: where index v currently sits.
      std::vector<int> pos(n + 1), at(n + 1);
      for (int v = 1; v <= n; ++v) pos[v] = at[v] = v;
      std::vector<Move> found;
      for (auto [v, target] : {std::pair{common, 1}, std::pair{only_i, 3}, std::pair{only_j, 2}}) {
        int from = pos[v];
        if (from == target) continue;
        found.push_back({target, from});
        int displaced = at[target];
        std::swap(at[target], at[from]);
        pos[v] = target;
        pos[displaced] = from;
      }
      // The sign is read off a probe: w E_{I,J} w^{-1} at ((1,3),(1,2)).
      Ring z = Ring::integers();
      ElemWord w = word_of_moves(found, n, z);
      Matrix probe(pair_count(n), z);
      probe.set(rank(I, n), rank(J, n), z.one());
      apply_left(w, probe);
      apply_right(probe, elem_invert(w));
      RingElem entry = probe.at(rank({1, 3}, n), rank({1, 2}, n));
      int s = entry.is_one() ? 1 : (-entry).is_one() ? -1 : 0;
      if (s == 0) throw Error(ErrorKind::proof_step, "proof-step violated: monomial source route");
      it = cache.emplace(key, std::make_pair(std::move(found), s)).first;
    }
    moves = it->second.first;
    sigma = it->second.second;
  }
  return {word_of_moves(moves, n, ring), sigma};
}

}  // namespace extsq
