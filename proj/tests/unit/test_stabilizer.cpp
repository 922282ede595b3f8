#include <doctest.h>

#include "extsq/exterior.hpp"
#include "extsq/random.hpp"
#include "extsq/stabilizer.hpp"

using namespace extsq;

namespace {

ColumnVector generic_column(int n, const Ring& r) {
  ColumnVector w = zero_column(n, r);
  for (std::size_t k = 0; k < w.entries.size(); ++k) w.entries[k] = r.variable(k);
  return w;
}

std::vector<std::string> names(int count) {
  std::vector<std::string> out;
  for (int k = 0; k < count; ++k) out.push_back("w" + std::to_string(k));
  return out;
}

ColumnVector random_column(Rng& rng, int n, const Ring& r) {
  ColumnVector w = zero_column(n, r);
  for (auto& e : w.entries) e = random_elem(rng, r);
  return w;
}

// Column action through the full exterior matrix, independent of act().
ColumnVector matrix_act(const ElemWord& word, const ColumnVector& w, const Ring& r) {
  const Matrix m = elem_eval(word, r).fwd();
  ColumnVector out = zero_column(w.n, r);
  for (int a = 0; a < m.dim(); ++a) {
    RingElem acc = r.zero();
    for (int b = 0; b < m.dim(); ++b) acc += m.at(a, b) * w.entries[static_cast<std::size_t>(b)];
    out.entries[static_cast<std::size_t>(a)] = acc;
  }
  return out;
}

}  // namespace

TEST_SUITE("stabilizer") {
  TEST_CASE("T_{*,5} for n=5 expands as displayed") {
    Ring r = Ring::polynomial(names(10));
    const ColumnVector w = generic_column(5, r);
    const ElemWord word = t_star_col(5, w);
    REQUIRE(word.size() == 4);
    CHECK(word.letters[0].xi == w[{1, 5}]);
    const auto first = ext_transvection(word.letters[0].i, word.letters[0].j, word.letters[0].xi, 5);
    REQUIRE(first.letters.size() == 3);
    CHECK(first.letters[0].row == Index2{1, 2});
    CHECK(first.letters[0].col == Index2{2, 5});
    CHECK(first.letters[1].row == Index2{1, 3});
    CHECK(first.letters[1].col == Index2{3, 5});
    CHECK(first.letters[2].row == Index2{1, 4});
    CHECK(first.letters[2].col == Index2{4, 5});
    for (const auto& t : first.letters) CHECK(t.xi == -w[{1, 5}]);
    const auto second = ext_transvection(word.letters[1].i, word.letters[1].j, word.letters[1].xi, 5);
    CHECK(second.letters[0].row == Index2{1, 2});
    CHECK(second.letters[0].col == Index2{1, 5});
    CHECK(second.letters[0].xi == w[{2, 5}]);
    std::size_t total = 0;
    for (const auto& l : word.letters) total += ext_transvection(l.i, l.j, l.xi, 5).letters.size();
    CHECK(total == 12);
  }

  TEST_CASE("T_{*,j} fixes a generic column, n = 3..5") {
    for (int n = 3; n <= 5; ++n) {
      Ring r = Ring::polynomial(names(pair_count(n)));
      const ColumnVector w = generic_column(n, r);
      for (int j = 1; j <= n; ++j) {
        const ElemWord word = t_star_col(j, w);
        CHECK(word.size() == static_cast<std::size_t>(n - 1));
        CHECK(act(word, w) == w);
      }
    }
  }

  TEST_CASE("T_{*,j} fixes random columns, n = 3..7") {
    Ring z = Ring::zmod(97);
    Rng rng(1);
    for (int n = 3; n <= 7; ++n) {
      for (int t = 0; t < 10; ++t) {
        const ColumnVector w = random_column(rng, n, z);
        const int j = rng.range(1, n);
        REQUIRE(act(t_star_col(j, w), w) == w);
        if (n <= 5) REQUIRE(matrix_act(t_star_col(j, w), w, z) == w);
      }
    }
  }

  TEST_CASE("zero column gives the identity") {
    Ring z = Ring::zmod(97);
    const ElemWord word = t_star_col(2, zero_column(4, z));
    for (const auto& l : word.letters) CHECK(l.xi.is_zero());
    CHECK(elem_eval(word, z).fwd().is_identity());
  }

  TEST_CASE("z_term vanishes in all orderings") {
    Ring r = Ring::polynomial(names(10));
    const ColumnVector w = generic_column(5, r);
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q)
        for (int j = 1; j <= 5; ++j) {
          if (p == q || p == j || q == j) continue;
          CHECK(z_term(p, q, j, w).is_zero());
        }
    CHECK_THROWS_AS(z_term(1, 1, 2, w), Error);
  }

  TEST_CASE("row stabilizer") {
    Ring z = Ring::zmod(97);
    Rng rng(2);
    for (int n = 3; n <= 7; ++n) {
      RowVector v{n, std::vector<RingElem>(static_cast<std::size_t>(pair_count(n)), z.zero())};
      CHECK(act(v, t_star_row(1, v)) == v);
      for (auto& e : v.entries) e = random_elem(rng, z);
      for (int i = 1; i <= n; ++i) REQUIRE(act(v, t_star_row(i, v)) == v);
    }
    Ring r = Ring::polynomial(names(6));
    RowVector g{4, {}};
    for (std::size_t k = 0; k < 6; ++k) g.entries.push_back(r.variable(k));
    for (int i = 1; i <= 4; ++i) CHECK(act(g, t_star_row(i, g)) == g);
    CHECK_THROWS_AS(t_star_row(5, g), Error);
  }

  TEST_CASE("T_1 on exterior columns") {
    Ring z = Ring::zmod(97);
    Rng rng(3);
    for (int n = 5; n <= 7; ++n) {
      for (int t = 0; t < 10; ++t) {
        const Matrix g = cauchy_binet(random_gl(rng, n, 14, z).fwd());
        const ColumnVector w = column(g, unrank(rng.range(0, g.dim() - 1), n));
        const ElemWord word = t_one(w);
        REQUIRE(word.size() == 3);
        REQUIRE(act(word, w) == w);
      }
    }
  }

  TEST_CASE("T_1 residual is f_{i,345}") {
    Ring z = Ring::zmod(97);
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
      ColumnVector w = random_column(rng, 6, z);
      const ElemWord word{6, {{2, 3, w[{4, 5}]}, {2, 4, -w[{3, 5}]}, {2, 5, w[{3, 4}]}}};
      const ColumnVector moved = act(word, w);
      for (int i : {1, 6}) {
        REQUIRE(moved[make_pair_index(2, i)] - w[make_pair_index(2, i)] == pluecker_poly(i, make_index3(3, 4, 5), w));
      }
    }
  }

  TEST_CASE("T_1 preconditions") {
    Ring z = Ring::zmod(97);
    CHECK_THROWS_AS(t_one(zero_column(4, z)), Error);
    ColumnVector bad = zero_column(5, z);
    bad[{1, 2}] = z.one();
    bad[{3, 4}] = z.one();
    try {
      (void)t_one(bad);
      FAIL("expected not_wedge_column");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_wedge_column);
    }
    ColumnVector easy = zero_column(5, z);
    easy[{1, 2}] = z.from_int(3);
    for (const auto& l : t_one(easy).letters) CHECK(l.xi.is_zero());
  }
}
