#include <doctest.h>

#include "extsq/exterior.hpp"
#include "extsq/random.hpp"

using namespace extsq;

namespace {

// Minor-matrix oracle for a single exterior letter.
Matrix oracle(int n, int i, int j, const RingElem& xi) { return cauchy_binet(elementary(n, i, j, xi)); }

}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("cauchy_binet basics") {
    CHECK(cauchy_binet(Matrix::identity(4, Ring::integers())).is_identity());
    Ring r = Ring::polynomial({"a", "b", "c"});
    RingElem a = r.variable(0), b = r.variable(1), c = r.variable(2);
    Matrix d(3, r);
    d.set(0, 0, a);
    d.set(1, 1, b);
    d.set(2, 2, c);
    Matrix expected(3, r);
    expected.set(0, 0, a * b);
    expected.set(1, 1, a * c);
    expected.set(2, 2, b * c);
    CHECK(cauchy_binet(d) == expected);
    CHECK_THROWS_AS(cauchy_binet(Matrix::identity(2, Ring::integers())), Error);
  }

  TEST_CASE("cauchy_binet is multiplicative") {
    Ring z = Ring::zmod(97);
    Rng rng(1);
    for (int n = 4; n <= 6; ++n) {
      for (int t = 0; t < 20; ++t) {
        InvPair x = random_gl(rng, n, 10, z), y = random_gl(rng, n, 10, z);
        REQUIRE(cauchy_binet(x.fwd() * y.fwd()) == cauchy_binet(x.fwd()) * cauchy_binet(y.fwd()));
        REQUIRE(cauchy_binet(x.fwd()) * cauchy_binet(x.bwd()) == Matrix::identity(pair_count(n), z));
      }
    }
  }

  TEST_CASE("expansion of every letter, n = 3..6") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    for (int n = 3; n <= 6; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          TransvectionWord w = ext_transvection(i, j, xi, n);
          CHECK(static_cast<int>(w.letters.size()) == n - 2);
          CHECK(eval_transvections(w, r) == oracle(n, i, j, xi));
        }
      }
    }
  }

  TEST_CASE("expansion for i < j follows the three products") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    const int n = 6, i = 2, j = 4;
    const auto w = ext_transvection(i, j, xi, n);
    std::vector<Transvection> expected{{{1, 2}, {1, 4}, xi}, {{2, 3}, {3, 4}, -xi}, {{2, 5}, {4, 5}, xi},
                                       {{2, 6}, {4, 6}, xi}};
    REQUIRE(w.letters.size() == expected.size());
    for (std::size_t t = 0; t < expected.size(); ++t) {
      CHECK(w.letters[t].row == expected[t].row);
      CHECK(w.letters[t].col == expected[t].col);
      CHECK(w.letters[t].xi == expected[t].xi);
    }
  }

  TEST_CASE("small cases") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    CHECK(ext_transvection(2, 3, xi, 4).letters.size() == 2);
    CHECK(eval_transvections(ext_transvection(3, 1, xi, 4), r) == oracle(4, 3, 1, xi));
    CHECK_THROWS_AS(ext_transvection(1, 1, xi, 4), Error);
    CHECK_THROWS_AS(ext_transvection(1, 2, xi, 2), Error);
  }

  TEST_CASE("P elements are signed permutations") {
    Ring z = Ring::integers();
    for (int n = 3; n <= 5; ++n) {
      Matrix p = elem_eval(p_element(1, 2, n, z), z).fwd();
      for (int r = 0; r < p.dim(); ++r) {
        int nonzero = 0;
        for (int c = 0; c < p.dim(); ++c) {
          RingElem v = p.at(r, c);
          if (v.is_zero()) continue;
          ++nonzero;
          CHECK((v.is_one() || (-v).is_one()));
        }
        CHECK(nonzero == 1);
      }
    }
  }

  TEST_CASE("conjugation by P moves indices") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    const int n = 5;
    auto conj = [&](const ElemWord& p, int i, int j) {
      Matrix m = elem_eval(single_letter(i, j, xi, n), r).fwd();
      apply_left(p, m);
      apply_right(m, elem_invert(p));
      return m;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || k == i || k == j) continue;
          CHECK(conj(p_element(k, i, n, r), i, j) == oracle(n, k, j, xi));
          CHECK(conj(p_element(k, j, n, r), i, j) == oracle(n, i, k, xi));
        }
  }

  TEST_CASE("target routes") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    CHECK(monomial_route_target(2, 3, 4, r).empty());
    CHECK(monomial_route_target(4, 3, 4, r) == p_element(4, 2, 4, r));
    for (int n = 4; n <= 6; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (k == l) continue;
          const ElemWord w = monomial_route_target(k, l, n, r);
          CHECK(w.size() <= ((k == 3 && l == 2) ? 9u : 6u));
          Matrix m = elem_eval(single_letter(2, 3, xi, n), r).fwd();
          apply_left(w, m);
          apply_right(m, elem_invert(w));
          CHECK(m == oracle(n, k, l, xi));
        }
      }
    }
    CHECK_THROWS_AS(monomial_route_target(1, 2, 3, r), Error);
  }

  TEST_CASE("source routes") {
    Ring z = Ring::zmod(97);
    auto src = monomial_route_source({1, 3}, {1, 2}, 5, z);
    CHECK(src.word.empty());
    CHECK(src.sigma == 1);
    Rng rng(2);
    for (int n = 4; n <= 5; ++n) {
      const auto pairs = all_pairs(n);
      for (int t = 0; t < 100; ++t) {
        const InvPair g = exterior_pair(random_gl(rng, n, 12, z));
        for (const auto& I : pairs) {
          for (const auto& J : pairs) {
            if (height(I, J) != 1) continue;
            auto route = monomial_route_source(I, J, n, z);
            Matrix m = g.fwd();
            apply_left(route.word, m);
            apply_right(m, elem_invert(route.word));
            RingElem gij = g.fwd().at(rank(I, n), rank(J, n));
            REQUIRE(m.at(rank({1, 3}, n), rank({1, 2}, n)) == (route.sigma > 0 ? gij : -gij));
          }
        }
        if (n == 4 && t == 0) break;
      }
    }
    CHECK_THROWS_AS(monomial_route_source({1, 2}, {3, 4}, 5, z), Error);
  }

  TEST_CASE("source route for ({2,3},{2,4}) sends 2->1, 3->3, 4->2") {
    Ring z = Ring::integers();
    auto route = monomial_route_source({2, 3}, {2, 4}, 4, z);
    Matrix probe(6, z);
    probe.set(rank({2, 3}, 4), rank({2, 4}, 4), z.one());
    apply_left(route.word, probe);
    apply_right(probe, elem_invert(route.word));
    const RingElem v = probe.at(rank({1, 3}, 4), rank({1, 2}, 4));
    CHECK(v == z.from_int(route.sigma));
    CHECK(route.word.size() <= 9);
  }
}
