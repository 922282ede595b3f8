#include <doctest.h>

#include "extsq/exterior.hpp"
#include "extsq/random.hpp"
#include "extsq/words.hpp"

using namespace extsq;

TEST_SUITE("words") {
  TEST_CASE("empty word evaluates to the identity") {
    CHECK(elem_eval(ElemWord{4, {}}, Ring::integers()).fwd().is_identity());
    CHECK(conj_eval(ConjWord{4, {}}, InvPair::identity(6, Ring::integers())).is_identity());
  }

  TEST_CASE("single letter n=5 matches the three transvections") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    Matrix expected = Matrix::identity(10, r);
    // t_{12,23}(-xi) t_{14,34}(xi) t_{15,35}(xi), multiplied out via column ops.
    expected.add_col_multiple(rank({2, 3}, 5), rank({1, 2}, 5), -xi);
    expected.add_col_multiple(rank({3, 4}, 5), rank({1, 4}, 5), xi);
    expected.add_col_multiple(rank({3, 5}, 5), rank({1, 5}, 5), xi);
    CHECK(elem_eval(single_letter(1, 3, xi, 5), r).fwd() == expected);
  }

  TEST_CASE("word times formal inverse") {
    Ring z = Ring::zmod(97);
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
      const int n = rng.range(3, 6);
      ElemWord w = random_elem_word(rng, n, rng.range(0, 8), z);
      REQUIRE(elem_eval(concat(w, elem_invert(w)), z).fwd().is_identity());
      REQUIRE(elem_eval(w, z).bwd() == elem_eval(elem_invert(w), z).fwd());
    }
  }

  TEST_CASE("formal inverse") {
    Ring r = Ring::polynomial({"xi"});
    RingElem xi = r.variable(0);
    CHECK(elem_invert(ElemWord{4, {}}).empty());
    CHECK(elem_invert(single_letter(1, 2, xi, 4)) == single_letter(1, 2, -xi, 4));
    Rng rng(2);
    ElemWord w = random_elem_word(rng, 5, 7, Ring::zmod(97));
    CHECK(elem_invert(elem_invert(w)) == w);
  }

  TEST_CASE("evaluation is a homomorphism") {
    Ring z = Ring::zmod(97);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
      const int n = rng.range(3, 6);
      ElemWord a = random_elem_word(rng, n, 5, z), b = random_elem_word(rng, n, 5, z);
      CHECK(elem_eval(concat(a, b), z).fwd() == elem_eval(a, z).fwd() * elem_eval(b, z).fwd());
      Matrix m = elem_eval(b, z).fwd();
      apply_left(a, m);
      CHECK(m == elem_eval(concat(a, b), z).fwd());
      Matrix q = elem_eval(a, z).fwd();
      apply_right(q, b);
      CHECK(q == m);
    }
  }

  TEST_CASE("invalid letters") {
    CHECK_THROWS_AS(validate(ElemWord{4, {{2, 2, Ring::integers().one()}}}), Error);
    CHECK_THROWS_AS(validate(ElemWord{4, {{1, 5, Ring::integers().one()}}}), Error);
    CHECK_THROWS_AS(concat(ElemWord{4, {}}, ElemWord{5, {}}), Error);
  }

  TEST_CASE("conjugate words") {
    Ring z = Ring::zmod(97);
    Rng rng(4);
    const InvPair g = exterior_pair(random_gl(rng, 4, 16, z));
    CHECK(conj_eval(ConjWord{4, {{1, ElemWord{4, {}}}}}, g) == g.fwd());
    for (int t = 0; t < 50; ++t) {
      ConjWord w{4, {}};
      const int len = rng.range(1, 5);
      for (int s = 0; s < len; ++s) w.terms.push_back({rng.range(0, 1) ? 1 : -1, random_elem_word(rng, 4, 3, z)});
      const ConjWord inv = conj_invert(w);
      REQUIRE(inv.size() == w.size());
      REQUIRE((conj_eval(w, g) * conj_eval(inv, g)).is_identity());
      // one term by hand: h^{-1} g^eps h
      const auto& term = w.terms.front();
      const InvPair h = elem_eval(term.h, z);
      const Matrix expected = h.bwd() * (term.eps > 0 ? g.fwd() : g.bwd()) * h.fwd();
      REQUIRE(conj_eval(ConjWord{4, {term}}, g) == expected);
    }
    CHECK_THROWS_AS(conj_eval(ConjWord{5, {}}, g), Error);
  }

  TEST_CASE("reconjugation") {
    Ring z = Ring::zmod(97);
    Rng rng(5);
    const InvPair g = exterior_pair(random_gl(rng, 4, 16, z));
    const ElemWord p = random_elem_word(rng, 4, 3, z), s = random_elem_word(rng, 4, 3, z);
    const ConjWord w{4, {{1, random_elem_word(rng, 4, 2, z)}, {-1, random_elem_word(rng, 4, 2, z)}}};
    // g' = p^{-1} g p
    const InvPair P = elem_eval(p, z), S = elem_eval(s, z);
    const InvPair gp = conjugate(g, P, Side::right);
    const Matrix y = conj_eval(w, gp);
    CHECK(conj_eval(reconjugate(w, p, s), g) == S.bwd() * y * S.fwd());
  }
}
