#include <doctest.h>

#include <algorithm>

#include "extsq/error.hpp"
#include "extsq/indexing.hpp"

using namespace extsq;

TEST_SUITE("indexing") {
  TEST_CASE("canon") {
    CHECK(canon(1, 3, 5) == std::pair{Index2{1, 3}, 1});
    CHECK(canon(3, 1, 5) == std::pair{Index2{1, 3}, -1});
    CHECK_THROWS_AS(canon(2, 2, 5), Error);
    CHECK_THROWS_AS(canon(0, 2, 5), Error);
    CHECK_THROWS_AS(canon(1, 6, 5), Error);
  }

  TEST_CASE("rank and unrank") {
    CHECK(rank({1, 2}, 5) == 0);
    CHECK(rank({4, 5}, 5) == 9);
    CHECK(unrank(1, 5) == Index2{1, 3});
    for (int n = 3; n <= 8; ++n) {
      const auto pairs = all_pairs(n);
      REQUIRE(static_cast<int>(pairs.size()) == pair_count(n));
      CHECK(std::is_sorted(pairs.begin(), pairs.end()));
      for (int p = 0; p < pair_count(n); ++p) {
        CHECK(rank(unrank(p, n), n) == p);
        CHECK(unrank(p, n) == pairs[p]);
      }
    }
    CHECK_THROWS_AS(unrank(10, 5), Error);
  }

  TEST_CASE("ambient rank") {
    CHECK(ambient_rank(10) == 5);
    CHECK(ambient_rank(15) == 6);
    CHECK_THROWS_AS(ambient_rank(7), Error);
  }

  TEST_CASE("height") {
    CHECK(height({1, 2}, {1, 3}) == 1);
    CHECK(height({1, 2}, {3, 4}) == 0);
    CHECK(height({1, 2}, {1, 2}) == 2);
  }

  TEST_CASE("sign antisymmetry") {
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        if (i != j) CHECK(sign(i, j) * sign(j, i) == -1);
      }
    }
  }

  TEST_CASE("shuffle sign examples") {
    CHECK(shuffle_sign({1, 2}, {3, 4}) == 1);
    CHECK(shuffle_sign({1, 3}, {2, 4}) == -1);
    CHECK(shuffle_sign({1, 4}, {2, 3}) == 1);
    CHECK_THROWS_AS(shuffle_sign({1, 2}, {2, 3}), Error);
  }

  TEST_CASE("shuffle sign flips under a transposition") {
    auto brute = [](std::array<int, 4> v) {
      int inversions = 0;
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) inversions += v[a] > v[b];
      }
      return inversions % 2 ? -1 : 1;
    };
    for (int n = 4; n <= 6; ++n) {
      for (const auto& H : all_quads(n)) {
        for (const auto& [B, D] : splittings(H)) {
          CHECK(shuffle_sign(B, D) == brute({B.i1, B.i2, D.i1, D.i2}));
          // swap the middle two letters of the concatenation
          CHECK(brute({B.i1, D.i1, B.i2, D.i2}) == -shuffle_sign(B, D));
          CHECK(shuffle_sign(B, D) == shuffle_sign(D, B));
        }
      }
    }
  }

  TEST_CASE("splittings") {
    const auto s = splittings(make_index4(1, 2, 3, 4));
    CHECK(s.size() == 6);
    for (const auto& [B, D] : s) CHECK(height(B, D) == 0);
    CHECK_THROWS_AS(make_index4(1, 1, 2, 3), Error);
  }

  TEST_CASE("enumeration sizes") {
    CHECK(all_triples(5).size() == 10);
    CHECK(all_quads(6).size() == 15);
  }
}
