#include <doctest.h>

#include "extsq/exterior.hpp"
#include "extsq/random.hpp"
#include "extsq/rdu.hpp"

using namespace extsq;

namespace {

InvPair sample(std::uint64_t seed, int n) {
  Rng rng(seed);
  return exterior_pair(random_gl(rng, n, 14, Ring::zmod(97)));
}

// Independent target: minors of the elementary matrix.
Matrix target(int n, int k, int l, const RingElem& xi) { return cauchy_binet(elementary(n, k, l, xi)); }

void check_result(const DecompositionResult& r, const InvPair& g, int n, const RingElem& expected_param) {
  REQUIRE(r.word.size() == expected_length(r.tag));
  REQUIRE(r.param == expected_param);
  REQUIRE(conj_eval(r.word, g) == target(n, r.k, r.l, r.param));
  for (const auto& c : r.certificates) REQUIRE_MESSAGE(c.ok, c.name);
  REQUIRE(verify(r.word, g, r.k, r.l, r.param));
}

}  // namespace

TEST_SUITE("rdu") {
  TEST_CASE("case tags") {
    CHECK(expected_length(CaseTag::h1_entry) == 8);
    CHECK(expected_length(CaseTag::h0_entry) == 16);
    CHECK(expected_length(CaseTag::h1_diag) == 24);
    CHECK(expected_length(CaseTag::h0_diag) == 48);
    for (CaseTag t : {CaseTag::h1_entry, CaseTag::h0_entry, CaseTag::h1_diag, CaseTag::h0_diag}) {
      CHECK(case_tag_from_string(to_string(t)) == t);
    }
    CHECK_THROWS_AS(case_tag_from_string("nope"), Error);
  }

  TEST_CASE("height one entry, base position") {
    const InvPair g = sample(1, 4);
    const auto r = decompose_entry_h1(g, {1, 3}, {1, 2}, 2, 3);
    CHECK(r.tag == CaseTag::h1_entry);
    check_result(r, g, 4, g.fwd().at(rank({1, 3}, 4), rank({1, 2}, 4)));
  }

  TEST_CASE("every entry and difference, n=4") {
    const InvPair g = sample(2, 4);
    const auto gens = level_generators(g.fwd());
    const auto results = decompose_level(g, 2, 3);
    REQUIRE(results.size() == gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) check_result(results[t], g, 4, gens[t].value);
  }

  TEST_CASE("dispatch by height") {
    const InvPair g = sample(3, 5);
    CHECK(decompose(g, {TargetKind::entry, {2, 3}, {2, 5}, 2, 3}).tag == CaseTag::h1_entry);
    CHECK(decompose(g, {TargetKind::entry, {1, 2}, {3, 4}, 2, 3}).tag == CaseTag::h0_entry);
    CHECK(decompose(g, {TargetKind::diagdiff, {1, 2}, {1, 3}, 2, 3}).tag == CaseTag::h1_diag);
    CHECK(decompose(g, {TargetKind::diagdiff, {1, 2}, {3, 4}, 2, 3}).tag == CaseTag::h0_diag);
  }

  TEST_CASE("other targets, n=5") {
    const InvPair g = sample(4, 5);
    const int n = 5;
    for (auto [k, l] : {std::pair{3, 2}, {1, 4}, {5, 1}}) {
      const auto r = decompose(g, {TargetKind::entry, {2, 4}, {1, 4}, k, l});
      CHECK(r.k == k);
      CHECK(r.l == l);
      check_result(r, g, n, g.fwd().at(rank({2, 4}, n), rank({1, 4}, n)));
      const auto d = decompose(g, {TargetKind::diagdiff, {1, 5}, {3, 4}, k, l});
      check_result(d, g, n, g.fwd().at(rank({1, 5}, n), rank({1, 5}, n)) - g.fwd().at(rank({3, 4}, n), rank({3, 4}, n)));
    }
  }

  TEST_CASE("integers and large moduli") {
    Rng rng(5);
    const InvPair gi = exterior_pair(random_gl(rng, 4, 6, Ring::integers()));
    const auto r = decompose(gi, {TargetKind::entry, {1, 4}, {2, 3}, 2, 3});
    check_result(r, gi, 4, gi.fwd().at(rank({1, 4}, 4), rank({2, 3}, 4)));
    const InvPair gb = exterior_pair(random_gl(rng, 4, 10, Ring::zmod((std::uint64_t{1} << 61) - 1)));
    const auto b = decompose(gb, {TargetKind::diagdiff, {1, 2}, {3, 4}, 2, 3});
    check_result(b, gb, 4, gb.fwd().at(0, 0) - gb.fwd().at(5, 5));
  }

  TEST_CASE("preconditions") {
    Rng rng(6);
    const InvPair g3 = exterior_pair(random_gl(rng, 3, 6, Ring::zmod(97)));
    CHECK_THROWS_AS(decompose(g3, {TargetKind::entry, {1, 3}, {1, 2}, 2, 3}), Error);
    const InvPair g = sample(7, 4);
    CHECK_THROWS_AS(decompose(g, {TargetKind::entry, {1, 3}, {1, 3}, 2, 3}), Error);
    CHECK_THROWS_AS(decompose(g, {TargetKind::entry, {1, 3}, {1, 2}, 2, 2}), Error);
    // A non-member is rejected before any construction.
    Matrix bad = g.fwd();
    bad.set(0, 1, bad.at(0, 1) + Ring::zmod(97).one());
    Matrix bad_inv = g.bwd();
    try {
      InvPair p = InvPair::trusted(bad, bad_inv);
      (void)decompose(p, {TargetKind::entry, {1, 3}, {1, 2}, 2, 3});
      FAIL("expected a membership error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::membership);
    }
  }

  TEST_CASE("verify rejects tampered words") {
    const InvPair g = sample(8, 4);
    auto r = decompose(g, {TargetKind::entry, {1, 2}, {1, 3}, 2, 3});
    CHECK(verify(r.word, g, r.k, r.l, r.param));
    CHECK_FALSE(verify(r.word, g, r.k, r.l, r.param + Ring::zmod(97).one()));
    r.word.terms.front().eps = -r.word.terms.front().eps;
    CHECK_FALSE(verify(r.word, g, r.k, r.l, r.param));
  }
}
