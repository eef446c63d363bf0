#include <algorithm>
#include <random>

#include "doctest.h"
#include "fpg/catalog.hpp"
#include "fpg/coset_enumeration.hpp"
#include "fpg/errors.hpp"
#include "fpg/hom_search.hpp"
#include "fpg/tietze.hpp"
#include "test_support.hpp"

using namespace fpg;

namespace {

void check_closed(const CosetTable& t) {
  for (std::uint32_t c = 0; c < t.index(); ++c)
    for (Letter x = 0; x < t.table[c].size(); ++x) {
      REQUIRE(t.table[c][x] < t.index());
      CHECK(t.act(t.act(c, x), letter_inverse(x)) == c);
    }
  for (std::uint32_t c = 0; c < t.index(); ++c)
    for (const Word& r : t.presentation.relators()) CHECK(t.act(c, r) == c);
  for (const Word& h : t.subgroup_gens) CHECK(t.act(0, h) == 0);
}

}  // namespace

TEST_CASE("coset enumeration examples") {
  const auto f2 = parse_presentation("< s t | >");
  const std::vector<Word> sub{parse_word("s^2", f2), parse_word("t", f2), parse_word("s t s^-1", f2)};
  const auto t = todd_coxeter(f2, sub, 100);
  CHECK(t.index() == 2);
  check_closed(t);

  const auto a5 = parse_presentation(fpg::testing::kA5);
  const auto whole = todd_coxeter(a5, {}, 1000);
  CHECK(whole.index() == 60);
  check_closed(whole);

  CHECK_THROWS_AS(todd_coxeter(f2, {}, 1000), CosetLimitExceeded);
}

TEST_CASE("coset enumeration of small groups") {
  CHECK(todd_coxeter(parse_presentation("< a | a^7 >"), {}, 100).index() == 7);
  CHECK(todd_coxeter(parse_presentation("< a b | a^2, b^2, (a b)^4 >"), {}, 100).index() == 8);
  CHECK(todd_coxeter(parse_presentation("< a b | a^2, b^3, (a b)^4 >"), {}, 100).index() == 24);
  const auto a5 = parse_presentation(fpg::testing::kA5);
  CHECK(todd_coxeter(a5, {parse_word("s", a5), parse_word("t", a5)}, 10).index() == 1);
  CHECK(todd_coxeter(a5, {parse_word("t", a5)}, 100).index() == 20);
  const auto higman = parse_presentation(fpg::testing::kHigman);
  CHECK_THROWS_AS(todd_coxeter(higman, {}, 2000), CosetLimitExceeded);
}

TEST_CASE("coset index is invariant under relator permutation") {
  const auto p = parse_presentation("< a b | a^2, b^3, (a b)^5 >");
  std::vector<Word> rels = p.relators();
  std::sort(rels.begin(), rels.end());
  do {
    const FinitePresentation q(p.generators(), rels);
    const auto t = todd_coxeter(q, {}, 1000);
    CHECK(t.index() == 60);
    check_closed(t);
  } while (std::next_permutation(rels.begin(), rels.end()));
}

TEST_CASE("coset tables are deterministic") {
  const auto p = parse_presentation("< a b | a^2, b^3, (a b)^5 >");
  CHECK(todd_coxeter(p, {parse_word("b", p)}, 1000).table == todd_coxeter(p, {parse_word("b", p)}, 1000).table);
}

TEST_CASE("reidemeister-schreier on free groups") {
  const auto f2 = parse_presentation("< s t | >");
  const std::vector<Word> sub{parse_word("s^2", f2), parse_word("t", f2), parse_word("s t s^-1", f2)};
  const auto rs = reidemeister_schreier(todd_coxeter(f2, sub, 100));
  CHECK(rs.generator_count() == 3);  // 2 (2 - 1) + 1
  CHECK(rs.relator_count() == 0);

  const auto f3 = parse_presentation("< x y z | >");
  const auto idx3 = todd_coxeter(f3, {parse_word("x^3", f3), parse_word("y", f3), parse_word("z", f3),
                                      parse_word("x y x^-1", f3), parse_word("x z x^-1", f3),
                                      parse_word("x^2 y x^-2", f3), parse_word("x^2 z x^-2", f3)},
                                 100);
  CHECK(idx3.index() == 3);
  CHECK(reidemeister_schreier(idx3).generator_count() == 3 * (3 - 1) + 1);
}

TEST_CASE("reidemeister-schreier index 1 gives an isomorphic presentation") {
  const auto a5 = parse_presentation(fpg::testing::kA5);
  const auto rs = reidemeister_schreier(todd_coxeter(a5, {parse_word("s", a5), parse_word("t", a5)}, 10));
  CHECK(rs.generator_count() == 2);
  CHECK(rs.relator_count() == 3);
  CHECK(epi_count(rs, alternating_group(5)) == 120);
}

TEST_CASE("reidemeister-schreier on F2 x F2 index 2") {
  const auto f2 = parse_presentation("< s t | >");
  const auto ff = direct_product(f2, f2);
  const std::vector<Word> sub{parse_word("s_1 s_2", ff), parse_word("t_1 t_2", ff), parse_word("s_1^2", ff),
                              parse_word("t_1", ff), parse_word("s_1 t_1 s_1^-1", ff)};
  const auto table = todd_coxeter(ff, sub, 1000);
  CHECK(table.index() == 2);
  const auto rs = reidemeister_schreier(table);
  CHECK(rs.generator_count() == 7);
  CHECK(rs.relator_count() == 8);
}

TEST_CASE("subgroup of A5 index 5 presents A4") {
  const auto a5 = parse_presentation(fpg::testing::kA5);
  // A point stabilizer: find it as the stabilizer via coset enumeration of <t, s t s t^-1 s> style words.
  const auto t = todd_coxeter(a5, {parse_word("t", a5), parse_word("s t s t^-1 s", a5)}, 1000);
  const auto rs = tietze_simplify(reidemeister_schreier(t), 1000);
  const auto sub_order = todd_coxeter(rs, {}, 1000).index();
  CHECK(sub_order * t.index() == 60);
}
