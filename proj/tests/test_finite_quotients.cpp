#include <numeric>
#include <set>

#include "doctest.h"
#include "fpg/catalog.hpp"
#include "fpg/errors.hpp"
#include "fpg/hom_search.hpp"
#include "fpg/presentation.hpp"
#include "fpg/quotients.hpp"
#include "fpg/constructions.hpp"
#include "test_support.hpp"

using namespace fpg;

namespace {

// Independent oracle for two-generator groups without relators: every pair
// of elements, closure computed with raw permutations (no Cayley table).
std::pair<std::uint64_t, std::uint64_t> brute_force_f2(const PermGroup& g) {
  const auto elements = group_elements(g.degree(), g.generators(), 100000);
  std::uint64_t homs = 0, epis = 0;
  for (const auto& x : elements)
    for (const auto& y : elements) {
      ++homs;
      if (group_elements(g.degree(), {x, y}, 100000).size() == elements.size()) ++epis;
    }
  return {homs, epis};
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto q = Permutation::from_cycles(4, {{2, 3}});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p * q)[1] == 3);  // 1 -> 2 under p, then 2 -> 3 under q
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("alternating groups") {
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(7).order() == 2520);
  CHECK(alternating_group(4).order() == 12);
  CHECK_THROWS(alternating_group(2));
}

TEST_CASE("projective special linear groups") {
  const auto g7 = psl2(7);
  CHECK(g7.order() == 168);
  CHECK(g7.degree() == 8);
  CHECK(psl2(5).order() == 60);
  const auto g8 = psl2(8);
  CHECK(g8.order() == 504);
  CHECK(g8.degree() == 9);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(11).order() == 660);
  CHECK(psl2(13).order() == 1092);
  CHECK(psl2(17).order() == 2448);
  CHECK_THROWS(psl2(4));
  CHECK_THROWS(psl2(19));
}

TEST_CASE("catalog") {
  auto orders = [](const std::vector<PermGroup>& gs) {
    std::vector<std::uint64_t> out;
    for (const auto& g : gs) out.push_back(g.order());
    return out;
  };
  CHECK(orders(catalog_up_to(100)) == std::vector<std::uint64_t>{60});
  CHECK(orders(catalog_up_to(700)) == std::vector<std::uint64_t>{60, 168, 360, 504, 660});
  CHECK(catalog_up_to(2520).size() == 8);
  CHECK(catalog_up_to(59).empty());
  CHECK_THROWS_AS(catalog_up_to(2521), CatalogBoundExceeded);
  CHECK(catalog_group("PSL2_8").order() == 504);
  CHECK_THROWS(catalog_group("M11"));
}

TEST_CASE("cayley table agrees with permutation arithmetic") {
  const auto g = psl2(7);
  const auto& t = g.table();
  CHECK(t.order() == 168);
  for (CayleyTable::Element a = 0; a < 168; a += 7)
    for (CayleyTable::Element b = 0; b < 168; b += 5) {
      CHECK(t.element(t.mul(a, b)) == t.element(a) * t.element(b));
      CHECK(t.mul(a, t.inv(a)) == 0);
    }
  CHECK(t.element(0).is_identity());
}

TEST_CASE("hom and epi counts: free group onto A5") {
  const auto a5 = alternating_group(5);
  const auto f2 = parse_presentation("< x y | >");
  CHECK(hom_count(f2, a5) == 3600);
  CHECK(epi_count(f2, a5) == 2280);
  const auto [homs, epis] = brute_force_f2(a5);
  CHECK(homs == 3600);
  CHECK(epis == 2280);
}

TEST_CASE("hom and epi counts on relator examples") {
  const auto a5 = alternating_group(5);
  CHECK(epi_count(parse_presentation(fpg::testing::kA5), a5) == 120);
  const auto c5 = parse_presentation("< a | a^5 >");
  CHECK(hom_count(c5, a5) == 25);
  CHECK(epi_count(c5, a5) == 0);
  CHECK(hom_count(parse_presentation("< | >"), a5) == 1);
}

TEST_CASE("free group hom counts are |S|^n") {
  for (const auto& g : catalog_up_to(360)) {
    const auto n = static_cast<std::uint64_t>(g.order());
    CHECK(hom_count(parse_presentation("< a | >"), g) == n);
    CHECK(hom_count(parse_presentation("< a b | >"), g) == n * n);
  }
  const auto a5 = alternating_group(5);
  CHECK(hom_count(parse_presentation("< a b c | >"), a5) == 216000);
}

TEST_CASE("epi_exists agrees with epi_count and witnesses validate") {
  const auto a5 = alternating_group(5);
  for (const char* text : {fpg::testing::kA5, "< x y | >", "< a | a^5 >", "< a b | a^2, b^3, (a b)^7 >",
                           "< a b | a^2, b^3, (a b)^5, [a, b]^3 >"}) {
    const auto p = parse_presentation(text);
    const auto witness = epi_exists(p, a5);
    CHECK(witness.has_value() == (epi_count(p, a5) > 0));
    if (witness) CHECK(validates_homomorphism(p, a5, *witness, true));
  }
}

TEST_CASE("counts are independent of the number of workers") {
  const auto a5 = alternating_group(5);
  const auto p = parse_presentation("< a b c | a^2, b^3, [a, c] >");
  const auto base = enumerate_homomorphisms(p, a5, {1, 0});
  for (unsigned w : {2u, 3u, 8u}) {
    const auto other = enumerate_homomorphisms(p, a5, {w, 0});
    CHECK(other.hom_count == base.hom_count);
    CHECK(other.epi_count == base.epi_count);
  }
  const auto w1 = find_epimorphism(parse_presentation(fpg::testing::kA5), a5, {1, 0});
  const auto w4 = find_epimorphism(parse_presentation(fpg::testing::kA5), a5, {4, 0});
  CHECK(w1.witness == w4.witness);
}

TEST_CASE("counts are independent of generator ordering") {
  const auto a5 = alternating_group(5);
  const auto p = parse_presentation("< s t | s^2, t^3, (s t)^5 >");
  const auto q = parse_presentation("< t s | s^2, t^3, (s t)^5 >");
  CHECK(epi_count(p, a5) == epi_count(q, a5));
}

TEST_CASE("node limit yields an inconclusive result") {
  const auto a5 = alternating_group(5);
  const auto out = enumerate_homomorphisms(parse_presentation("< a b c | >"), a5, {1, 1000});
  CHECK(out.status == SearchStatus::inconclusive);
}

TEST_CASE("search order checks relators early") {
  // The generator only appearing in a single-letter power relator goes first.
  const auto p = parse_presentation("< a b c | [a, b], c^2, [b, c] >");
  const auto order = search_order(p);
  CHECK(order.front() == 2);
  CHECK(order.size() == 3);
}

TEST_CASE("direct-product lemma: epi counts double for Q = 1") {
  const auto a5 = alternating_group(5);
  const auto s = parse_presentation(fpg::testing::kA5);
  CHECK(epi_count(direct_product(s, s), a5) == 240);
}

TEST_CASE("fibre epi count formula") {
  CHECK(fibre_epi_count_formula(2280, 0) == 4560);
  CHECK(fibre_epi_count_formula(2280, 120) == 4440);
  CHECK(fibre_epi_count_formula(0, 0) == 0);
  CHECK_THROWS_AS(fibre_epi_count_formula(1, 3), std::domain_error);
}

TEST_CASE("simple quotient reports") {
  const auto c2 = simple_quotients_up_to(parse_presentation("< a | a^2 >"), 60);
  CHECK(c2.h1.to_string() == "Z/2");
  CHECK(c2.has_quotient());
  REQUIRE(c2.groups.size() == 1);
  CHECK(c2.groups[0].status == QuotientStatus::none);

  const auto p = parse_presentation(testing::kA5);
  const auto a5 = simple_quotients_up_to(p, 60);
  CHECK(a5.h1.trivial());
  REQUIRE(a5.first_witness() != nullptr);
  CHECK(a5.first_witness()->group == "A5");
  CHECK(validates_homomorphism(p, catalog_group("A5"), *a5.first_witness()->witness, true));

  const auto h = simple_quotients_up_to(higman_presentation(), 700);
  CHECK(h.h1.trivial());
  CHECK(h.groups.size() == 5);
  CHECK(h.complete());
  CHECK_FALSE(h.has_quotient());

  CHECK_THROWS_AS(simple_quotients_up_to(p, 3000), CatalogBoundExceeded);
}

TEST_CASE("node-limited quotient search is inconclusive, never negative") {
  SearchConfig c;
  c.node_limit = 100;
  const auto r = simple_quotients_up_to(higman_presentation(), 60, c);
  CHECK(r.groups[0].status == QuotientStatus::inconclusive);
  CHECK_FALSE(r.complete());
}

TEST_CASE("epi count report") {
  const auto p = parse_presentation("< s t | >");
  const auto r = epi_count_report(p, select_groups("A5,PSL2_7", 0));
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entry("A5").outcome.epi_count == 2280);
  CHECK(r.entry("A5").outcome.hom_count == 3600);
  CHECK(r.entry("PSL2_7").outcome.hom_count == 168 * 168);
  CHECK(r.complete());
  const auto j = to_json(r);
  CHECK(j["groups"][0]["epi_count"] == 2280);
  CHECK(select_groups("", 700).size() == 5);
  for (const auto& e : r.entries) {
    CHECK(e.outcome.epi_count <= e.outcome.hom_count);
    CHECK(e.outcome.hom_count <= e.order * e.order);
  }
}
