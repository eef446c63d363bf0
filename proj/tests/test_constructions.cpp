#include <algorithm>
#include <set>

#include "doctest.h"
#include "fpg/catalog.hpp"
#include "fpg/constructions.hpp"
#include "fpg/coset_enumeration.hpp"
#include "fpg/errors.hpp"
#include "fpg/fibre_product.hpp"
#include "fpg/hom_search.hpp"
#include "fpg/homology.hpp"
#include "fpg/rips.hpp"
#include "fpg/small_cancellation.hpp"
#include "fpg/tietze.hpp"
#include "fpg/tubular.hpp"
#include "test_support.hpp"

using namespace fpg;

namespace {

FinitePresentation higman() { return parse_presentation(testing::kHigman); }

// Letter-level oracle: materialize every rotation of every relator and its
// inverse, then scan all pairs for their longest common prefix.
Ratio naive_piece_ratio(const FinitePresentation& p) {
  std::set<std::vector<Letter>> sym;
  for (const Word& r : p.relators()) {
    for (const Word& w : {r.cyclically_reduced(), r.cyclically_reduced().inverse()}) {
      std::vector<Letter> l = w.letters();
      for (std::size_t i = 0; i < l.size(); ++i) {
        sym.insert(l);
        std::rotate(l.begin(), l.begin() + 1, l.end());
      }
    }
  }
  Ratio best{0, 1};
  for (auto i = sym.begin(); i != sym.end(); ++i)
    for (auto j = std::next(i); j != sym.end(); ++j) {
      std::size_t k = 0;
      while (k < i->size() && k < j->size() && (*i)[k] == (*j)[k]) ++k;
      if (k == 0) continue;
      const Ratio r{k, std::min(i->size(), j->size())};
      if (best < r) best = r;
    }
  return best;
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t gens) {
  std::vector<std::int64_t> out(gens, 0);
  for (const Syllable& s : w.syllables()) out[s.gen] += s.exp;
  return out;
}

}  // namespace

TEST_CASE("higman presentation") {
  const auto h = higman_presentation();
  CHECK(h == higman());
  CHECK(abelianization_invariants(h).trivial());
  CHECK(euler_characteristic(h) == 1);
  CHECK(h2_rank_2complex(h) == 0);
}

TEST_CASE("j-construction shape") {
  const auto x = higman();
  const auto p = parse_presentation("< x | x >");
  const auto j = j_construction(p, x, "a1");
  CHECK(j.generator_count() == 5);
  CHECK(j.relator_count() == 5);
  CHECK(j.generators().back() == "x");
  CHECK(j.render(j.relators().back()) == "x a1_1^-1");

  const auto q = parse_presentation("< x y | x y x^-1 y^-2, x^3, [x, y] >");
  const auto jq = j_construction(q, x, "a1");
  CHECK(jq.generator_count() == 14);
  CHECK(jq.relator_count() == 15);
  CHECK(euler_characteristic(jq) == 2);

  CHECK(abelianization_invariants(j_construction(parse_presentation("< a | a^2 >"), x, "a1")).to_string() == "Z/2");
  CHECK_THROWS_AS(j_construction(p, x, "zz"), std::invalid_argument);
  CHECK_THROWS_AS(j_construction(parse_presentation("< x | >"), x, "a1"), std::invalid_argument);
}

TEST_CASE("j-construction preserves H1 and has chi = m - n + 1") {
  std::mt19937 rng(17);
  const auto x = higman();
  for (int trial = 0; trial < 25; ++trial) {
    auto p = testing::random_presentation(rng, 3, 4, 6);
    if (p.relator_count() == 0) continue;
    const auto j = j_construction(p, x, "a2");
    CHECK(abelianization_invariants(j) == abelianization_invariants(p));
    const auto m = static_cast<std::int64_t>(p.relator_count());
    const auto n = static_cast<std::int64_t>(p.generator_count());
    CHECK(euler_characteristic(j) == m - n + 1);
  }
}

TEST_CASE("uce of higman") {
  const auto h = higman();
  const auto c = uce_defect_words(h);
  REQUIRE(c.size() == 4);
  CHECK(h.render(c[0]) == "a1 a2^-1 a1 a2 a1^-2");
  for (const Word& w : c) CHECK(exponent_sums(w, 4) == std::vector<std::int64_t>(4, 0));
  const auto u = uce_presentation(h);
  CHECK(u.generators() == h.generators());
  CHECK(u.relator_count() == 20);
  CHECK(abelianization_invariants(u).trivial());
  CHECK_THROWS_AS(uce_presentation(parse_presentation("< a b | >")), NotPerfect);
  CHECK_THROWS_AS(uce_presentation(parse_presentation("< a | a^2 >")), NotPerfect);
}

TEST_CASE("uce defect words lie in the normal closure and commutator subgroup") {
  // A5 presentation is perfect; c_a maps to a under every homomorphism.
  const auto p = parse_presentation(testing::kA5);
  const auto c = uce_defect_words(p);
  for (std::size_t a = 0; a < c.size(); ++a) {
    CHECK(exponent_sums(c[a], 2) == std::vector<std::int64_t>(2, 0));
    const Word moved = Word::generator(static_cast<GenId>(a)).inverse() * c[a];
    const auto t = todd_coxeter(p, {}, 1000);
    for (std::size_t coset = 0; coset < t.index(); ++coset) CHECK(t.act(coset, moved) == coset);
  }
}

TEST_CASE("uce epi counts dominate the base") {
  const auto p = parse_presentation(testing::kA5);
  const auto u = uce_presentation(p);
  // [s, s^2] and [t, t^3] freely reduce to 1 and are dropped.
  CHECK(u.relator_count() == 2 * (1 + 3) - 2);
  for (const char* name : {"A5", "PSL2_7"}) {
    const auto& s = catalog_group(name);
    CHECK(epi_count(u, s) >= epi_count(p, s));
  }
}

TEST_CASE("small cancellation ratio examples") {
  const auto comm = small_cancellation_ratio(parse_presentation("< a b | a b a^-1 b^-1 >"));
  CHECK_FALSE(comm < Ratio{1, 4});
  CHECK(small_cancellation_ratio(parse_presentation("< a | a >")) == Ratio{0, 1});
  const auto single = parse_presentation("< a b | a b a b^2 a b^3 >");
  CHECK(small_cancellation_ratio(single) == naive_piece_ratio(single));
  CHECK_FALSE(satisfies_c_prime_sixth(Ratio{1, 6}));
  CHECK(satisfies_c_prime_sixth(Ratio{1, 7}));
}

TEST_CASE("piece checker agrees with the naive oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_presentation(rng, 3, 3, 8);
    CHECK_MESSAGE(small_cancellation_ratio(p) == naive_piece_ratio(p), p.render());
  }
}

TEST_CASE("rips construction counts and metric") {
  const auto r1 = rips_construction(parse_presentation("< x | x^2 >"), 0);
  CHECK(r1.h.generator_count() == 4);
  CHECK(r1.h.relator_count() == 7);
  CHECK(satisfies_c_prime_sixth(r1.ratio));
  CHECK(small_cancellation_ratio(r1.h) == r1.ratio);

  const auto r2 = rips_construction(parse_presentation("< x y | >"), 5);
  CHECK(r2.h.generator_count() == 5);
  CHECK(r2.h.relator_count() == 12);
  CHECK(satisfies_c_prime_sixth(small_cancellation_ratio(r2.h)));

  // Same seed, same output.
  CHECK(rips_construction(parse_presentation("< x | x^2 >"), 0).h == r1.h);
}

TEST_CASE("rips quotient map kills the kernel and respects relators") {
  const auto q = parse_presentation("< x | x^2 >");
  const auto r = rips_construction(q, 1);
  CHECK(r.kernel_generators.size() == 3);
  for (const Word& k : r.kernel_generators) CHECK(r.quotient_map.apply(k).empty());
  // Every relator of H maps to a relator consequence of Q; here a power of x^2.
  for (const Word& rel : r.h.relators()) {
    const Word image = r.quotient_map.apply(rel);
    CHECK(image.exponent_sum(0) % 2 == 0);
  }
}

TEST_CASE("rips property over random inputs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = testing::random_presentation(rng, 3, 4, 6);
    const auto r = rips_construction(q, static_cast<std::uint64_t>(trial));
    CHECK(r.h.relator_count() == q.relator_count() + 6 * q.generator_count());
    CHECK(r.h.generator_count() == q.generator_count() + 3);
    CHECK(satisfies_c_prime_sixth(small_cancellation_ratio(r.h)));
  }
}

TEST_CASE("rips filler words are distinct and positive") {
  std::set<Word> seen;
  for (std::uint64_t k = 0; k < 30; ++k) {
    const Word w = rips_filler_word(0, 1, 20, k);
    CHECK(seen.insert(w).second);
    for (const Syllable& s : w.syllables()) CHECK(s.exp > 0);
  }
}

TEST_CASE("fibre product generators") {
  const auto r1 = rips_construction(parse_presentation("< x | x^2 >"), 0);
  const auto g1 = fibre_product_generators(r1);
  CHECK(g1.ambient.generator_count() == 8);
  CHECK(g1.generators.size() == 4 + 3);
  const auto r2 = rips_construction(parse_presentation("< x y | x y x^-1 y^-1 >"), 0);
  CHECK(fibre_product_generators(r2).generators.size() == 5 + 3);

  // Both projections of a diagonal generator agree.
  const std::size_t n = r1.h.generator_count();
  std::vector<Word> first(2 * n), second(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = Word::generator(static_cast<GenId>(i));
    second[n + i] = Word::generator(static_cast<GenId>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = g1.generators[i];
    CHECK(w.substitute(first) == w.substitute(second));
  }
  for (std::size_t i = n; i < g1.generators.size(); ++i) CHECK(g1.generators[i].substitute(second).empty());
}

TEST_CASE("fibre product over a finite quotient") {
  const auto f2 = parse_presentation("< s t | >");
  const auto ker = std::vector<Word>{parse_word("s^2", f2), parse_word("t", f2), parse_word("s t s^-1", f2)};
  const auto fp = fibre_product_finite_quotient(f2, ker, 1000);
  CHECK(fp.quotient_order == 2);
  CHECK(fp.schreier.generator_count() == 7);
  CHECK(fp.schreier.relator_count() == 8);
  CHECK(fp.simplified.generator_count() <= fp.schreier.generator_count());
  CHECK(abelianization_invariants(fp.simplified) == abelianization_invariants(fp.schreier));

  // Epi(Z/2, A5) is empty, so P and F2 x F2 have the same epimorphisms to A5.
  CHECK(epi_count(fp.simplified, catalog_group("A5")) == 4560);

  const auto c2 = parse_presentation("< s | s^2 >");
  const auto triv = fibre_product_finite_quotient(c2, {parse_word("s", c2)}, 100);
  CHECK(triv.quotient_order == 1);
  CHECK(abelianization_invariants(triv.simplified).to_string() == "Z/2 + Z/2");

  CHECK_THROWS_AS(fibre_product_finite_quotient(f2, {}, 1000), CosetLimitExceeded);
}

TEST_CASE("tubular toy bundle presents Z") {
  TubularBundleData b;
  b.d = 1;
  b.n = 1;
  b.m = 1;
  b.vertices = {parse_presentation("< g | g >")};
  b.loops = {parse_word("g", b.vertices[0])};
  b.rho = {parse_word("a1", std::vector<std::string>{"a1"})};
  b.shifts = {{1}};
  const auto p = tubular_bundle_presentation(b);
  CHECK(p.generators() == std::vector<std::string>{"a1", "t1", "g_1"});
  CHECK(p.render() == "< a1 t1 g_1 | t1 a1 t1^-1 a1^-1, t1 g_1 t1^-1 g_1^-1, g_1, a1^-1 g_1 t1 >");
  const auto s = tietze_simplify(p, 1000);
  CHECK(s.generator_count() == 1);
  CHECK(s.relator_count() == 0);
  CHECK(abelianization_invariants(p).to_string() == "Z");
}

TEST_CASE("tubular counts and zero-shift H1") {
  const auto x = higman();
  const Word c = parse_word("a1", x);
  for (std::size_t d : {1u, 2u}) {
    const std::size_t n = 2, m = n + d;
    std::vector<Word> rho;
    const auto rose = rose_generators(n);
    for (std::size_t i = 0; i < m; ++i) rho.push_back(parse_word(i % 2 ? "a2" : "a1 a2", rose));
    const TubularBundleEnumeration e(x, c, d, n, m, rho, 0);
    REQUIRE(e.size() == 1);
    const auto p = tubular_bundle_presentation(e.at(0));
    CHECK(p.generator_count() == n + d + 4 * m);
    CHECK(p.relator_count() == d * (d - 1) / 2 + d * (n + 4 * m) + 4 * m + m);
    const auto h1 = abelianization_invariants(p);
    CHECK(h1.torsion.empty());
    CHECK(h1.free_rank >= d);
  }
}

TEST_CASE("tubular zero shift over perfect base has H1 = Z^d") {
  // Base P = < a1 a2 | a1, a2, a1 a2 > is perfect; rho lists its relators.
  const auto x = higman();
  const auto rose = rose_generators(2);
  std::vector<Word> rho = {parse_word("a1", rose), parse_word("a2", rose), parse_word("a1 a2", rose)};
  const TubularBundleEnumeration e(x, parse_word("a1", x), 1, 2, 3, rho, 0);
  CHECK(abelianization_invariants(tubular_bundle_presentation(e.at(0))).to_string() == "Z");
}

TEST_CASE("tubular enumeration order and counts") {
  const auto x = parse_presentation("< g | g >");
  const Word c = parse_word("g", x);
  const auto rose = rose_generators(1);
  const TubularBundleEnumeration e1(x, c, 1, 1, 1, {parse_word("a1", rose)}, 1);
  REQUIRE(e1.size() == 3);
  CHECK(e1.at(0).shifts == std::vector<std::vector<std::int64_t>>{{-1}});
  CHECK(e1.at(1).shifts == std::vector<std::vector<std::int64_t>>{{0}});
  CHECK(e1.at(2).shifts == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK_THROWS_AS(e1.at(3), std::out_of_range);

  const TubularBundleEnumeration e2(x, c, 2, 1, 2, {parse_word("a1", rose), parse_word("a1^2", rose)}, 1);
  CHECK(e2.size() == 81);
  std::set<std::vector<std::vector<std::int64_t>>> seen;
  std::vector<std::vector<std::int64_t>> prev;
  for (std::uint64_t i = 0; i < e2.size(); ++i) {
    auto s = e2.at(i).shifts;
    if (i > 0) CHECK(prev < s);
    seen.insert(s);
    prev = s;
  }
  CHECK(seen.size() == 81);

  const TubularBundleEnumeration e0(x, c, 3, 1, 2, {parse_word("a1", rose), parse_word("a1", rose)}, 0);
  CHECK(e0.size() == 1);
  CHECK(e0.at(0).shifts == std::vector<std::vector<std::int64_t>>(2, std::vector<std::int64_t>(3, 0)));
}

TEST_CASE("tubular json round trip and validation") {
  const auto x = higman();
  const auto rose = rose_generators(1);
  const TubularBundleEnumeration e(x, parse_word("a1", x), 1, 1, 1, {parse_word("a1", rose)}, 2);
  const auto b = e.at(4);
  const auto j = to_json(b);
  CHECK(j["shifts"] == nlohmann::json::parse("[[2]]"));
  const auto back = tubular_bundle_from_json(j);
  CHECK(tubular_bundle_presentation(back) == tubular_bundle_presentation(b));

  auto bad = j;
  bad["shifts"] = nlohmann::json::parse("[[1, 2]]");
  CHECK_THROWS_AS(tubular_bundle_from_json(bad), std::invalid_argument);
}
