#include "fpg/rips.hpp"

#include <algorithm>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

constexpr std::uint64_t kMaxOffset = std::uint64_t{1} << 16;

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  auto used = [&](const std::string& n) { return std::find(taken.begin(), taken.end(), n) != taken.end(); };
  while (used(base)) base += "_";
  return base;
}

}  // namespace

Word rips_filler_word(GenId a, GenId b, std::uint64_t offset, std::uint64_t k) {
  Word w;
  for (std::uint64_t i = 1; i <= kFillerBlocks; ++i) {
    w *= Word::generator(b);
    w *= Word::generator(a, static_cast<std::int64_t>(offset + kFillerBlocks * k + i));
  }
  return w;
}

RipsOutput rips_construction(const FinitePresentation& q, std::uint64_t seed) {
  std::vector<std::string> gens = q.generators();
  for (const char* base : {"a", "b", "c"}) gens.push_back(fresh_name(gens, base));
  const auto n = static_cast<GenId>(q.generator_count());
  const GenId a = n, b = n + 1, c = n + 2;

  for (std::uint64_t offset = 1 + seed % 64; offset <= kMaxOffset; offset *= 2) {
    std::vector<Word> rels;
    std::uint64_t k = 0;
    for (GenId x = 0; x < n; ++x)
      for (int eps : {1, -1})
        for (GenId g : {a, b, c}) {
          const Word conj = Word::generator(x, eps) * Word::generator(g) * Word::generator(x, -eps);
          rels.push_back(conj * rips_filler_word(a, b, offset, k++).inverse());
        }
    for (const Word& y : q.relators()) rels.push_back(y * rips_filler_word(a, b, offset, k++).inverse());

    FinitePresentation h(gens, std::move(rels));
    const Ratio ratio = small_cancellation_ratio(h);
    if (!satisfies_c_prime_sixth(ratio)) continue;

    std::vector<Word> images;
    for (GenId x = 0; x < n; ++x) images.push_back(Word::generator(x));
    images.resize(n + 3);
    GeneratorMap map(h, q, std::move(images));
    return RipsOutput{std::move(h), {Word::generator(a), Word::generator(b), Word::generator(c)}, std::move(map),
                      offset, ratio};
  }
  throw SchemeExhausted("no filler offset up to " + std::to_string(kMaxOffset) + " certifies C'(1/6)");
}

}  // namespace fpg
