#pragma once

#include <random>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg::testing {

inline constexpr const char* kHigman =
    "< a1 a2 a3 a4 | a2^-1 a1 a2 a1^-2, a3^-1 a2 a3 a2^-2, a4^-1 a3 a4 a3^-2, a1^-1 a4 a1 a4^-2 >";

inline constexpr const char* kA5 = "< s t | s^2, t^3, (s t)^5 >";

// Raw (possibly unreduced) syllable list over `gens` generators.
inline std::vector<Syllable> random_syllables(std::mt19937& rng, GenId gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> gen(0, gens - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::vector<Syllable> out(len(rng));
  for (Syllable& s : out) s = {gen(rng), exp(rng)};
  return out;
}

inline Word random_word(std::mt19937& rng, GenId gens, std::size_t max_len) {
  return free_reduce(random_syllables(rng, gens, max_len));
}

inline Word random_nonempty_word(std::mt19937& rng, GenId gens, std::size_t max_len) {
  for (;;) {
    Word w = random_word(rng, gens, max_len);
    if (!w.empty()) return w;
  }
}

inline FinitePresentation random_presentation(std::mt19937& rng, std::size_t max_gens, std::size_t max_rels,
                                              std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> ng(1, max_gens), nr(0, max_rels);
  const std::size_t n = ng(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<Word> rels;
  const std::size_t m = nr(rng);
  for (std::size_t i = 0; i < m; ++i) rels.push_back(random_nonempty_word(rng, static_cast<GenId>(n), max_len));
  return FinitePresentation(std::move(names), std::move(rels));
}

}  // namespace fpg::testing
