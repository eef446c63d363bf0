#pragma once

#include <cstdint>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/small_cancellation.hpp"

namespace fpg {

struct RipsOutput {
  // Generators of Q followed by the three kernel generators.
  FinitePresentation h;
  std::vector<Word> kernel_generators;
  // H -> Q: identity on Q's generators, kernel generators to 1.
  GeneratorMap quotient_map;
  // Filler-word exponent offset that achieved C'(1/6), and the certified ratio.
  std::uint64_t offset = 0;
  Ratio ratio;
};

// Blocks per filler word. Adjacent blocks bound the longest piece by about
// 2/kFillerBlocks of a relator, so the count must exceed 12 for C'(1/6).
inline constexpr std::uint64_t kFillerBlocks = 14;

// k-th filler word over the kernel generators (a, b):
// b a^(l + B k + 1) b a^(l + B k + 2) ... b a^(l + B k + B), B = kFillerBlocks.
Word rips_filler_word(GenId a, GenId b, std::uint64_t offset, std::uint64_t k);

// H = < x, a, b, c | x^e g x^-e W^-1 (x in gens(Q), e = +-1, g in {a,b,c}),
//                    y W^-1 (y in relators(Q)) > with pairwise distinct
// filler words W. The starting offset is derived from the seed and doubled
// until the output certifies C'(1/6). Throws SchemeExhausted past the
// offset budget.
RipsOutput rips_construction(const FinitePresentation& q, std::uint64_t seed);

}  // namespace fpg
