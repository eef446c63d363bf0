#include "fpg/small_cancellation.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace fpg {

namespace {

struct CyclicWord {
  std::vector<Syllable> syllables;
  std::uint64_t length = 0;
};

std::uint64_t magnitude(std::int64_t e) { return static_cast<std::uint64_t>(std::llabs(e)); }

// Letters of the rotation that starts `skip` letters into syllable s.
std::vector<Letter> rotation(const CyclicWord& w, std::size_t s, std::uint64_t skip) {
  std::vector<Letter> out;
  out.reserve(w.length);
  const std::size_t k = w.syllables.size();
  for (std::size_t step = 0; step <= k; ++step) {
    const Syllable& syl = w.syllables[(s + step) % k];
    const std::uint64_t len = magnitude(syl.exp);
    const std::uint64_t from = step == 0 ? skip : 0;
    const std::uint64_t to = step == k ? skip : len;
    for (std::uint64_t i = from; i < to; ++i) out.push_back(letter_of(syl.gen, syl.exp < 0));
  }
  return out;
}

}  // namespace

// Any maximal common prefix of two rotations starts inside runs of the same
// signed generator. Aligning those runs at their ends gives the longest
// candidate for that pair of runs, so it suffices to scan pairs of syllables
// and extend the match syllable by syllable. Offsets within one run only
// match up to the end of the run.
Ratio small_cancellation_ratio(const FinitePresentation& p) {
  std::vector<CyclicWord> words;
  for (const Word& r : p.relators()) {
    for (const Word& w : {r.cyclically_reduced(), r.cyclically_reduced().inverse()}) {
      if (w.empty()) continue;
      words.push_back({w.syllables(), w.length()});
    }
  }

  Ratio best{0, 1};
  for (std::size_t x = 0; x < words.size(); ++x)
    for (std::size_t y = x; y < words.size(); ++y) {
      const CyclicWord& wx = words[x];
      const CyclicWord& wy = words[y];
      const std::uint64_t cap = std::min(wx.length, wy.length);
      const std::size_t kx = wx.syllables.size(), ky = wy.syllables.size();
      // Two offsets into the same run: the shorter tail is a piece.
      if (x == y && kx > 1)
        for (const Syllable& a : wx.syllables)
          if (magnitude(a.exp) > 1 && best < Ratio{magnitude(a.exp) - 1, cap}) best = {magnitude(a.exp) - 1, cap};
      for (std::size_t s = 0; s < kx; ++s)
        for (std::size_t t = (x == y ? s + 1 : 0); t < ky; ++t) {
          const Syllable& a = wx.syllables[s];
          const Syllable& b = wy.syllables[t];
          if (a.gen != b.gen || (a.exp < 0) != (b.exp < 0)) continue;
          const std::uint64_t head = std::min(magnitude(a.exp), magnitude(b.exp));
          std::uint64_t piece = head;
          for (std::size_t step = 1; piece < cap; ++step) {
            const Syllable& u = wx.syllables[(s + step) % kx];
            const Syllable& v = wy.syllables[(t + step) % ky];
            if (u == v) {
              piece += magnitude(u.exp);
              continue;
            }
            if (u.gen == v.gen && (u.exp < 0) == (v.exp < 0)) piece += std::min(magnitude(u.exp), magnitude(v.exp));
            break;
          }
          if (piece >= cap) {
            piece = cap;
            // Equal rotations are the same element of the symmetrized set.
            if (wx.length == wy.length &&
                rotation(wx, s, magnitude(a.exp) - head) == rotation(wy, t, magnitude(b.exp) - head))
              continue;
          }
          const Ratio r{piece, cap};
          if (best < r) best = r;
        }
    }
  return best;
}

}  // namespace fpg
