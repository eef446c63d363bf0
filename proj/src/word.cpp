#include "fpg/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpg {

namespace {

void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

void cyclically_reduce_in_place(std::vector<Syllable>& s) {
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
}

}  // namespace

Word free_reduce(std::span<const Syllable> raw, bool cyclic) {
  Word w;
  w.syllables_.reserve(raw.size());
  for (const Syllable& s : raw) push_reduced(w.syllables_, s);
  if (cyclic) cyclically_reduce_in_place(w.syllables_);
  return w;
}

Word Word::generator(GenId g, std::int64_t exp) {
  const Syllable s{g, exp};
  return free_reduce(std::span<const Syllable>(&s, 1));
}

Word Word::from_letters(std::span<const Letter> letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (Letter l : letters) raw.push_back({letter_gen(l), letter_inverted(l) ? -1 : 1});
  return free_reduce(raw);
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::llabs(s.exp));
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out *= base;
  return out;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  cyclically_reduce_in_place(w.syllables_);
  return w;
}

bool Word::is_cyclically_reduced() const noexcept {
  return syllables_.size() < 2 || syllables_.front().gen != syllables_.back().gen;
}

std::int64_t Word::exponent_sum(GenId g) const noexcept {
  std::int64_t total = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == g) total += s.exp;
  return total;
}

bool Word::uses(GenId g) const noexcept {
  return std::any_of(syllables_.begin(), syllables_.end(),
                     [g](const Syllable& s) { return s.gen == g; });
}

GenId Word::generator_bound() const noexcept {
  GenId bound = 0;
  for (const Syllable& s : syllables_) bound = std::max(bound, s.gen + 1);
  return bound;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const Syllable& s : syllables_) {
    const Letter l = letter_of(s.gen, s.exp < 0);
    for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.push_back(l);
  }
  return out;
}

Word Word::substitute(std::span<const Word> images) const {
  Word out;
  for (const Syllable& s : syllables_) out *= images[s.gen].pow(s.exp);
  return out;
}

Word Word::shifted(GenId offset) const {
  Word w = *this;
  for (Syllable& s : w.syllables_) s.gen += offset;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Syllable& s : rhs.syllables_) push_reduced(syllables_, s);
  return *this;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

}  // namespace fpg
