#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace fpg {

// Generators are interned per presentation; words carry ids, never names.
using GenId = std::uint32_t;

struct Syllable {
  GenId gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Letter encoding shared by the coset enumerator and the piece checker:
// 2*g for the generator g, 2*g+1 for its inverse.
using Letter = std::uint32_t;
constexpr Letter letter_of(GenId g, bool inverse) { return 2 * g + (inverse ? 1u : 0u); }
constexpr GenId letter_gen(Letter l) { return l / 2; }
constexpr bool letter_inverted(Letter l) { return (l & 1u) != 0; }
constexpr Letter letter_inverse(Letter l) { return l ^ 1u; }

// A freely reduced word in syllable form: adjacent syllables have distinct
// generators and every exponent is nonzero. The empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word generator(GenId g, std::int64_t exp = 1);
  static Word from_letters(std::span<const Letter> letters);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }

  // Number of letters, i.e. the sum of |exponent|.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word cyclically_reduced() const;
  bool is_cyclically_reduced() const noexcept;

  std::int64_t exponent_sum(GenId g) const noexcept;
  bool uses(GenId g) const noexcept;
  // One past the largest generator id occurring, 0 for the empty word.
  GenId generator_bound() const noexcept;

  std::vector<Letter> letters() const;

  // Replaces every generator g by images[g].
  Word substitute(std::span<const Word> images) const;
  // Adds offset to every generator id.
  Word shifted(GenId offset) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Syllable> raw, bool cyclic);
  std::vector<Syllable> syllables_;
};

// Free reduction of an arbitrary syllable list (zero exponents and repeated
// generators allowed). With cyclic set, the result is also cyclically reduced.
Word free_reduce(std::span<const Syllable> raw, bool cyclic = false);

// [u,v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

}  // namespace fpg
