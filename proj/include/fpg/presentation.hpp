#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/int_matrix.hpp"
#include "fpg/word.hpp"

namespace fpg {

// ASCII letters, digits and underscore, not starting with a digit.
bool is_valid_identifier(std::string_view name);

// Ordered generators plus freely reduced, nonempty relators.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }

  std::optional<GenId> find(std::string_view name) const;
  // Throws std::invalid_argument for an unknown name.
  GenId id(std::string_view name) const;
  Word gen(std::string_view name, std::int64_t exp = 1) const { return Word::generator(id(name), exp); }

  // Total number of letters over all relators.
  std::size_t total_relator_length() const;

  std::string render() const;
  std::string render(const Word& w) const;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

FinitePresentation parse_presentation(std::string_view text);
// Parses a word (same atom grammar as relators; "u = v" allowed) over the
// generators of p. "1" or an empty string denotes the identity.
Word parse_word(std::string_view text, const FinitePresentation& p);
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

// Renders a word with explicit ^-1 exponents; the identity renders as "1".
std::string render_word(const Word& w, const std::vector<std::string>& generators);

// A homomorphism given on generators. Relator preservation is checked on
// demand by the caller, never at construction.
struct GeneratorMap {
  FinitePresentation source;
  FinitePresentation target;
  std::vector<Word> images;

  GeneratorMap() = default;
  GeneratorMap(FinitePresentation source, FinitePresentation target, std::vector<Word> images);
  Word apply(const Word& w) const { return w.substitute(images); }
};

// M[i][j] = exponent sum of generator j in relator i.
IntMatrix exponent_matrix(const FinitePresentation& p);

// 1 - |generators| + |relators| of the presentation 2-complex.
std::int64_t euler_characteristic(const FinitePresentation& p);

// Generators of both factors, their relators, then [g1,g2] for every pair.
// Clashing names are disambiguated by suffixing _1 / _2 on the whole factor.
FinitePresentation direct_product(const FinitePresentation& p1, const FinitePresentation& p2);

// Disjoint-copy suffix: "g" of copy i becomes "g_i".
std::string copy_name(std::string_view name, std::size_t copy);

}  // namespace fpg
