#include "fpg/constructions.hpp"

#include <stdexcept>

#include "fpg/errors.hpp"
#include "fpg/homology.hpp"

namespace fpg {

FinitePresentation higman_presentation() {
  return parse_presentation(
      "< a1 a2 a3 a4 | a2^-1 a1 a2 a1^-2, a3^-1 a2 a3 a2^-2, a4^-1 a3 a4 a3^-2, a1^-1 a4 a1 a4^-2 >");
}

FinitePresentation j_construction(const FinitePresentation& p, const FinitePresentation& j, const std::string& alpha) {
  const auto alpha_id = j.find(alpha);
  if (!alpha_id) throw std::invalid_argument("'" + alpha + "' is not a generator of J");
  const std::size_t m = p.relator_count();
  if (m == 0) throw std::invalid_argument("J-construction needs at least one relator");
  const auto jn = static_cast<GenId>(j.generator_count());

  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= m; ++i)
    for (const std::string& b : j.generators()) {
      std::string name = copy_name(b, i);
      if (p.find(name)) throw std::invalid_argument("copy generator '" + name + "' collides with P");
      gens.push_back(std::move(name));
    }
  const auto offset = static_cast<GenId>(gens.size());
  gens.insert(gens.end(), p.generators().begin(), p.generators().end());

  std::vector<Word> rels;
  for (std::size_t i = 0; i < m; ++i)
    for (const Word& s : j.relators()) rels.push_back(s.shifted(static_cast<GenId>(i) * jn));
  for (std::size_t i = 0; i < m; ++i) {
    const Word alpha_i = Word::generator(static_cast<GenId>(i) * jn + *alpha_id);
    rels.push_back(p.relators()[i].shifted(offset) * alpha_i.inverse());
  }
  return FinitePresentation(std::move(gens), std::move(rels));
}

std::vector<Word> uce_defect_words(const FinitePresentation& p) {
  const AbelianInvariants h1 = abelianization_invariants(p);
  if (!h1.trivial()) throw NotPerfect(h1.to_string());
  const IntMatrix m = exponent_matrix(p);
  std::vector<Word> out;
  for (GenId a = 0; a < p.generator_count(); ++a) {
    std::vector<BigInt> rhs(p.generator_count());
    rhs[a] = -1;
    const auto lambda = solve_integer_system(m, rhs);
    if (!lambda) throw NotPerfect(h1.to_string());
    Word c = Word::generator(a);
    for (std::size_t i = 0; i < p.relator_count(); ++i)
      c *= p.relators()[i].pow(static_cast<std::int64_t>((*lambda)[i]));
    out.push_back(std::move(c));
  }
  return out;
}

FinitePresentation uce_presentation(const FinitePresentation& p) {
  const std::vector<Word> defects = uce_defect_words(p);
  std::vector<Word> rels;
  for (GenId a = 0; a < p.generator_count(); ++a)
    for (const Word& r : p.relators()) {
      // [a, r] is freely trivial only when r is a power of a; such relations
      // hold in every group and are left out.
      Word c = commutator(Word::generator(a), r);
      if (!c.empty()) rels.push_back(std::move(c));
    }
  for (GenId a = 0; a < p.generator_count(); ++a) rels.push_back(Word::generator(a).inverse() * defects[a]);
  return FinitePresentation(p.generators(), std::move(rels));
}

}  // namespace fpg
