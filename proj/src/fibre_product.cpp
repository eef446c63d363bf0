#include "fpg/fibre_product.hpp"

#include "fpg/coset_enumeration.hpp"
#include "fpg/tietze.hpp"

namespace fpg {

namespace {

constexpr std::size_t kTietzeBudget = 10000;

}  // namespace

FibreProductGenerators fibre_product_generators(const FinitePresentation& h, const std::vector<Word>& kernel_gens) {
  FibreProductGenerators out{direct_product(h, h), {}};
  const auto n = static_cast<GenId>(h.generator_count());
  for (GenId g = 0; g < n; ++g) out.generators.push_back(Word::generator(g) * Word::generator(n + g));
  for (const Word& k : kernel_gens) out.generators.push_back(k);
  return out;
}

FibreProductGenerators fibre_product_generators(const RipsOutput& r) {
  return fibre_product_generators(r.h, r.kernel_generators);
}

FibreProductPresentation fibre_product_finite_quotient(const FinitePresentation& h,
                                                       const std::vector<Word>& kernel_gens,
                                                       std::size_t max_cosets) {
  std::vector<Word> quotient_rels = h.relators();
  for (const Word& k : kernel_gens)
    if (!k.empty()) quotient_rels.push_back(k);
  const FinitePresentation q(h.generators(), quotient_rels);
  const CosetTable quotient = todd_coxeter(q, {}, max_cosets);

  FibreProductPresentation out;
  out.quotient_order = quotient.index();
  out.generators = fibre_product_generators(h, kernel_gens);
  const CosetTable table = todd_coxeter(out.generators.ambient, out.generators.generators, max_cosets);
  out.schreier = reidemeister_schreier(table);
  out.simplified = tietze_simplify(out.schreier, kTietzeBudget);
  return out;
}

}  // namespace fpg
