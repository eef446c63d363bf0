#pragma once

#include <cstddef>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/rips.hpp"

namespace fpg {

// Generators of the fibre product P < H x H of H -> Q, as words in the
// generators of direct_product(H, H): the diagonal (h, h) of every generator
// h of H, followed by (n, 1) for every kernel generator n.
struct FibreProductGenerators {
  FinitePresentation ambient;
  std::vector<Word> generators;
};

FibreProductGenerators fibre_product_generators(const RipsOutput& r);
FibreProductGenerators fibre_product_generators(const FinitePresentation& h, const std::vector<Word>& kernel_gens);

struct FibreProductPresentation {
  std::size_t quotient_order = 0;  // |Q| = index of P in H x H
  FibreProductGenerators generators;
  FinitePresentation schreier;     // Reidemeister-Schreier output
  FinitePresentation simplified;   // after Tietze simplification
};

// Finite-quotient case of the fibre product: Q = H / <<kernel_gens>> is shown
// finite by coset enumeration (at most max_cosets cosets), the fibre product
// is enumerated as a subgroup of index |Q| in H x H, rewritten on Schreier
// generators and simplified. Throws CosetLimitExceeded.
FibreProductPresentation fibre_product_finite_quotient(const FinitePresentation& h,
                                                       const std::vector<Word>& kernel_gens,
                                                       std::size_t max_cosets);

inline FinitePresentation fibre_product_presentation_finite_quotient(const FinitePresentation& h,
                                                                     const std::vector<Word>& kernel_gens,
                                                                     std::size_t max_cosets) {
  return fibre_product_finite_quotient(h, kernel_gens, max_cosets).simplified;
}

}  // namespace fpg
