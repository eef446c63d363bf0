#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

// Higman's four-generator group: perfect, infinite, with no nontrivial
// finite quotients, and an aspherical presentation complex.
FinitePresentation higman_presentation();

// Replaces each relator cell of p by a copy of the complex of j, glued along
// the generator alpha. Output generators: the m suffixed copies of j's
// generators followed by p's generators; relators: the m copies of j's
// relators followed by r_i alpha_i^-1 for each relator r_i of p.
// Throws std::invalid_argument if alpha is not a generator of j, p has no
// relators, or a suffixed name collides with a generator of p.
FinitePresentation j_construction(const FinitePresentation& p, const FinitePresentation& j, const std::string& alpha);

// Words c_a = a * prod r_i^lambda_i with zero exponent sums, one per generator,
// where lambda solves (exponent matrix)^T lambda = -e_a. Throws NotPerfect.
std::vector<Word> uce_defect_words(const FinitePresentation& p);

// Presentation on the same generators of the universal central extension of
// the perfect group p: relators [a, r] for every generator a and relator r
// (a outer), followed by a^-1 c_a for every generator a. Throws NotPerfect.
FinitePresentation uce_presentation(const FinitePresentation& p);

}  // namespace fpg
