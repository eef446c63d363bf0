#pragma once

#include <cstddef>

#include "fpg/presentation.hpp"

namespace fpg {

// Greedy Tietze simplification. Every move is a sound Tietze transformation:
//  - cyclic reduction of relators,
//  - deletion of trivial relators and of relators that are cyclic conjugates
//    of another relator or its inverse,
//  - shortening a relator by a cyclic rotation of another relator whose
//    longer half it contains,
//  - elimination of a generator occurring exactly once in some relator.
// Each applied move costs one unit of budget. Generator count and total
// relator length never exceed those of the input; budget 0 returns the input.
FinitePresentation tietze_simplify(const FinitePresentation& p, std::size_t budget);

}  // namespace fpg
