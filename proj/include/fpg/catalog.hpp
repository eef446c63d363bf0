#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/perm_group.hpp"

namespace fpg {

// A_n on n points: a 3-cycle with an n-cycle (n odd) or (n-1)-cycle (n even).
PermGroup alternating_group(std::size_t n);

// PSL(2,q) acting on the projective line GF(q) u {inf}, q+1 points.
// Supported q: 5, 7, 8, 9, 11, 13, 17.
PermGroup psl2(std::uint32_t q);

// Largest order up to which catalog_up_to lists every nonabelian simple group.
inline constexpr std::uint64_t kCatalogCompleteBound = 2520;

// Nonabelian simple groups of order <= bound, one per isomorphism class,
// ascending by order. Isomorphic realizations are deduplicated by the known
// coincidences PSL(2,4) = PSL(2,5) = A5 and PSL(2,9) = A6.
// Throws CatalogBoundExceeded when bound > kCatalogCompleteBound.
std::vector<PermGroup> catalog_up_to(std::uint64_t bound);

// Catalog lookup by name ("A5", "PSL2_7", ...).
PermGroup catalog_group(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace fpg
