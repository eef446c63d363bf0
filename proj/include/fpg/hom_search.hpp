#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpg/perm_group.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

struct SearchConfig {
  unsigned workers = 1;
  // Candidate images tried before giving up; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

enum class SearchStatus { complete, inconclusive };

struct SearchOutcome {
  SearchStatus status = SearchStatus::complete;
  std::uint64_t hom_count = 0;
  std::uint64_t epi_count = 0;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  // For epimorphism searches: generator images of the first epimorphism in
  // search order.
  std::optional<std::vector<Permutation>> witness;

  bool complete() const { return status == SearchStatus::complete; }
};

// Exhaustive depth-first enumeration of generator-image tuples. Generators are
// assigned in an order that lets each relator be checked as soon as all of its
// generators have images. Work is split across workers by the image of the
// first assigned generator; counts do not depend on the worker count.
SearchOutcome enumerate_homomorphisms(const FinitePresentation& p, const PermGroup& s, const SearchConfig& config = {});

// Stops at the first epimorphism (in single-worker search order).
SearchOutcome find_epimorphism(const FinitePresentation& p, const PermGroup& s, const SearchConfig& config = {});

std::uint64_t hom_count(const FinitePresentation& p, const PermGroup& s, unsigned workers = 1);
std::uint64_t epi_count(const FinitePresentation& p, const PermGroup& s, unsigned workers = 1);
// Witness generator images when an epimorphism exists.
std::optional<std::vector<Permutation>> epi_exists(const FinitePresentation& p, const PermGroup& s,
                                                   unsigned workers = 1);

// Checks that the images satisfy every relator of p; with `surjective`, also
// that they generate s. Uses only permutation arithmetic.
bool validates_homomorphism(const FinitePresentation& p, const PermGroup& s, const std::vector<Permutation>& images,
                            bool surjective);

// Generator order used by the search: each step picks the generator that
// completes the most relators, then the one most connected to the assigned
// set. Exposed for tests.
std::vector<GenId> search_order(const FinitePresentation& p);

}  // namespace fpg
