#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

// Closed, complete action of the generators on the cosets of a subgroup.
// Columns are letters (2g: generator g, 2g+1: its inverse). Coset 0 is the
// subgroup itself and cosets are numbered in breadth-first order.
struct CosetTable {
  FinitePresentation presentation;
  std::vector<Word> subgroup_gens;
  std::vector<std::vector<std::uint32_t>> table;

  std::size_t index() const { return table.size(); }
  std::uint32_t act(std::uint32_t coset, Letter l) const { return table[coset][l]; }
  std::uint32_t act(std::uint32_t coset, const Word& w) const;
};

// HLT coset enumeration with lowest-numbered-coset-first processing.
// Throws CosetLimitExceeded when more than max_cosets live cosets are needed.
CosetTable todd_coxeter(const FinitePresentation& p, const std::vector<Word>& subgroup_gens, std::size_t max_cosets);

// Presentation of the subgroup on its Schreier generators, with the
// relators c R c^-1 rewritten for every coset c and relator R. Schreier
// generator (c, g) is named "<g>_<c>"; tree edges of the breadth-first
// transversal are omitted.
FinitePresentation reidemeister_schreier(const CosetTable& table);

}  // namespace fpg
