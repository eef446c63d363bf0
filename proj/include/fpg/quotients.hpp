#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpg/hom_search.hpp"
#include "fpg/homology.hpp"
#include "fpg/perm_group.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

struct EpiCountEntry {
  std::string group;
  std::uint64_t order = 0;
  SearchOutcome outcome;
};

struct EpiCountReport {
  std::string presentation;
  std::vector<EpiCountEntry> entries;
  SearchConfig config;

  bool complete() const;
  // Throws std::out_of_range for a group not in the report.
  const EpiCountEntry& entry(const std::string& group) const;
};

// Full hom/epi counts of p into each group.
EpiCountReport epi_count_report(const FinitePresentation& p, const std::vector<PermGroup>& groups,
                                const SearchConfig& config = {});

// Groups named in a comma-separated list ("A5,PSL2_7"), or every catalog group
// up to max_order when the list is empty.
std::vector<PermGroup> select_groups(const std::string& names, std::uint64_t max_order);

enum class QuotientStatus { found, none, inconclusive };

struct QuotientEntry {
  std::string group;
  std::uint64_t order = 0;
  QuotientStatus status = QuotientStatus::none;
  std::optional<std::vector<Permutation>> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SimpleQuotientReport {
  std::uint64_t bound = 0;
  AbelianInvariants h1;
  std::vector<QuotientEntry> groups;

  // A nontrivial quotient is certified (abelian via H1, or a witness).
  bool has_quotient() const;
  bool complete() const;
  const QuotientEntry* first_witness() const;
};

// H1 plus an epimorphism search onto every catalog group of order <= bound.
// "No quotient" is only as strong as the catalog, which is complete up to
// kCatalogCompleteBound. Throws CatalogBoundExceeded.
SimpleQuotientReport simple_quotients_up_to(const FinitePresentation& p, std::uint64_t bound,
                                            const SearchConfig& config = {});

// |Epi(P, S)| = 2 |Epi(H, S)| - |Epi(Q, S)| for the fibre product P of H -> Q
// and nonabelian simple S. Throws std::domain_error when the counts are
// inconsistent (negative result).
std::uint64_t fibre_epi_count_formula(std::uint64_t epi_h, std::uint64_t epi_q);

std::string to_string(QuotientStatus s);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const AbelianInvariants& a);
nlohmann::json to_json(const SearchOutcome& o);
nlohmann::json to_json(const EpiCountReport& r);
nlohmann::json to_json(const SimpleQuotientReport& r);

}  // namespace fpg
