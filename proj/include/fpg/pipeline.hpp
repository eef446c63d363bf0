#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpg/fibre_product.hpp"
#include "fpg/homology.hpp"
#include "fpg/hom_search.hpp"
#include "fpg/quotients.hpp"
#include "fpg/rips.hpp"
#include "fpg/tubular.hpp"

namespace fpg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultBound = 2520;
inline constexpr std::uint64_t kDefaultHeight = 2;
// Node budget for the H and H x H epi tables when the caller sets none.
inline constexpr std::uint64_t kPipelineNodeLimit = 5'000'000;

struct FingerprintEntry {
  std::string group;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t epi_count = 0;

  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

// H1 and the epimorphism counts are invariants of the group; h2_rank and the
// Euler characteristic are invariants of the presentation complex and are
// carried as data.
struct Fingerprint {
  AbelianInvariants h1;
  std::size_t h2_rank = 0;
  std::int64_t euler = 0;
  std::uint64_t bound = 0;
  // Empty when the epimorphism searches were skipped.
  std::vector<FingerprintEntry> epi;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FinitePresentation& p, std::uint64_t bound, const SearchConfig& config = {});

// Necessary condition for the two presentations to define isomorphic groups:
// equal H1 and equal epimorphism counts wherever both searches completed.
// Never sufficient.
bool fingerprint_candidate(const Fingerprint& target, const Fingerprint& other);

enum class Verdict { epi_witness_found, no_obstruction_up_to, inconclusive };

std::string to_string(Verdict v);

struct EpiTableRow {
  std::string group;
  std::uint64_t order = 0;
  SearchOutcome q;
  SearchOutcome h;
  SearchOutcome hxh;
  // 2 |Epi(H,S)| - |Epi(Q,S)| when both inputs are complete.
  std::optional<std::uint64_t> fibre_formula;
};

struct PairReport {
  FinitePresentation q;
  std::uint64_t bound = 0;
  std::uint64_t seed = 0;
  SearchConfig config;
  AbelianInvariants q_h1;
  std::size_t q_h2_rank = 0;
  RipsOutput rips;
  FibreProductGenerators fibre;
  SimpleQuotientReport quotients;
  std::vector<EpiTableRow> epi_table;
  Verdict verdict = Verdict::inconclusive;
  // Group of the witness for epi_witness_found.
  std::string witness_group;
};

// Section 2.3 reduction at the level of bounded evidence. Requires Q perfect
// (throws NotPerfect). Epi tables for H and H x H run under
// config.node_limit and are usually inconclusive for larger groups.
PairReport pipeline_grothendieck(const FinitePresentation& q, std::uint64_t bound, const SearchConfig& config = {},
                                 std::uint64_t seed = 0);

struct BundleReport {
  std::uint64_t index = 0;
  TubularBundleData data;
  FinitePresentation presentation;
  bool counts_match = false;
  Fingerprint fingerprint;
  bool candidate = false;
};

struct TheoremBReport {
  FinitePresentation p;
  std::uint64_t bound = 0;
  std::uint64_t height = 0;
  SearchConfig config;
  FinitePresentation j;
  bool euler_matches = false;
  FinitePresentation uce;
  Fingerprint uce_fingerprint;
  SimpleQuotientReport uce_quotients;
  std::size_t d = 0;
  std::vector<BundleReport> bundles;

  std::vector<std::uint64_t> candidates() const;
  bool complete() const;
};

// Section 5 pipeline: J-construction over Higman's complex with c = a1, its
// universal central extension, and tubular bundles of type (m - n; n, m)
// over (X, c) with rho(i) = r_i, compared by fingerprint. Bundle epimorphism
// counts are computed only when H1 already agrees with the target.
// Throws NotPerfect.
TheoremBReport pipeline_theorem_b(const FinitePresentation& p, std::uint64_t bound, std::uint64_t height,
                                  const SearchConfig& config = {});

// The presentation with generators renamed a1..an.
FinitePresentation with_rose_generators(const FinitePresentation& p);

nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const PairReport& r);
nlohmann::json to_json(const TheoremBReport& r);

}  // namespace fpg
