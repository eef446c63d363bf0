#include "fpg/pipeline.hpp"

#include <stdexcept>

#include "fpg/catalog.hpp"
#include "fpg/constructions.hpp"
#include "fpg/errors.hpp"

namespace fpg {

namespace {

constexpr const char* kResidualFiniteness =
    "Residual finiteness of H and of the fibre product P is assumed from Wise's theorem on C'(1/6) groups; it is not "
    "verified.";
constexpr const char* kH2Caveat =
    "h2_rank is the rank of H2 of the presentation 2-complex. It equals the rank of H2 of the group only when the "
    "complex is aspherical.";

void require_perfect(const FinitePresentation& p) {
  const AbelianInvariants h1 = abelianization_invariants(p);
  if (!h1.trivial()) throw NotPerfect(h1.to_string());
}

SearchConfig with_default_limit(SearchConfig c) {
  if (c.node_limit == 0) c.node_limit = kPipelineNodeLimit;
  return c;
}

// Quotient report from full counts; witnesses are only searched for where a
// count is positive.
SimpleQuotientReport quotients_from_counts(const FinitePresentation& p, const AbelianInvariants& h1,
                                           std::uint64_t bound, const std::vector<PermGroup>& groups,
                                           const std::vector<SearchOutcome>& counts, const SearchConfig& config) {
  SimpleQuotientReport r;
  r.bound = bound;
  r.h1 = h1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const SearchOutcome& o = counts[i];
    QuotientEntry e{groups[i].name(), groups[i].order(), QuotientStatus::none, std::nullopt, o.nodes,
                    o.elapsed_seconds};
    if (o.epi_count > 0) {
      SearchConfig unlimited = config;
      unlimited.node_limit = 0;
      e.witness = find_epimorphism(p, groups[i], unlimited).witness;
      e.status = QuotientStatus::found;
    } else if (!o.complete()) {
      e.status = QuotientStatus::inconclusive;
    }
    r.groups.push_back(std::move(e));
  }
  return r;
}

std::vector<SearchOutcome> count_all(const FinitePresentation& p, const std::vector<PermGroup>& groups,
                                     const SearchConfig& config) {
  std::vector<SearchOutcome> out;
  for (const PermGroup& g : groups) out.push_back(enumerate_homomorphisms(p, g, config));
  return out;
}

Fingerprint fingerprint_from(const FinitePresentation& p, std::uint64_t bound, const std::vector<PermGroup>& groups,
                             const std::vector<SearchOutcome>* counts) {
  Fingerprint f;
  f.h1 = abelianization_invariants(p);
  f.h2_rank = h2_rank_2complex(p);
  f.euler = euler_characteristic(p);
  f.bound = bound;
  if (counts)
    for (std::size_t i = 0; i < groups.size(); ++i)
      f.epi.push_back({groups[i].name(), (*counts)[i].status, (*counts)[i].epi_count});
  return f;
}

nlohmann::json provenance(const char* kind, std::uint64_t bound, const SearchConfig& config) {
  return {{"tool", "fpg"},
          {"version", kToolVersion},
          {"kind", kind},
          {"config", {{"bound", bound}, {"workers", config.workers}, {"node_limit", config.node_limit}}}};
}

nlohmann::json render_words(const FinitePresentation& p, const std::vector<Word>& words) {
  nlohmann::json out = nlohmann::json::array();
  for (const Word& w : words) out.push_back(p.render(w));
  return out;
}

}  // namespace

Fingerprint fingerprint(const FinitePresentation& p, std::uint64_t bound, const SearchConfig& config) {
  const auto groups = catalog_up_to(bound);
  const auto counts = count_all(p, groups, config);
  return fingerprint_from(p, bound, groups, &counts);
}

bool fingerprint_candidate(const Fingerprint& target, const Fingerprint& other) {
  if (target.h1 != other.h1) return false;
  for (const auto& a : target.epi)
    for (const auto& b : other.epi)
      if (a.group == b.group && a.status == SearchStatus::complete && b.status == SearchStatus::complete &&
          a.epi_count != b.epi_count)
        return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::epi_witness_found: return "EpiWitnessFound";
    case Verdict::no_obstruction_up_to: return "NoObstructionUpTo";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "unknown";
}

PairReport pipeline_grothendieck(const FinitePresentation& q, std::uint64_t bound, const SearchConfig& config,
                                 std::uint64_t seed) {
  const auto groups = catalog_up_to(bound);
  require_perfect(q);
  PairReport r;
  r.q = q;
  r.bound = bound;
  r.seed = seed;
  r.config = config;
  r.q_h1 = abelianization_invariants(q);
  r.q_h2_rank = h2_rank_2complex(q);
  r.rips = rips_construction(q, seed);
  r.fibre = fibre_product_generators(r.rips);

  const auto q_counts = count_all(q, groups, config);
  r.quotients = quotients_from_counts(q, r.q_h1, bound, groups, q_counts, config);

  const SearchConfig limited = with_default_limit(config);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EpiTableRow row{groups[i].name(), groups[i].order(), q_counts[i],
                    enumerate_homomorphisms(r.rips.h, groups[i], limited),
                    enumerate_homomorphisms(r.fibre.ambient, groups[i], limited), std::nullopt};
    if (row.q.complete() && row.h.complete()) row.fibre_formula = fibre_epi_count_formula(row.h.epi_count, row.q.epi_count);
    r.epi_table.push_back(std::move(row));
  }

  if (const QuotientEntry* w = r.quotients.first_witness()) {
    const PermGroup& s = groups[static_cast<std::size_t>(w - r.quotients.groups.data())];
    if (!w->witness || !validates_homomorphism(q, s, *w->witness, true))
      throw std::logic_error("stored epimorphism witness onto " + w->group + " does not validate");
    r.verdict = Verdict::epi_witness_found;
    r.witness_group = w->group;
  } else {
    r.verdict = r.quotients.complete() ? Verdict::no_obstruction_up_to : Verdict::inconclusive;
  }
  return r;
}

std::vector<std::uint64_t> TheoremBReport::candidates() const {
  std::vector<std::uint64_t> out;
  for (const auto& b : bundles)
    if (b.candidate) out.push_back(b.index);
  return out;
}

bool TheoremBReport::complete() const {
  if (!uce_quotients.complete()) return false;
  for (const auto& b : bundles)
    for (const auto& e : b.fingerprint.epi)
      if (e.status != SearchStatus::complete) return false;
  return true;
}

FinitePresentation with_rose_generators(const FinitePresentation& p) {
  return FinitePresentation(rose_generators(p.generator_count()), p.relators());
}

TheoremBReport pipeline_theorem_b(const FinitePresentation& p, std::uint64_t bound, std::uint64_t height,
                                  const SearchConfig& config) {
  const auto groups = catalog_up_to(bound);
  require_perfect(p);
  TheoremBReport r;
  r.p = p;
  r.bound = bound;
  r.height = height;
  r.config = config;

  const FinitePresentation base = with_rose_generators(p);
  const FinitePresentation x = higman_presentation();
  const Word c = Word::generator(0);
  const std::size_t n = base.generator_count(), m = base.relator_count();
  r.j = j_construction(base, x, "a1");
  r.euler_matches = euler_characteristic(r.j) == static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n) + 1;
  r.uce = uce_presentation(r.j);

  const auto uce_counts = count_all(r.uce, groups, config);
  r.uce_fingerprint = fingerprint_from(r.uce, bound, groups, &uce_counts);
  r.uce_quotients = quotients_from_counts(r.uce, r.uce_fingerprint.h1, bound, groups, uce_counts, config);

  // Perfect P has an exponent matrix of rank n, so m >= n.
  r.d = m - n;
  const TubularBundleEnumeration bundles(x, c, r.d, n, m, base.relators(), height);
  const std::size_t vx = x.generator_count(), rx = x.relator_count();
  for (std::uint64_t i = 0; i < bundles.size(); ++i) {
    BundleReport b;
    b.index = i;
    b.data = bundles.at(i);
    b.presentation = tubular_bundle_presentation(b.data);
    b.counts_match = b.presentation.generator_count() == n + r.d + m * vx &&
                     b.presentation.relator_count() == r.d * (r.d - (r.d > 0 ? 1 : 0)) / 2 + r.d * (n + m * vx) + m * rx + m;
    b.fingerprint = fingerprint_from(b.presentation, bound, groups, nullptr);
    if (b.fingerprint.h1 == r.uce_fingerprint.h1) {
      const auto counts = count_all(b.presentation, groups, config);
      b.fingerprint = fingerprint_from(b.presentation, bound, groups, &counts);
    }
    b.candidate = fingerprint_candidate(r.uce_fingerprint, b.fingerprint);
    r.bundles.push_back(std::move(b));
  }
  return r;
}

nlohmann::json to_json(const Fingerprint& f) {
  nlohmann::json j{{"h1", to_json(f.h1)}, {"h2_rank", f.h2_rank}, {"euler_characteristic", f.euler}, {"bound", f.bound}};
  j["epi_counts"] = nlohmann::json::array();
  for (const auto& e : f.epi)
    j["epi_counts"].push_back({{"group", e.group},
                               {"status", e.status == SearchStatus::complete ? "complete" : "inconclusive"},
                               {"epi_count", e.epi_count}});
  if (f.epi.empty()) j["epi_counts_skipped"] = true;
  return j;
}

nlohmann::json to_json(const PairReport& r) {
  nlohmann::json j = provenance("grothendieck", r.bound, r.config);
  j["config"]["seed"] = r.seed;
  j["input"] = {{"q", r.q.render()}};
  j["q"] = {{"h1", to_json(r.q_h1)}, {"h2_rank", r.q_h2_rank}};

  const std::size_t x = r.q.generator_count(), y = r.q.relator_count();
  j["rips"] = {{"h", r.rips.h.render()},
               {"kernel_generators", render_words(r.rips.h, r.rips.kernel_generators)},
               {"offset", r.rips.offset},
               {"small_cancellation_ratio", r.rips.ratio.to_string()},
               {"c_prime_sixth", satisfies_c_prime_sixth(r.rips.ratio)}};
  j["identities"] = {
      {"relators", {{"formula", "|z| = |y| + 6|x|"}, {"expected", y + 6 * x}, {"actual", r.rips.h.relator_count()},
                    {"holds", r.rips.h.relator_count() == y + 6 * x}}},
      {"generators", {{"formula", "|gens(H)| = |x| + 3"}, {"expected", x + 3}, {"actual", r.rips.h.generator_count()},
                      {"holds", r.rips.h.generator_count() == x + 3}}}};
  j["ambient"] = r.fibre.ambient.render();
  j["fibre_generators"] = render_words(r.fibre.ambient, r.fibre.generators);
  j["quotients"] = to_json(r.quotients);

  j["epi_table"] = nlohmann::json::array();
  for (const auto& row : r.epi_table) {
    nlohmann::json e{{"group", row.group}, {"order", row.order}, {"q", to_json(row.q)}, {"h", to_json(row.h)},
                     {"hxh", to_json(row.hxh)}};
    if (row.fibre_formula) e["p_formula"] = *row.fibre_formula;
    else e["p_formula"] = nullptr;
    j["epi_table"].push_back(std::move(e));
  }

  nlohmann::json v{{"kind", to_string(r.verdict)}};
  switch (r.verdict) {
    case Verdict::epi_witness_found:
      v["group"] = r.witness_group;
      v["statement"] = "Q maps onto " + r.witness_group +
                       ", so the inclusion of the fibre product P into H x H does not induce an isomorphism of "
                       "profinite completions.";
      break;
    case Verdict::no_obstruction_up_to:
      v["bound"] = r.bound;
      v["statement"] = "Q has trivial H1 and no epimorphism onto any nonabelian simple group of order <= " +
                       std::to_string(r.bound) +
                       ". This is consistent with the inclusion inducing an isomorphism of profinite completions; it "
                       "is not a proof.";
      break;
    case Verdict::inconclusive:
      v["statement"] = "Search limits were hit before every catalog group was decided.";
      break;
  }
  j["verdict"] = std::move(v);
  j["assumptions"] = {kResidualFiniteness, kH2Caveat};
  return j;
}

nlohmann::json to_json(const TheoremBReport& r) {
  nlohmann::json j = provenance("theorem-b", r.bound, r.config);
  j["config"]["height"] = r.height;
  j["input"] = {{"p", r.p.render()}};
  const auto n = static_cast<std::int64_t>(r.p.generator_count());
  const auto m = static_cast<std::int64_t>(r.p.relator_count());
  j["j_construction"] = {{"presentation", r.j.render()},
                         {"euler_characteristic", euler_characteristic(r.j)},
                         {"expected_euler_characteristic", m - n + 1},
                         {"holds", r.euler_matches}};
  j["uce"] = {{"presentation", r.uce.render()},
              {"relators", r.uce.relator_count()},
              {"fingerprint", to_json(r.uce_fingerprint)},
              {"quotients", to_json(r.uce_quotients)}};
  j["d"] = r.d;
  j["bundles"] = nlohmann::json::array();
  for (const auto& b : r.bundles)
    j["bundles"].push_back({{"index", b.index},
                            {"data", to_json(b.data)},
                            {"presentation", b.presentation.render()},
                            {"counts_match", b.counts_match},
                            {"fingerprint", to_json(b.fingerprint)},
                            {"candidate", b.candidate}});
  j["candidates"] = r.candidates();
  j["complete"] = r.complete();
  j["notes"] = {"A candidate has the same H1 and the same completed epimorphism counts as the UCE presentation. "
                "Equal fingerprints are necessary for isomorphism, never sufficient.",
                kH2Caveat};
  return j;
}

}  // namespace fpg
