#include "fpg/quotients.hpp"

#include <sstream>
#include <stdexcept>

#include "fpg/catalog.hpp"
#include "fpg/errors.hpp"

namespace fpg {

bool EpiCountReport::complete() const {
  for (const auto& e : entries)
    if (!e.outcome.complete()) return false;
  return true;
}

const EpiCountEntry& EpiCountReport::entry(const std::string& group) const {
  for (const auto& e : entries)
    if (e.group == group) return e;
  throw std::out_of_range("no entry for group " + group);
}

EpiCountReport epi_count_report(const FinitePresentation& p, const std::vector<PermGroup>& groups,
                                const SearchConfig& config) {
  EpiCountReport r;
  r.presentation = p.render();
  r.config = config;
  for (const PermGroup& g : groups) r.entries.push_back({g.name(), g.order(), enumerate_homomorphisms(p, g, config)});
  return r;
}

std::vector<PermGroup> select_groups(const std::string& names, std::uint64_t max_order) {
  std::vector<PermGroup> out;
  if (names.empty()) {
    return catalog_up_to(max_order);
  }
  std::stringstream in(names);
  std::string name;
  while (std::getline(in, name, ','))
    if (!name.empty()) out.push_back(catalog_group(name));
  return out;
}

bool SimpleQuotientReport::has_quotient() const { return !h1.trivial() || first_witness() != nullptr; }

bool SimpleQuotientReport::complete() const {
  for (const auto& g : groups)
    if (g.status == QuotientStatus::inconclusive) return false;
  return true;
}

const QuotientEntry* SimpleQuotientReport::first_witness() const {
  for (const auto& g : groups)
    if (g.status == QuotientStatus::found) return &g;
  return nullptr;
}

SimpleQuotientReport simple_quotients_up_to(const FinitePresentation& p, std::uint64_t bound,
                                            const SearchConfig& config) {
  SimpleQuotientReport r;
  r.bound = bound;
  r.h1 = abelianization_invariants(p);
  for (const PermGroup& g : catalog_up_to(bound)) {
    const SearchOutcome o = find_epimorphism(p, g, config);
    QuotientEntry e{g.name(), g.order(), QuotientStatus::none, o.witness, o.nodes, o.elapsed_seconds};
    if (o.witness) e.status = QuotientStatus::found;
    else if (!o.complete()) e.status = QuotientStatus::inconclusive;
    r.groups.push_back(std::move(e));
  }
  return r;
}

std::uint64_t fibre_epi_count_formula(std::uint64_t epi_h, std::uint64_t epi_q) {
  if (epi_q > 2 * epi_h)
    throw std::domain_error("inconsistent epimorphism counts: 2*" + std::to_string(epi_h) + " - " +
                            std::to_string(epi_q) + " < 0");
  return 2 * epi_h - epi_q;
}

std::string to_string(QuotientStatus s) {
  switch (s) {
    case QuotientStatus::found: return "found";
    case QuotientStatus::none: return "none";
    case QuotientStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

nlohmann::json to_json(const Permutation& p) { return p.images(); }

nlohmann::json to_json(const AbelianInvariants& a) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const BigInt& t : a.torsion) torsion.push_back(t.str());
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"text", a.to_string()}};
}

nlohmann::json to_json(const SearchOutcome& o) {
  nlohmann::json j{{"status", o.complete() ? "complete" : "inconclusive"},
                   {"hom_count", o.hom_count},
                   {"epi_count", o.epi_count},
                   {"nodes", o.nodes},
                   {"elapsed_seconds", o.elapsed_seconds}};
  if (o.witness) {
    j["witness"] = nlohmann::json::array();
    for (const auto& w : *o.witness) j["witness"].push_back(to_json(w));
  }
  return j;
}

nlohmann::json to_json(const EpiCountReport& r) {
  nlohmann::json j{{"presentation", r.presentation},
                   {"config", {{"workers", r.config.workers}, {"node_limit", r.config.node_limit}}},
                   {"groups", nlohmann::json::array()}};
  for (const auto& e : r.entries) {
    nlohmann::json g = to_json(e.outcome);
    g["group"] = e.group;
    g["order"] = e.order;
    j["groups"].push_back(std::move(g));
  }
  return j;
}

nlohmann::json to_json(const SimpleQuotientReport& r) {
  nlohmann::json j{{"bound", r.bound}, {"h1", to_json(r.h1)}, {"groups", nlohmann::json::array()}};
  for (const auto& g : r.groups) {
    nlohmann::json e{{"group", g.group},
                     {"order", g.order},
                     {"status", to_string(g.status)},
                     {"nodes", g.nodes},
                     {"elapsed_seconds", g.elapsed_seconds}};
    if (g.witness) {
      e["witness"] = nlohmann::json::array();
      for (const auto& w : *g.witness) e["witness"].push_back(to_json(w));
    }
    j["groups"].push_back(std::move(e));
  }
  j["has_quotient"] = r.has_quotient();
  j["complete"] = r.complete();
  return j;
}

}  // namespace fpg
