#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpg/catalog.hpp"
#include "fpg/constructions.hpp"
#include "fpg/coset_enumeration.hpp"
#include "fpg/errors.hpp"
#include "fpg/fibre_product.hpp"
#include "fpg/homology.hpp"
#include "fpg/pipeline.hpp"
#include "fpg/quotients.hpp"
#include "fpg/rips.hpp"
#include "fpg/small_cancellation.hpp"
#include "fpg/tietze.hpp"
#include "fpg/tubular.hpp"

using namespace fpg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInconclusive = 3, kRejected = 4 };

struct Globals {
  std::uint64_t bound = kDefaultBound;
  unsigned workers = 1;
  std::string json_out;
  std::uint64_t seed = 0;
  std::uint64_t max_order = kCatalogCompleteBound;
  std::string groups;
  std::uint64_t node_limit = 0;

  SearchConfig search() const { return {workers, node_limit}; }
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// A presentation given inline ("< a | a^2 >"), as a file path, or "-" for stdin.
FinitePresentation read_presentation(const std::string& arg) {
  if (arg == "-") return parse_presentation(slurp(std::cin));
  if (arg.find('<') != std::string::npos) return parse_presentation(arg);
  if (arg == "higman") return higman_presentation();
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read presentation file " + arg);
  return parse_presentation(slurp(in));
}

json read_json(const std::string& arg) {
  if (arg == "-") return json::parse(slurp(std::cin));
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read " + arg);
  return json::parse(in);
}

std::vector<Word> parse_words(const std::vector<std::string>& texts, const FinitePresentation& p) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, p));
  return out;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  void emit(const json& j, const std::string& text) const {
    if (g_.json_out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    if (g_.json_out == "-") {
      std::cout << j.dump(2) << '\n';
      return;
    }
    std::ofstream out(g_.json_out);
    if (!out) throw std::runtime_error("cannot write " + g_.json_out);
    out << j.dump(2) << '\n';
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }

 private:
  const Globals& g_;
};

json presentation_json(const FinitePresentation& p) {
  return {{"presentation", p.render()}, {"generators", p.generator_count()}, {"relators", p.relator_count()}};
}

std::string describe(const FinitePresentation& p) {
  std::ostringstream s;
  s << p.render() << "\n# " << p.generator_count() << " generators, " << p.relator_count() << " relators\n";
  return s.str();
}

std::string outcome_line(const std::string& group, std::uint64_t order, const SearchOutcome& o) {
  std::ostringstream s;
  s << group << " (order " << order << "): hom " << o.hom_count << ", epi " << o.epi_count << ", "
    << (o.complete() ? "complete" : "inconclusive") << ", " << o.nodes << " nodes, " << o.elapsed_seconds << " s\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented group toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "File of key = value lines mirroring the flags; flags win");

  Globals g;
  app.add_option("--bound", g.bound, "Catalog order bound for quotient searches")->capture_default_str();
  app.add_option("--workers", g.workers, "Search worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--json", g.json_out, "Write the JSON document to this file (- for stdout)");
  app.add_option("--seed", g.seed, "Seed for the Rips filler-word scheme")->capture_default_str();
  app.add_option("--max-order", g.max_order, "Largest catalog group for epi-count")->capture_default_str();
  app.add_option("--groups", g.groups, "Comma-separated catalog groups, e.g. A5,PSL2_7");
  app.add_option("--node-limit", g.node_limit, "Abort searches after this many nodes (0 = unlimited)");

  const Output out(g);
  std::function<int()> action;

  // present
  std::string input;
  std::size_t budget = 0;
  auto* present = app.add_subcommand("present", "Parse, normalize and optionally simplify a presentation");
  present->add_option("presentation", input, "Inline presentation, file, - or higman")->required();
  present->add_option("--simplify", budget, "Tietze move budget");
  present->callback([&] {
    action = [&] {
      FinitePresentation p = read_presentation(input);
      if (budget > 0) p = tietze_simplify(p, budget);
      out.emit(presentation_json(p), describe(p));
      return kOk;
    };
  });

  auto* homology = app.add_subcommand("homology", "H1, h2 rank and Euler characteristic");
  homology->add_option("presentation", input)->required();
  homology->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto h1 = abelianization_invariants(p);
      const auto h2 = h2_rank_2complex(p);
      const auto chi = euler_characteristic(p);
      json j{{"presentation", p.render()}, {"h1", to_json(h1)}, {"h2_rank", h2}, {"euler_characteristic", chi}};
      std::ostringstream s;
      s << "H1 = " << h1.to_string() << "\nh2_rank = " << h2 << "\nchi = " << chi << '\n';
      out.emit(j, s.str());
      return kOk;
    };
  });

  std::string j_input = "higman", alpha = "a1";
  auto* jcons = app.add_subcommand("jcons", "J-construction: replace every relator cell by a copy of J");
  jcons->add_option("presentation", input)->required();
  jcons->add_option("--with", j_input, "The complex J (default: Higman)")->capture_default_str();
  jcons->add_option("--alpha", alpha, "Generator of J glued to each relator")->capture_default_str();
  jcons->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto r = j_construction(p, read_presentation(j_input), alpha);
      json j = presentation_json(r);
      j["euler_characteristic"] = euler_characteristic(r);
      j["h1"] = to_json(abelianization_invariants(r));
      out.emit(j, describe(r));
      return kOk;
    };
  });

  auto* uce = app.add_subcommand("uce", "Universal central extension of a perfect presentation");
  uce->add_option("presentation", input)->required();
  uce->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto r = uce_presentation(p);
      json j = presentation_json(r);
      j["defect_words"] = json::array();
      for (const Word& w : uce_defect_words(p)) j["defect_words"].push_back(p.render(w));
      out.emit(j, describe(r));
      return kOk;
    };
  });

  auto* rips = app.add_subcommand("rips", "Rips construction with a certified C'(1/6) ratio");
  rips->add_option("presentation", input)->required();
  rips->callback([&] {
    action = [&] {
      const auto q = read_presentation(input);
      const auto r = rips_construction(q, g.seed);
      json j = presentation_json(r.h);
      j["kernel_generators"] = json::array();
      for (const Word& w : r.kernel_generators) j["kernel_generators"].push_back(r.h.render(w));
      j["offset"] = r.offset;
      j["small_cancellation_ratio"] = r.ratio.to_string();
      out.emit(j, describe(r.h) + "# piece ratio " + r.ratio.to_string() + ", offset " + std::to_string(r.offset));
      return kOk;
    };
  });

  std::string second;
  auto* product = app.add_subcommand("product", "Direct product presentation");
  product->add_option("first", input)->required();
  product->add_option("second", second)->required();
  product->callback([&] {
    action = [&] {
      const auto r = direct_product(read_presentation(input), read_presentation(second));
      out.emit(presentation_json(r), describe(r));
      return kOk;
    };
  });

  std::vector<std::string> words;
  std::size_t max_cosets = 100000;
  bool from_rips = false;
  auto* fibre = app.add_subcommand("fibre", "Fibre product of H -> H/<<kernel>>");
  fibre->add_option("presentation", input, "H, or Q with --rips")->required();
  fibre->add_option("--kernel,-k", words, "Kernel generators as words in H");
  fibre->add_option("--max-cosets", max_cosets)->capture_default_str();
  fibre->add_flag("--rips", from_rips, "Build H from Q by the Rips construction and list generators of P");
  fibre->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      if (from_rips) {
        const auto r = fibre_product_generators(rips_construction(p, g.seed));
        json j{{"ambient", r.ambient.render()}, {"generators", json::array()}};
        std::string text = "# ambient " + r.ambient.render() + '\n';
        for (const Word& w : r.generators) {
          j["generators"].push_back(r.ambient.render(w));
          text += r.ambient.render(w) + '\n';
        }
        out.emit(j, text);
        return kOk;
      }
      const auto r = fibre_product_finite_quotient(p, parse_words(words, p), max_cosets);
      json j = presentation_json(r.simplified);
      j["index"] = r.quotient_order;
      j["schreier"] = presentation_json(r.schreier);
      out.emit(j, describe(r.simplified) + "# index " + std::to_string(r.quotient_order));
      return kOk;
    };
  });

  auto* epi = app.add_subcommand("epi-count", "Exact hom and epi counts into catalog groups");
  epi->add_option("presentation", input)->required();
  epi->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto r = epi_count_report(p, select_groups(g.groups, g.max_order), g.search());
      std::string text;
      for (const auto& e : r.entries) text += outcome_line(e.group, e.order, e.outcome);
      out.emit(to_json(r), text);
      return r.complete() ? kOk : kInconclusive;
    };
  });

  auto* quotients = app.add_subcommand("quotients", "Abelian and simple quotients up to --bound");
  quotients->add_option("presentation", input)->required();
  quotients->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto r = simple_quotients_up_to(p, g.bound, g.search());
      std::ostringstream s;
      s << "H1 = " << r.h1.to_string() << '\n';
      for (const auto& e : r.groups) s << e.group << ": " << to_string(e.status) << '\n';
      out.emit(to_json(r), s.str());
      return r.complete() ? kOk : kInconclusive;
    };
  });

  bool rewrite = false;
  auto* coset = app.add_subcommand("coset", "Todd-Coxeter enumeration of a subgroup");
  coset->add_option("presentation", input)->required();
  coset->add_option("--subgroup,-s", words, "Subgroup generators as words");
  coset->add_option("--max-cosets", max_cosets)->capture_default_str();
  coset->add_flag("--rewrite", rewrite, "Also print the Reidemeister-Schreier presentation");
  coset->callback([&] {
    action = [&] {
      const auto p = read_presentation(input);
      const auto t = todd_coxeter(p, parse_words(words, p), max_cosets);
      json j{{"index", t.index()}, {"table", t.table}};
      std::string text = "index " + std::to_string(t.index()) + '\n';
      if (rewrite) {
        const auto s = reidemeister_schreier(t);
        j["subgroup"] = presentation_json(s);
        text += describe(s);
      }
      out.emit(j, text);
      return kOk;
    };
  });

  auto* bundle = app.add_subcommand("bundle", "Tubular bundles");
  bundle->require_subcommand(1);
  std::string loop = "a1";
  std::size_t d = 1, n = 1, m = 1;
  std::uint64_t height = kDefaultHeight;
  auto* benum = bundle->add_subcommand("enum", "Enumerate bundles as JSON lines");
  benum->add_option("vertex", input, "Vertex complex X (default: Higman)")->default_val("higman");
  benum->add_option("--loop", loop, "Attaching loop c in X")->capture_default_str();
  benum->add_option("-d", d)->capture_default_str();
  benum->add_option("-n", n)->capture_default_str();
  benum->add_option("-m", m)->capture_default_str();
  benum->add_option("--rho", words, "m words in a1..an")->required();
  benum->add_option("--height", height)->capture_default_str();
  benum->callback([&] {
    action = [&] {
      const auto x = read_presentation(input);
      std::vector<Word> rho;
      for (const auto& w : words) rho.push_back(parse_word(w, rose_generators(n)));
      const TubularBundleEnumeration e(x, parse_word(loop, x), d, n, m, rho, height);
      json all = json::array();
      std::ostringstream s;
      for (std::uint64_t i = 0; i < e.size(); ++i) {
        const json b = to_json(e.at(i));
        s << b.dump() << '\n';
        all.push_back(b);
      }
      out.emit(all, s.str());
      return kOk;
    };
  });
  auto* bpresent = bundle->add_subcommand("present", "Presentation of a bundle given as JSON");
  bpresent->add_option("bundle", input, "Bundle JSON file or -")->required();
  bpresent->callback([&] {
    action = [&] {
      const auto p = tubular_bundle_presentation(tubular_bundle_from_json(read_json(input)));
      out.emit(presentation_json(p), describe(p));
      return kOk;
    };
  });
  auto* bfinger = bundle->add_subcommand("fingerprint", "Invariant fingerprint of a bundle given as JSON");
  bfinger->add_option("bundle", input)->required();
  bfinger->callback([&] {
    action = [&] {
      const auto p = tubular_bundle_presentation(tubular_bundle_from_json(read_json(input)));
      const auto f = fingerprint(p, g.bound, g.search());
      out.emit(to_json(f), to_json(f).dump(2));
      for (const auto& e : f.epi)
        if (e.status != SearchStatus::complete) return kInconclusive;
      return kOk;
    };
  });

  auto* pipeline = app.add_subcommand("pipeline", "Grothendieck-pair and Theorem-B pipelines");
  pipeline->require_subcommand(1);
  auto* groth = pipeline->add_subcommand("grothendieck", "Rips, fibre product and bounded quotient evidence");
  groth->add_option("presentation", input)->required();
  groth->callback([&] {
    action = [&] {
      const auto r = pipeline_grothendieck(read_presentation(input), g.bound, g.search(), g.seed);
      const json j = to_json(r);
      out.emit(j, j["verdict"]["kind"].get<std::string>() + ": " + j["verdict"]["statement"].get<std::string>());
      return r.verdict == Verdict::inconclusive ? kInconclusive : kOk;
    };
  });
  auto* thb = pipeline->add_subcommand("theorem-b", "J-construction, UCE and tubular bundle candidates");
  thb->add_option("presentation", input)->required();
  thb->add_option("--height", height)->capture_default_str();
  thb->callback([&] {
    action = [&] {
      const auto r = pipeline_theorem_b(read_presentation(input), g.bound, height, g.search());
      std::ostringstream s;
      s << "d = " << r.d << ", " << r.bundles.size() << " bundles, " << r.candidates().size() << " candidates";
      if (!r.candidates().empty()) {
        s << " (indices";
        for (auto i : r.candidates()) s << ' ' << i;
        s << ')';
      }
      s << "\nUCE: " << r.uce.generator_count() << " generators, " << r.uce.relator_count() << " relators, "
        << (r.uce_quotients.has_quotient() ? "has" : "no") << " simple quotient up to " << r.bound << '\n';
      out.emit(to_json(r), s.str());
      return r.complete() ? kOk : kInconclusive;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kRejected;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const NotPerfect& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kRejected;
  } catch (const CatalogBoundExceeded& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kRejected;
  } catch (const CosetLimitExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const SchemeExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kRejected;
  } catch (const json::exception& e) {
    std::cerr << "rejected: " << e.what() << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
