#include "fpg/hom_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace fpg {

using Element = CayleyTable::Element;

std::vector<GenId> search_order(const FinitePresentation& p) {
  const std::size_t n = p.generator_count();
  std::vector<std::vector<GenId>> rel_gens;
  std::vector<std::size_t> occurrences(n, 0);
  for (const Word& r : p.relators()) {
    std::vector<GenId> gens;
    for (const Syllable& s : r.syllables()) {
      gens.push_back(s.gen);
      occurrences[s.gen] += static_cast<std::size_t>(std::llabs(s.exp));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    rel_gens.push_back(std::move(gens));
  }
  std::vector<bool> assigned(n, false);
  std::vector<GenId> order;
  while (order.size() < n) {
    GenId best = 0;
    std::tuple<std::size_t, std::size_t, std::size_t> best_key{0, 0, 0};
    bool have = false;
    for (GenId g = 0; g < n; ++g) {
      if (assigned[g]) continue;
      std::size_t completes = 0, touches = 0;
      for (const auto& gens : rel_gens) {
        if (!std::binary_search(gens.begin(), gens.end(), g)) continue;
        const bool rest_assigned = std::all_of(gens.begin(), gens.end(), [&](GenId h) { return h == g || assigned[h]; });
        if (rest_assigned) ++completes;
        if (std::any_of(gens.begin(), gens.end(), [&](GenId h) { return assigned[h]; })) ++touches;
      }
      const std::tuple<std::size_t, std::size_t, std::size_t> key{completes, touches, occurrences[g]};
      if (!have || key > best_key) {
        best = g;
        best_key = key;
        have = true;
      }
    }
    assigned[best] = true;
    order.push_back(best);
  }
  return order;
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<std::uint32_t, std::int64_t>> syllables;  // (depth, exponent)
};

enum class Mode { count, find_epi };

class Search {
 public:
  Search(const FinitePresentation& p, const PermGroup& s, const SearchConfig& config, Mode mode)
      : p_(p), table_(s.table()), config_(config), mode_(mode), order_(search_order(p)) {
    const std::size_t n = order_.size();
    std::vector<std::uint32_t> depth_of(n);
    for (std::uint32_t d = 0; d < n; ++d) depth_of[order_[d]] = d;
    checks_.resize(n);
    for (const Word& r : p.relators()) {
      CompiledRelator c;
      std::uint32_t last = 0;
      const Word cyclic = r.cyclically_reduced();
      for (const Syllable& syl : cyclic.syllables()) {
        c.syllables.emplace_back(depth_of[syl.gen], syl.exp);
        last = std::max(last, depth_of[syl.gen]);
      }
      checks_[last].push_back(std::move(c));
    }
  }

  SearchOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    const std::size_t n = order_.size();
    if (n == 0) {
      out.hom_count = 1;
      out.epi_count = table_.order() == 1 ? 1 : 0;
      if (mode_ == Mode::find_epi && out.epi_count == 1) out.witness = std::vector<Permutation>{};
    } else {
      const unsigned workers = std::max(1u, config_.workers);
      std::vector<WorkerState> states(workers);
      std::vector<std::thread> threads;
      for (unsigned w = 1; w < workers; ++w) threads.emplace_back([this, &states, w, workers] { work(states[w], w, workers); });
      work(states[0], 0, workers);
      for (auto& t : threads) t.join();

      const WorkerState* best = nullptr;
      for (const WorkerState& st : states) {
        out.hom_count += st.homs;
        out.epi_count += st.epis;
        out.nodes += st.nodes;
        if (!st.witness.empty() && (!best || st.witness[0] < best->witness[0])) best = &st;
      }
      for (const WorkerState& st : states)
        if (st.cut) out.status = SearchStatus::inconclusive;
      if (best) {
        std::vector<Permutation> images(n);
        for (std::size_t d = 0; d < n; ++d) images[order_[d]] = table_.element(best->witness[d]);
        out.witness = std::move(images);
        out.status = SearchStatus::complete;
      }
    }
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  struct WorkerState {
    std::uint64_t homs = 0;
    std::uint64_t epis = 0;
    std::uint64_t nodes = 0;
    std::uint64_t unflushed = 0;
    std::vector<Element> images;
    std::vector<Element> witness;
    bool stop = false;
    // Stopped by the node limit with work left.
    bool cut = false;
  };

  void work(WorkerState& st, unsigned worker, unsigned workers) {
    st.images.assign(order_.size(), 0);
    const std::size_t n = table_.order();
    for (std::size_t v = worker; v < n; v += workers) {
      if (st.stop) break;
      if (aborted_.load(std::memory_order_relaxed)) {
        st.cut = true;
        break;
      }
      if (mode_ == Mode::find_epi && v > best_first_.load()) break;
      if (!visit(st, 0, static_cast<Element>(v))) continue;
      descend(st, 1);
    }
    flush(st);
  }

  void descend(WorkerState& st, std::size_t depth) {
    if (depth == order_.size()) {
      leaf(st);
      return;
    }
    const std::size_t n = table_.order();
    for (std::size_t v = 0; v < n; ++v) {
      if (st.stop) return;
      if (visit(st, depth, static_cast<Element>(v))) descend(st, depth + 1);
    }
  }

  // Assigns the image and runs the relators completed at this depth.
  bool visit(WorkerState& st, std::size_t depth, Element v) {
    ++st.nodes;
    if (++st.unflushed == 4096) {
      flush(st);
      if (aborted_.load(std::memory_order_relaxed)) st.stop = st.cut = true;
    }
    st.images[depth] = v;
    for (const CompiledRelator& r : checks_[depth]) {
      Element e = 0;
      for (const auto& [d, exp] : r.syllables) e = table_.mul(e, table_.pow(st.images[d], exp));
      if (e != 0) return false;
    }
    return true;
  }

  void leaf(WorkerState& st) {
    ++st.homs;
    if (!table_.generates_group(st.images)) return;
    ++st.epis;
    if (mode_ == Mode::find_epi) {
      st.witness = st.images;
      st.stop = true;
      std::uint64_t cur = best_first_.load();
      while (st.images[0] < cur && !best_first_.compare_exchange_weak(cur, st.images[0])) {
      }
    }
  }

  void flush(WorkerState& st) {
    if (st.unflushed == 0) return;
    const std::uint64_t total = nodes_.fetch_add(st.unflushed) + st.unflushed;
    st.unflushed = 0;
    if (config_.node_limit != 0 && total > config_.node_limit) aborted_.store(true);
  }

  const FinitePresentation& p_;
  const CayleyTable& table_;
  SearchConfig config_;
  Mode mode_;
  std::vector<GenId> order_;
  std::vector<std::vector<CompiledRelator>> checks_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::atomic<std::uint64_t> best_first_{std::numeric_limits<std::uint64_t>::max()};
};

}  // namespace

SearchOutcome enumerate_homomorphisms(const FinitePresentation& p, const PermGroup& s, const SearchConfig& config) {
  return Search(p, s, config, Mode::count).run();
}

SearchOutcome find_epimorphism(const FinitePresentation& p, const PermGroup& s, const SearchConfig& config) {
  return Search(p, s, config, Mode::find_epi).run();
}

std::uint64_t hom_count(const FinitePresentation& p, const PermGroup& s, unsigned workers) {
  return enumerate_homomorphisms(p, s, {workers, 0}).hom_count;
}

std::uint64_t epi_count(const FinitePresentation& p, const PermGroup& s, unsigned workers) {
  return enumerate_homomorphisms(p, s, {workers, 0}).epi_count;
}

std::optional<std::vector<Permutation>> epi_exists(const FinitePresentation& p, const PermGroup& s, unsigned workers) {
  return find_epimorphism(p, s, {workers, 0}).witness;
}

bool validates_homomorphism(const FinitePresentation& p, const PermGroup& s, const std::vector<Permutation>& images,
                            bool surjective) {
  if (images.size() != p.generator_count()) return false;
  for (const Permutation& x : images)
    if (x.degree() != s.degree()) return false;
  if (s.order() <= PermGroup::kMaxTableOrder) {
    try {
      for (const Permutation& x : images) (void)s.table().index_of(x);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  for (const Word& r : p.relators()) {
    Permutation e = Permutation::identity(s.degree());
    for (const Syllable& syl : r.syllables()) {
      const Permutation& base = images[syl.gen];
      const Permutation step = syl.exp < 0 ? base.inverse() : base;
      for (std::int64_t i = 0; i < std::llabs(syl.exp); ++i) e = e * step;
    }
    if (!e.is_identity()) return false;
  }
  if (!surjective) return true;
  return group_elements(s.degree(), images, PermGroup::kMaxClosureOrder).size() == s.order();
}

}  // namespace fpg
