#include "fpg/coset_enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

class Enumerator {
 public:
  Enumerator(const FinitePresentation& p, std::size_t max_cosets)
      : letters_(2 * p.generator_count()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators()) relators_.push_back(r.cyclically_reduced().letters());
    new_coset();
  }

  void scan_subgroup(const std::vector<Word>& gens) {
    for (const Word& w : gens) scan_and_fill(0, w.letters());
  }

  void run() {
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (Letter x = 0; x < letters_ && live(c); ++x)
        if (table_[c][x] == kUndefined) define(c, x);
    }
  }

  // Live cosets renumbered in breadth-first order from coset 0.
  std::vector<std::vector<std::uint32_t>> standardized() const {
    std::vector<std::uint32_t> number(table_.size(), kUndefined);
    std::vector<std::uint32_t> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Letter x = 0; x < letters_; ++x) {
        const std::uint32_t d = table_[order[i]][x];
        if (number[d] == kUndefined) {
          number[d] = static_cast<std::uint32_t>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::vector<std::uint32_t>> out(order.size(), std::vector<std::uint32_t>(letters_));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Letter x = 0; x < letters_; ++x) out[i][x] = number[table_[order[i]][x]];
    return out;
  }

 private:
  bool live(std::uint32_t c) const { return forward_[c] == c; }

  std::uint32_t new_coset() {
    if (live_count_ >= max_cosets_) throw CosetLimitExceeded(max_cosets_);
    const auto c = static_cast<std::uint32_t>(table_.size());
    table_.emplace_back(letters_, kUndefined);
    forward_.push_back(c);
    ++live_count_;
    return c;
  }

  void define(std::uint32_t c, Letter x) {
    const std::uint32_t d = new_coset();
    table_[c][x] = d;
    table_[d][letter_inverse(x)] = c;
  }

  void scan_and_fill(std::uint32_t coset, const std::vector<Letter>& w) {
    if (w.empty()) return;
    std::uint32_t f = coset, b = coset;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    for (;;) {
      while (i < j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][letter_inverse(w[j - 1])] != kUndefined) b = table_[b][letter_inverse(w[--j])];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][letter_inverse(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[c] != root) {
      const std::uint32_t next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& queue) {
    const std::uint32_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    const std::uint32_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    forward_[hi] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::uint32_t dead = queue[q];
      for (Letter x = 0; x < letters_; ++x) {
        const std::uint32_t d = table_[dead][x];
        if (d == kUndefined) continue;
        const Letter xi = letter_inverse(x);
        if (table_[d][xi] == dead) table_[d][xi] = kUndefined;
        const std::uint32_t mu = rep(dead), nu = rep(d);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][xi] != kUndefined) {
          merge(mu, table_[nu][xi], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][xi] = mu;
        }
      }
    }
  }

  Letter letters_;
  std::size_t max_cosets_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> forward_;
  std::size_t live_count_ = 0;
};

}  // namespace

std::uint32_t CosetTable::act(std::uint32_t coset, const Word& w) const {
  for (Letter l : w.letters()) coset = table[coset][l];
  return coset;
}

CosetTable todd_coxeter(const FinitePresentation& p, const std::vector<Word>& subgroup_gens, std::size_t max_cosets) {
  if (max_cosets == 0) throw CosetLimitExceeded(0);
  Enumerator e(p, max_cosets);
  e.scan_subgroup(subgroup_gens);
  e.run();
  return CosetTable{p, subgroup_gens, e.standardized()};
}

FinitePresentation reidemeister_schreier(const CosetTable& ct) {
  const FinitePresentation& p = ct.presentation;
  const std::size_t n = ct.index();
  const auto gens = static_cast<GenId>(p.generator_count());

  // Breadth-first transversal: parent edge of each coset, as (coset, letter).
  std::vector<std::pair<std::uint32_t, Letter>> parent(n, {kUndefined, 0});
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter x = 0; x < 2 * gens; ++x) {
      const std::uint32_t d = ct.act(order[i], x);
      if (!seen[d]) {
        seen[d] = true;
        parent[d] = {order[i], x};
        order.push_back(d);
      }
    }

  auto tree_edge = [&](std::uint32_t c, GenId g) {
    const std::uint32_t d = ct.act(c, letter_of(g, false));
    return parent[d] == std::pair{c, letter_of(g, false)} || parent[c] == std::pair{d, letter_of(g, true)};
  };

  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> schreier(n, std::vector<std::int64_t>(gens, -1));
  for (std::uint32_t c = 0; c < n; ++c)
    for (GenId g = 0; g < gens; ++g)
      if (!tree_edge(c, g)) {
        schreier[c][g] = static_cast<std::int64_t>(names.size());
        names.push_back(p.generators()[g] + "_" + std::to_string(c));
      }

  auto rewrite = [&](std::uint32_t start, const Word& w) {
    std::vector<Syllable> raw;
    std::uint32_t c = start;
    for (Letter l : w.letters()) {
      const GenId g = letter_gen(l);
      if (!letter_inverted(l)) {
        if (schreier[c][g] >= 0) raw.push_back({static_cast<GenId>(schreier[c][g]), 1});
        c = ct.act(c, l);
      } else {
        const std::uint32_t d = ct.act(c, l);
        if (schreier[d][g] >= 0) raw.push_back({static_cast<GenId>(schreier[d][g]), -1});
        c = d;
      }
    }
    return free_reduce(raw);
  };

  std::vector<Word> relators;
  for (std::uint32_t c = 0; c < n; ++c)
    for (const Word& r : p.relators()) {
      Word w = rewrite(c, r);
      if (!w.empty()) relators.push_back(std::move(w));
    }
  return FinitePresentation(std::move(names), std::move(relators));
}

}  // namespace fpg
