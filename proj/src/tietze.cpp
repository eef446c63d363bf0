#include "fpg/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

namespace fpg {

namespace {

using Letters = std::vector<Letter>;

Letters invert(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (Letter& l : out) l = letter_inverse(l);
  return out;
}

// Least rotation of w or of w^-1; equal keys mean the relators are cyclic
// conjugates of each other up to inversion.
Letters cyclic_key(const Word& w) {
  Letters best;
  for (const Letters& base : {w.letters(), invert(w.letters())}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      Letters rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

class Simplifier {
 public:
  Simplifier(const FinitePresentation& p, std::size_t budget)
      : names_(p.generators()), alive_(p.generator_count(), true), budget_(budget) {
    for (const Word& r : p.relators()) relators_.push_back(r);
    length_cap_ = p.total_relator_length();
  }

  FinitePresentation run() {
    while (budget_ > 0) {
      if (cyclic_reduce()) continue;
      if (drop_redundant()) continue;
      if (shorten_by_halves()) continue;
      if (eliminate_generator()) continue;
      break;
    }
    return result();
  }

 private:
  bool spend() {
    if (budget_ == 0) return false;
    --budget_;
    return true;
  }

  bool cyclic_reduce() {
    bool changed = false;
    for (const Word& r : relators_)
      if (!r.is_cyclically_reduced()) changed = true;
    if (!changed || !spend()) return false;
    for (Word& r : relators_) r = r.cyclically_reduced();
    return true;
  }

  bool drop_redundant() {
    std::set<Letters> seen;
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const bool trivial = relators_[i].empty();
      if (trivial || !seen.insert(cyclic_key(relators_[i])).second) {
        if (!spend()) return false;
        relators_.erase(relators_.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
    }
    return false;
  }

  // If a cyclic rotation u v of relator s (or of s^-1) has |u| > |v| and u
  // occurs cyclically in another relator r, replace that u by v^-1.
  bool shorten_by_halves() {
    for (std::size_t si = 0; si < relators_.size(); ++si) {
      const Letters s = relators_[si].letters();
      const std::size_t len = s.size();
      if (len < 2) continue;
      const std::size_t half = len / 2 + 1;
      for (const Letters& base : {s, invert(s)}) {
        for (std::size_t rot = 0; rot < len; ++rot) {
          Letters u, v;
          for (std::size_t k = 0; k < len; ++k) (k < half ? u : v).push_back(base[(rot + k) % len]);
          for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
            if (ri == si) continue;
            const Letters r = relators_[ri].letters();
            if (r.size() < u.size()) continue;
            for (std::size_t start = 0; start < r.size(); ++start) {
              bool match = true;
              for (std::size_t k = 0; k < u.size() && match; ++k) match = r[(start + k) % r.size()] == u[k];
              if (!match) continue;
              if (!spend()) return false;
              Letters replaced;
              for (std::size_t k = u.size(); k < r.size(); ++k) replaced.push_back(r[(start + k) % r.size()]);
              const Letters vinv = invert(v);
              Letters next = vinv;
              next.insert(next.end(), replaced.begin(), replaced.end());
              relators_[ri] = Word::from_letters(next).cyclically_reduced();
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  bool eliminate_generator() {
    struct Candidate {
      std::size_t relator;
      GenId gen;
      std::size_t new_length;
    };
    std::optional<Candidate> best;
    std::vector<Word> best_relators;
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
      const auto& syl = relators_[ri].syllables();
      for (const Syllable& s : syl) {
        if (std::llabs(s.exp) != 1) continue;
        if (std::count_if(syl.begin(), syl.end(), [&](const Syllable& t) { return t.gen == s.gen; }) != 1)
          continue;
        const Word image = defining_word(relators_[ri], s.gen);
        std::vector<Word> images;
        for (GenId g = 0; g < names_.size(); ++g) images.push_back(g == s.gen ? image : Word::generator(g));
        std::vector<Word> next;
        std::size_t length = 0;
        for (std::size_t k = 0; k < relators_.size(); ++k) {
          if (k == ri) continue;
          Word w = relators_[k].substitute(images).cyclically_reduced();
          length += w.length();
          next.push_back(std::move(w));
        }
        if (length > length_cap_) continue;
        if (!best || length < best->new_length) {
          best = Candidate{ri, s.gen, length};
          best_relators = std::move(next);
        }
      }
    }
    if (!best || !spend()) return false;
    relators_ = std::move(best_relators);
    alive_[best->gen] = false;
    return true;
  }

  // Solves relator r = 1 for the generator g occurring once with exponent +-1.
  static Word defining_word(const Word& r, GenId g) {
    const auto& syl = r.syllables();
    std::size_t at = 0;
    while (syl[at].gen != g) ++at;
    // r = A g^e B  =>  g^e = A^-1 B^-1
    Word a, b;
    for (std::size_t k = 0; k < at; ++k) a *= Word::generator(syl[k].gen, syl[k].exp);
    for (std::size_t k = at + 1; k < syl.size(); ++k) b *= Word::generator(syl[k].gen, syl[k].exp);
    Word ge = a.inverse() * b.inverse();
    return syl[at].exp == 1 ? ge : ge.inverse();
  }

  FinitePresentation result() const {
    std::vector<GenId> renumber(names_.size());
    std::vector<std::string> names;
    for (GenId g = 0; g < names_.size(); ++g) {
      if (!alive_[g]) continue;
      renumber[g] = static_cast<GenId>(names.size());
      names.push_back(names_[g]);
    }
    std::vector<Word> images;
    for (GenId g = 0; g < names_.size(); ++g) images.push_back(alive_[g] ? Word::generator(renumber[g]) : Word());
    std::vector<Word> rels;
    for (const Word& r : relators_) {
      Word w = r.substitute(images);
      if (!w.empty()) rels.push_back(std::move(w));
    }
    return FinitePresentation(std::move(names), std::move(rels));
  }

  std::vector<std::string> names_;
  std::vector<bool> alive_;
  std::vector<Word> relators_;
  std::size_t budget_;
  std::size_t length_cap_ = 0;
};

}  // namespace

FinitePresentation tietze_simplify(const FinitePresentation& p, std::size_t budget) {
  if (budget == 0) return p;
  return Simplifier(p, budget).run();
}

}  // namespace fpg
