#include "fpg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

#include "fpg/errors.hpp"

namespace fpg {

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::unordered_set<std::string_view> seen;
  for (const std::string& g : generators_) {
    if (!is_valid_identifier(g)) throw std::invalid_argument("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
  }
  for (Word& r : relators_) {
    if (r.generator_bound() > generators_.size())
      throw std::invalid_argument("relator uses an undeclared generator");
    r = free_reduce(r.syllables());
    if (r.empty()) throw std::invalid_argument("empty relator");
  }
}

std::optional<GenId> FinitePresentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<GenId>(i);
  return std::nullopt;
}

GenId FinitePresentation::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::size_t FinitePresentation::total_relator_length() const {
  std::size_t n = 0;
  for (const Word& r : relators_) n += r.length();
  return n;
}

std::string render_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generators.at(s.gen);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

std::string FinitePresentation::render(const Word& w) const { return render_word(w, generators_); }

std::string FinitePresentation::render() const {
  std::string out = "<";
  for (const std::string& g : generators_) out += ' ' + g;
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += render(relators_[i]);
  }
  out += " >";
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FinitePresentation presentation() {
    expect('<');
    std::vector<std::string> gens;
    skip_space();
    while (peek() != '|') {
      if (at_end()) fail("expected '|'");
      if (peek() == ',') {
        advance();
        skip_space();
        continue;
      }
      const std::size_t line = line_, col = col_;
      std::string name = identifier();
      if (std::find(gens.begin(), gens.end(), name) != gens.end())
        throw ParseError("duplicate generator '" + name + "'", line, col);
      gens.push_back(std::move(name));
      skip_space();
    }
    advance();
    generators_ = &gens;
    std::vector<Word> relators;
    skip_space();
    if (peek() != '>') {
      for (;;) {
        const std::size_t line = line_, col = col_;
        Word r = relation();
        if (r.empty()) throw ParseError("empty relator after reduction", line, col);
        relators.push_back(std::move(r));
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('>');
    skip_space();
    if (!at_end()) fail("trailing input after '>'");
    return FinitePresentation(std::move(gens), std::move(relators));
  }

  Word standalone_word(const std::vector<std::string>& gens) {
    generators_ = &gens;
    skip_space();
    Word w;
    if (peek() == '1') {
      advance();
    } else if (!at_end()) {
      w = relation();
    }
    skip_space();
    if (!at_end()) fail("trailing input in word");
    return w;
  }

 private:
  // word | word "=" word
  Word relation() {
    Word lhs = word();
    skip_space();
    if (peek() == '=') {
      advance();
      Word rhs = word();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  Word word() {
    std::vector<Syllable> raw;
    Word out;
    skip_space();
    bool any = false;
    for (;;) {
      skip_space();
      const char ch = peek();
      if (at_end() || ch == ',' || ch == '>' || ch == '=' || ch == ']' || ch == ')' || ch == '|') break;
      out *= atom();
      any = true;
    }
    if (!any) fail("expected a word");
    return out;
  }

  Word atom() {
    const char ch = peek();
    Word base;
    if (ch == '[') {
      advance();
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      base = commutator(u, v);
    } else if (ch == '(') {
      advance();
      base = word();
      expect(')');
    } else {
      const std::size_t line = line_, col = col_;
      const std::string name = identifier();
      const auto it = std::find(generators_->begin(), generators_->end(), name);
      if (it == generators_->end()) throw ParseError("undeclared generator '" + name + "'", line, col);
      base = Word::generator(static_cast<GenId>(it - generators_->begin()));
    }
    skip_space();
    if (peek() == '^') {
      advance();
      skip_space();
      return base.pow(integer());
    }
    return base;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected an identifier");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') advance();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) fail("exponent out of range");
    return value;
  }

  void skip_space() {
    while (!at_end()) {
      const char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  const std::vector<std::string>* generators_ = nullptr;
};

}  // namespace

FinitePresentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text).standalone_word(generators);
}

Word parse_word(std::string_view text, const FinitePresentation& p) { return parse_word(text, p.generators()); }

GeneratorMap::GeneratorMap(FinitePresentation src, FinitePresentation tgt, std::vector<Word> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != source.generator_count())
    throw std::invalid_argument("generator map needs one image per source generator");
  for (const Word& w : images)
    if (w.generator_bound() > target.generator_count())
      throw std::invalid_argument("image word uses a generator outside the target");
}

IntMatrix exponent_matrix(const FinitePresentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (const Syllable& s : p.relators()[i].syllables()) m(i, s.gen) += s.exp;
  return m;
}

std::int64_t euler_characteristic(const FinitePresentation& p) {
  return 1 - static_cast<std::int64_t>(p.generator_count()) + static_cast<std::int64_t>(p.relator_count());
}

std::string copy_name(std::string_view name, std::size_t copy) {
  return std::string(name) + "_" + std::to_string(copy);
}

FinitePresentation direct_product(const FinitePresentation& p1, const FinitePresentation& p2) {
  std::vector<std::string> names1 = p1.generators();
  std::vector<std::string> names2 = p2.generators();
  auto clash = [&] {
    std::unordered_set<std::string> a(names1.begin(), names1.end());
    return std::any_of(names2.begin(), names2.end(), [&](const std::string& n) { return a.count(n) > 0; });
  };
  while (clash()) {
    for (auto& n : names1) n = copy_name(n, 1);
    for (auto& n : names2) n = copy_name(n, 2);
  }
  const auto offset = static_cast<GenId>(names1.size());
  std::vector<std::string> gens = names1;
  gens.insert(gens.end(), names2.begin(), names2.end());

  std::vector<Word> rels = p1.relators();
  for (const Word& r : p2.relators()) rels.push_back(r.shifted(offset));
  for (GenId a = 0; a < p1.generator_count(); ++a)
    for (GenId b = 0; b < p2.generator_count(); ++b)
      rels.push_back(commutator(Word::generator(a), Word::generator(offset + b)));
  return FinitePresentation(std::move(gens), std::move(rels));
}

}  // namespace fpg
