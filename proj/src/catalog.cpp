#include "fpg/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

// Arithmetic in GF(p^k), elements encoded as base-p digit strings of the
// polynomial coefficients (constant term least significant).
class FiniteField {
 public:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)  // monic, low degree first
      : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  }

  std::uint32_t size() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return encode(da);
  }

  std::uint32_t neg(std::uint32_t a) const {
    auto da = digits(a);
    for (auto& d : da) d = (p_ - d) % p_;
    return encode(da);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::uint32_t deg = 2 * k_ - 1; deg >= k_; --deg) {
      const std::uint32_t c = prod[deg];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= k_; ++i) prod[deg - k_ + i] = (prod[deg - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    prod.resize(k_);
    return encode(prod);
  }

  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
  }

  std::uint32_t primitive_element() const {
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q_ - 1) return g;
    }
    return q_ == 2 ? 1 : 2;
  }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
};

FiniteField field_of_order(std::uint32_t q) {
  switch (q) {
    case 5: case 7: case 11: case 13: case 17:
      return FiniteField(q, {0, 1});
    case 8:
      return FiniteField(2, {1, 1, 0, 1});  // x^3 + x + 1
    case 9:
      return FiniteField(3, {2, 1, 1});  // x^2 + x + 2
    default:
      throw std::invalid_argument("psl2: unsupported field order " + std::to_string(q));
  }
}

}  // namespace

PermGroup alternating_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("alternating_group needs n >= 3");
  const Permutation three = Permutation::from_cycles(n, {{0, 1, 2}});
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cycle.push_back(i);
  const Permutation long_cycle = Permutation::from_cycles(n, {cycle});
  return PermGroup("A" + std::to_string(n), n, {three, long_cycle});
}

PermGroup psl2(std::uint32_t q) {
  const FiniteField f = field_of_order(q);
  const std::uint32_t inf = q;
  std::vector<std::uint32_t> shift(q + 1), invert(q + 1), scale(q + 1);
  const std::uint32_t w = f.primitive_element();
  const std::uint32_t w2 = f.mul(w, w);
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = f.add(x, 1);
    invert[x] = x == 0 ? inf : f.neg(f.inv(x));
    scale[x] = f.mul(w2, x);
  }
  shift[inf] = inf;
  invert[inf] = 0;
  scale[inf] = inf;
  std::vector<Permutation> gens{Permutation(shift), Permutation(invert)};
  // Over a non-prime field the two Moebius maps only generate PSL(2,p); the
  // diagonal map x -> w^2 x supplies the rest.
  const bool prime = q == 5 || q == 7 || q == 11 || q == 13 || q == 17;
  if (!prime) gens.emplace_back(scale);
  PermGroup g("PSL2_" + std::to_string(q), q + 1, std::move(gens));
  const std::uint64_t expected = std::uint64_t(q) * (std::uint64_t(q) * q - 1) / (q % 2 == 1 ? 2 : 1);
  if (g.order() != expected) throw std::logic_error("psl2 closure has unexpected order");
  return g;
}

namespace {

struct Entry {
  const char* name;
  std::uint64_t order;
  PermGroup (*make)();
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"A5", 60, [] { return alternating_group(5); }},
      {"PSL2_7", 168, [] { return psl2(7); }},
      {"A6", 360, [] { return alternating_group(6); }},
      {"PSL2_8", 504, [] { return psl2(8); }},
      {"PSL2_11", 660, [] { return psl2(11); }},
      {"PSL2_13", 1092, [] { return psl2(13); }},
      {"PSL2_17", 2448, [] { return psl2(17); }},
      {"A7", 2520, [] { return alternating_group(7); }},
  };
  return list;
}

// Groups are built once and shared so their multiplication tables are reused.
const PermGroup& cached(const Entry& e) {
  static std::mutex mutex;
  static std::map<std::string, PermGroup> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(e.name);
  if (it == cache.end()) it = cache.emplace(e.name, e.make()).first;
  return it->second;
}

}  // namespace

std::vector<PermGroup> catalog_up_to(std::uint64_t bound) {
  if (bound > kCatalogCompleteBound)
    throw CatalogBoundExceeded("catalog is complete only up to order " + std::to_string(kCatalogCompleteBound) +
                               ", requested " + std::to_string(bound));
  std::vector<PermGroup> out;
  for (const Entry& e : entries())
    if (e.order <= bound) out.push_back(cached(e));
  return out;
}

PermGroup catalog_group(std::string_view name) {
  for (const Entry& e : entries())
    if (name == e.name) return cached(e);
  throw std::invalid_argument("unknown catalog group '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const Entry& e : entries()) out.emplace_back(e.name);
  return out;
}

}  // namespace fpg
