#include "fpg/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fpg {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) im.at(cycle[i]) = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = x;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  Permutation out;
  out.images_.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) out.images_[x] = q.images_[p.images_[x]];
  return out;
}

namespace {

std::string key_of(const Permutation& p) {
  std::string key(p.degree(), '\0');
  for (std::size_t x = 0; x < p.degree(); ++x) key[x] = static_cast<char>(p[x]);
  return key;
}

}  // namespace

std::vector<Permutation> group_elements(std::size_t degree, const std::vector<Permutation>& generators,
                                        std::uint64_t limit) {
  if (degree > 255) throw std::invalid_argument("degree above 255 is not supported");
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<std::string, std::size_t> seen{{key_of(elements[0]), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const Permutation& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.emplace(key_of(next), elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limit) throw std::length_error("group closure exceeds limit");
      }
    }
  return elements;
}

struct PermGroup::Lazy {
  std::once_flag once;
  std::unique_ptr<CayleyTable> table;
};

PermGroup::PermGroup(std::string name, std::size_t degree, std::vector<Permutation> generators)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  for (const Permutation& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  order_ = group_elements(degree_, generators_, kMaxClosureOrder).size();
}

const CayleyTable& PermGroup::table() const {
  if (order_ > kMaxTableOrder) throw std::length_error("group too large for a multiplication table");
  std::call_once(lazy_->once, [this] { lazy_->table = std::make_unique<CayleyTable>(*this); });
  return *lazy_->table;
}

CayleyTable::CayleyTable(const PermGroup& g) {
  const std::size_t degree = g.degree();
  const auto& gens = g.generators();
  // Breadth-first closure remembering, for each element, its parent and the
  // generator that reached it: element j = parent(j) * gen(j).
  elements_.push_back(Permutation::identity(degree));
  std::unordered_map<std::string, Element> index{{key_of(elements_[0]), 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Element> right;  // right[i * |gens| + k] = index of elements[i] * gens[k]
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation next = elements_[i] * gens[k];
      auto [it, fresh] = index.emplace(key_of(next), static_cast<Element>(elements_.size()));
      if (fresh) {
        if (elements_.size() >= PermGroup::kMaxTableOrder) throw std::length_error("group too large");
        elements_.push_back(std::move(next));
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right.push_back(it->second);
    }

  const std::size_t n = elements_.size();
  const std::size_t ng = gens.size();
  table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = &table_[a * n];
    row[0] = static_cast<Element>(a);
    for (std::size_t j = 1; j < n; ++j) row[j] = right[std::size_t(row[parent[j]]) * ng + via[j]];
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index.at(key_of(elements_[a].inverse()));

  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    for (Element x = static_cast<Element>(a); x != 0; x = mul(x, static_cast<Element>(a))) ++k;
    orders_[a] = k;
  }
}

CayleyTable::Element CayleyTable::pow(Element a, std::int64_t e) const noexcept {
  const std::int64_t ord = orders_[a];
  std::int64_t k = ((e % ord) + ord) % ord;
  Element out = 0;
  for (std::int64_t i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

CayleyTable::Element CayleyTable::index_of(const Permutation& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return static_cast<Element>(i);
  throw std::invalid_argument("permutation is not in the group");
}

std::size_t CayleyTable::subgroup_order(std::span<const Element> gens) const {
  const std::size_t n = order();
  std::vector<bool> in(n, false);
  std::vector<Element> queue{0};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size() && queue.size() < n; ++i)
    for (Element g : gens) {
      const Element next = mul(queue[i], g);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  return queue.size();
}

bool CayleyTable::generates_group(std::span<const Element> gens) const { return subgroup_order(gens) == order(); }

}  // namespace fpg
