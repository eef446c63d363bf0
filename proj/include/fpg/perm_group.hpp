#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fpg {

// A bijection of {0, ..., degree-1}. Products compose left to right:
// (p * q)(x) = q(p(x)), so words are evaluated in reading order.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  // Cycle notation on explicit points, e.g. {{0,1,2}} is the 3-cycle 0->1->2.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

class CayleyTable;

// A finite permutation group given by generators. The order is computed by
// closure at construction; the multiplication table is built on first use.
class PermGroup {
 public:
  PermGroup(std::string name, std::size_t degree, std::vector<Permutation> generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  // Thread-safe lazy construction; throws std::length_error past kMaxTableOrder.
  const CayleyTable& table() const;

  static constexpr std::uint64_t kMaxTableOrder = 5040;
  static constexpr std::uint64_t kMaxClosureOrder = 2'000'000;

 private:
  struct Lazy;
  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 0;
  std::shared_ptr<Lazy> lazy_;
};

// All elements of a group indexed 0..N-1 (0 is the identity) with the full
// multiplication table, inverses and element orders.
class CayleyTable {
 public:
  using Element = std::uint16_t;

  explicit CayleyTable(const PermGroup& g);

  std::size_t order() const noexcept { return elements_.size(); }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t(a) * order() + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return orders_[a]; }
  Element pow(Element a, std::int64_t e) const noexcept;
  const Permutation& element(Element a) const { return elements_[a]; }
  Element index_of(const Permutation& p) const;

  // True when the given elements generate the whole group.
  bool generates_group(std::span<const Element> gens) const;
  std::size_t subgroup_order(std::span<const Element> gens) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
};

// Closure of the generators by breadth-first right multiplication.
std::vector<Permutation> group_elements(std::size_t degree, const std::vector<Permutation>& generators,
                                        std::uint64_t limit);

}  // namespace fpg
