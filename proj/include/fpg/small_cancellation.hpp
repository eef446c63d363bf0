#pragma once

#include <cstdint>
#include <string>

#include "fpg/presentation.hpp"

namespace fpg {

// Nonnegative fraction num/den, den > 0, not necessarily reduced.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Largest |piece| / |relator| over the symmetrized relator set (all cyclic
// permutations of the cyclically reduced relators and their inverses). A
// piece is a common prefix of two distinct elements of that set; its ratio
// is taken against the shorter of the two. Returns 0/1 when there are no
// pieces. C'(1/6) holds iff the result is < 1/6.
Ratio small_cancellation_ratio(const FinitePresentation& p);

inline bool satisfies_c_prime_sixth(const Ratio& r) { return 6 * r.num < r.den; }

}  // namespace fpg
