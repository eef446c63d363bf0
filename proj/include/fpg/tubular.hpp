#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpg/presentation.hpp"

namespace fpg {

// Data of a tubular bundle of type (d; n, m): m vertex complexes given as
// presentation complexes, one attaching loop per vertex (a word in its
// generators), m words rho(i) over the rose generators a1..an, and m shift
// vectors in Z^d.
struct TubularBundleData {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<FinitePresentation> vertices;
  std::vector<Word> loops;
  std::vector<Word> rho;
  std::vector<std::vector<std::int64_t>> shifts;

  // Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

// "a1", ..., "an"
std::vector<std::string> rose_generators(std::size_t n);

// Fundamental group of the bundle, as a graph of groups over the star tree:
// generators a1..an, t1..td, then each vertex's generators suffixed _i;
// relators [t_j, t_k] (j < k), [t_j, g] for every other generator g, each
// vertex's relators, and rho(i)^-1 c_i t^z_i per edge.
FinitePresentation tubular_bundle_presentation(const TubularBundleData& b);

// Every bundle over a fixed (X, c) and fixed rho with shift entries in
// [-height, height], in lexicographic order of the concatenated shift matrix.
// Random access lets consumers split the index range.
class TubularBundleEnumeration {
 public:
  TubularBundleEnumeration(FinitePresentation x, Word c, std::size_t d, std::size_t n, std::size_t m,
                           std::vector<Word> rho, std::uint64_t height);

  std::uint64_t size() const noexcept { return size_; }
  TubularBundleData at(std::uint64_t index) const;

 private:
  TubularBundleData base_;
  std::uint64_t height_;
  std::uint64_t size_;
};

nlohmann::json to_json(const TubularBundleData& b);
TubularBundleData tubular_bundle_from_json(const nlohmann::json& j);

}  // namespace fpg
