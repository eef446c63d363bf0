#include "fpg/tubular.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace fpg {

std::vector<std::string> rose_generators(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

void TubularBundleData::validate() const {
  if (n == 0 || m == 0) throw std::invalid_argument("tubular bundle needs n >= 1 and m >= 1");
  if (vertices.size() != m || loops.size() != m || rho.size() != m || shifts.size() != m)
    throw std::invalid_argument("tubular bundle needs exactly m vertices, loops, rho words and shifts");
  for (std::size_t i = 0; i < m; ++i) {
    if (shifts[i].size() != d) throw std::invalid_argument("shift vector " + std::to_string(i + 1) + " has length != d");
    if (loops[i].empty()) throw std::invalid_argument("attaching loop " + std::to_string(i + 1) + " is trivial");
    if (loops[i].generator_bound() > vertices[i].generator_count())
      throw std::invalid_argument("attaching loop " + std::to_string(i + 1) + " leaves its vertex");
    if (rho[i].empty()) throw std::invalid_argument("rho(" + std::to_string(i + 1) + ") is trivial");
    if (rho[i].generator_bound() > n) throw std::invalid_argument("rho(" + std::to_string(i + 1) + ") leaves F_n");
  }
}

FinitePresentation tubular_bundle_presentation(const TubularBundleData& b) {
  b.validate();
  std::vector<std::string> gens = rose_generators(b.n);
  for (std::size_t j = 1; j <= b.d; ++j) gens.push_back("t" + std::to_string(j));
  std::vector<GenId> vertex_offset;
  for (std::size_t i = 0; i < b.m; ++i) {
    vertex_offset.push_back(static_cast<GenId>(gens.size()));
    for (const std::string& g : b.vertices[i].generators()) gens.push_back(copy_name(g, i + 1));
  }
  std::unordered_set<std::string> unique(gens.begin(), gens.end());
  if (unique.size() != gens.size()) throw std::invalid_argument("tubular bundle generator names collide");

  const auto torus = [&](std::size_t j) { return Word::generator(static_cast<GenId>(b.n + j)); };
  std::vector<Word> rels;
  for (std::size_t j = 0; j < b.d; ++j)
    for (std::size_t k = j + 1; k < b.d; ++k) rels.push_back(commutator(torus(j), torus(k)));
  for (std::size_t j = 0; j < b.d; ++j)
    for (GenId g = 0; g < gens.size(); ++g) {
      if (g >= b.n && g < b.n + b.d) continue;
      rels.push_back(commutator(torus(j), Word::generator(g)));
    }
  for (std::size_t i = 0; i < b.m; ++i)
    for (const Word& r : b.vertices[i].relators()) rels.push_back(r.shifted(vertex_offset[i]));
  for (std::size_t i = 0; i < b.m; ++i) {
    Word edge = b.rho[i].inverse() * b.loops[i].shifted(vertex_offset[i]);
    for (std::size_t j = 0; j < b.d; ++j) edge *= torus(j).pow(b.shifts[i][j]);
    rels.push_back(std::move(edge));
  }
  return FinitePresentation(std::move(gens), std::move(rels));
}

TubularBundleEnumeration::TubularBundleEnumeration(FinitePresentation x, Word c, std::size_t d, std::size_t n,
                                                   std::size_t m, std::vector<Word> rho, std::uint64_t height)
    : height_(height) {
  base_.d = d;
  base_.n = n;
  base_.m = m;
  base_.vertices.assign(m, x);
  base_.loops.assign(m, c);
  base_.rho = std::move(rho);
  base_.shifts.assign(m, std::vector<std::int64_t>(d, 0));
  base_.validate();
  const std::uint64_t radix = 2 * height + 1;
  size_ = 1;
  for (std::size_t k = 0; k < d * m; ++k) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / radix)
      throw std::overflow_error("tubular bundle enumeration is too large");
    size_ *= radix;
  }
}

TubularBundleData TubularBundleEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("bundle index out of range");
  TubularBundleData b = base_;
  const std::uint64_t radix = 2 * height_ + 1;
  // Last shift entry is the least significant digit.
  for (std::size_t k = b.d * b.m; k-- > 0;) {
    b.shifts[k / b.d][k % b.d] = static_cast<std::int64_t>(index % radix) - static_cast<std::int64_t>(height_);
    index /= radix;
  }
  return b;
}

nlohmann::json to_json(const TubularBundleData& b) {
  nlohmann::json j;
  j["d"] = b.d;
  j["n"] = b.n;
  j["m"] = b.m;
  j["vertices"] = nlohmann::json::array();
  j["loops"] = nlohmann::json::array();
  j["rho"] = nlohmann::json::array();
  for (std::size_t i = 0; i < b.m; ++i) {
    j["vertices"].push_back(b.vertices[i].render());
    j["loops"].push_back(b.vertices[i].render(b.loops[i]));
    j["rho"].push_back(render_word(b.rho[i], rose_generators(b.n)));
  }
  j["shifts"] = b.shifts;
  return j;
}

TubularBundleData tubular_bundle_from_json(const nlohmann::json& j) {
  TubularBundleData b;
  b.d = j.at("d").get<std::size_t>();
  b.n = j.at("n").get<std::size_t>();
  b.m = j.at("m").get<std::size_t>();
  const auto rose = rose_generators(b.n);
  for (const auto& v : j.at("vertices")) b.vertices.push_back(parse_presentation(v.get<std::string>()));
  const auto& loops = j.at("loops");
  if (loops.size() != b.vertices.size()) throw std::invalid_argument("loops and vertices differ in length");
  for (std::size_t i = 0; i < loops.size(); ++i) b.loops.push_back(parse_word(loops[i].get<std::string>(), b.vertices[i]));
  for (const auto& r : j.at("rho")) b.rho.push_back(parse_word(r.get<std::string>(), rose));
  b.shifts = j.at("shifts").get<std::vector<std::vector<std::int64_t>>>();
  b.validate();
  return b;
}

}  // namespace fpg
