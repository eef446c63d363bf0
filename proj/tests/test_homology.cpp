#include <random>

#include "doctest.h"
#include "fpg/homology.hpp"
#include "fpg/presentation.hpp"
#include "test_support.hpp"

using namespace fpg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<int> val(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = val(rng);
  return m;
}

// Rank over Q by fraction-free Gaussian elimination; independent of the Smith code path.
std::size_t rational_rank(IntMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const BigInt a = m(rank, c), b = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = m(r, k) * a - m(rank, k) * b;
    }
    ++rank;
  }
  return rank;
}

void check_smith_invariants(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  const BigInt du = determinant(s.U), dv = determinant(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c)
      if (r != c) CHECK(s.D(r, c) == 0);
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const IntMatrix minus_i{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  CHECK(smith_normal_form(minus_i).D == IntMatrix::identity(4));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).D == IntMatrix{{1, 0}, {0, 6}});
  CHECK(smith_normal_form(IntMatrix{{0, 0}}).D == IntMatrix{{0, 0}});
  check_smith_invariants(minus_i);
  check_smith_invariants(IntMatrix{{2, 0}, {0, 3}});
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 9);
    check_smith_invariants(m);
    CHECK(smith_normal_form(m).rank() == rational_rank(m));
    CHECK(smith_normal_form(m) .D == smith_normal_form(m).D);
  }
}

TEST_CASE("smith normal form survives entry growth") {
  IntMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = BigInt(1) << (8 * ((r * 7 + c * 3) % 11));
  check_smith_invariants(m);
}

TEST_CASE("abelianization examples") {
  const auto higman = abelianization_invariants(parse_presentation(fpg::testing::kHigman));
  CHECK(higman.trivial());
  const auto f2 = abelianization_invariants(parse_presentation("< a b | >"));
  CHECK(f2.free_rank == 2);
  CHECK(f2.torsion.empty());
  const auto c2 = abelianization_invariants(parse_presentation("< a | a^2 >"));
  CHECK(c2.free_rank == 0);
  CHECK(c2.torsion == std::vector<BigInt>{2});
  CHECK(abelianization_invariants(parse_presentation(fpg::testing::kA5)).trivial());
  CHECK(abelianization_invariants(parse_presentation("< a b | a^2 b^4, a^6 >")).to_string() == "Z/2 + Z/12");
}

TEST_CASE("h2 rank of the presentation complex") {
  CHECK(h2_rank_2complex(parse_presentation(fpg::testing::kHigman)) == 0);
  CHECK(h2_rank_2complex(parse_presentation("< a | a^2, a^2 >")) == 1);
  CHECK(h2_rank_2complex(parse_presentation("< a b | [a,b] >")) == 1);
}

TEST_CASE("integer system solving") {
  const IntMatrix minus_i{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  CHECK(solve_integer_system(minus_i, {-1, 0, 0, 0}) == std::vector<BigInt>{1, 0, 0, 0});
  CHECK(!solve_integer_system(IntMatrix{{2}}, {1}).has_value());
  CHECK(solve_integer_system(IntMatrix{{2}, {3}}, {1}) == std::vector<BigInt>{-1, 1});
}

TEST_CASE("integer solutions satisfy the system, and failures have an obstruction") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4);
    std::vector<BigInt> b(m.cols());
    for (auto& x : b) x = val(rng);
    const auto lambda = solve_integer_system(m, b);
    if (lambda) {
      CHECK(m.transposed() * *lambda == b);
    } else {
      // Either b is outside the rational column space, or some
      // divisibility condition fails: appending b changes the cokernel.
      IntMatrix aug(m.rows() + 1, m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
      for (std::size_t c = 0; c < m.cols(); ++c) aug(m.rows(), c) = b[c];
      CHECK(cokernel_invariants(aug) != cokernel_invariants(m));
    }
  }
}
