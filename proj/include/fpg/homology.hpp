#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpg/int_matrix.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<BigInt> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + Z/t_1 + ... with t_i | t_{i+1}.
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Cokernel data of a relation matrix whose rows are relations among `cols` generators.
AbelianInvariants cokernel_invariants(const IntMatrix& relations);

// H1 of the group presented by p.
AbelianInvariants abelianization_invariants(const FinitePresentation& p);

// |R| - rank(exponent matrix): the rank of H2 of the presentation 2-complex.
// This is the rank of H2 of the group only when that complex is aspherical.
std::size_t h2_rank_2complex(const FinitePresentation& p);

std::size_t matrix_rank(const IntMatrix& m);

// Integer solution lambda of M^T lambda = b, or nullopt when none exists over Z.
std::optional<std::vector<BigInt>> solve_integer_system(const IntMatrix& m, const std::vector<BigInt>& b);

}  // namespace fpg
