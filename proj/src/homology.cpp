#include "fpg/homology.hpp"

#include <stdexcept>

namespace fpg {

namespace {

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Entry of least nonzero absolute value in the trailing submatrix, if any.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      BigInt a = abs_value(d(r, c));
      if (!found || a < best) {
        best = std::move(a);
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    d.swap_rows(t, pr);
    s.U.swap_rows(t, pr);
    d.swap_cols(t, pc);
    s.V.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot; a nonzero remainder becomes the new pivot.
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        const BigInt q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        s.U.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) {
          d.swap_rows(t, r);
          s.U.swap_rows(t, r);
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        const BigInt q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        s.V.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) {
          d.swap_cols(t, c);
          s.V.swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Divisibility: fold any row whose entries the pivot does not divide into row t.
      bool folded = false;
      for (std::size_t r = t + 1; r < d.rows() && !folded; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            s.U.add_row_multiple(t, r, 1);
            folded = true;
            break;
          }
      if (!folded) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::string out;
  for (const BigInt& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.str());
  if (free_rank > 0) out += (out.empty() ? "" : " + ") + (free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank));
  return out;
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations) {
  const SmithDecomposition s = smith_normal_form(relations);
  AbelianInvariants inv;
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) > 1) inv.torsion.push_back(s.D(i, i));
  inv.free_rank = relations.cols() - r;
  return inv;
}

AbelianInvariants abelianization_invariants(const FinitePresentation& p) {
  return cokernel_invariants(exponent_matrix(p));
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

std::size_t h2_rank_2complex(const FinitePresentation& p) {
  return p.relator_count() - matrix_rank(exponent_matrix(p));
}

std::optional<std::vector<BigInt>> solve_integer_system(const IntMatrix& m, const std::vector<BigInt>& b) {
  // A = M^T has |gens| rows and |relators| columns; U A V = D.
  const IntMatrix a = m.transposed();
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  const SmithDecomposition s = smith_normal_form(a);
  const std::vector<BigInt> c = s.U * b;
  const std::size_t r = s.rank();
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

}  // namespace fpg
