#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fqk/int_matrix.hpp"
#include "fqk/integer.hpp"

namespace fqk {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inverse;
  /// Nonzero diagonal entries of D, positive, in divisibility order.
  std::vector<Integer> invariant_factors;
  [[nodiscard]] std::size_t rank() const noexcept {
    return invariant_factors.size();
  }
};

/// Dense elimination.  Pivots on the smallest nonzero absolute value, ties
/// broken by (row, column) position.
[[nodiscard]] SNFResult snf(const IntMatrix& a);

/// Z^rank + Z/t_1 + ... + Z/t_k with t_i > 1 and t_1 | t_2 | ... .
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  /// One label per free summand, then one per torsion summand.
  std::vector<std::string> generators;

  [[nodiscard]] bool is_trivial() const noexcept {
    return rank == 0 && torsion.empty();
  }
  /// Same isomorphism class; generators are ignored.
  [[nodiscard]] bool same_invariants(const AbelianGroup& other) const {
    return rank == other.rank && torsion == other.torsion;
  }
  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  [[nodiscard]] std::string to_string() const;
};

struct KerCoker {
  std::size_t rank = 0;
  std::size_t kernel_rank = 0;
  /// Lattice basis of the kernel in column coordinates.  Present whenever
  /// the matrix was reduced densely.
  std::optional<std::vector<SparseVector>> kernel_basis;
  AbelianGroup cokernel;
};

struct KerCokerOptions {
  /// Matrices with at most this many entries go straight to dense SNF.
  std::size_t dense_limit = 40'000;
  /// Largest residual block dense SNF will accept after sparse peeling.
  std::size_t residual_limit = 250'000;
};

/// Kernel of Z^cols -> Z^rows and cokernel Z^rows / image.  Large matrices
/// are first peeled: a row or column with a single unit entry is removed
/// together with its partner, which changes neither the cokernel nor the
/// kernel rank.
[[nodiscard]] KerCoker ker_coker(const IntMatrix& a, KerCokerOptions options = {});

}  // namespace fqk
