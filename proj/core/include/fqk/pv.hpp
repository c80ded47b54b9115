#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/int_matrix.hpp"
#include "fqk/ktheory.hpp"

namespace fqk {

/// FU(m_1) * ... * FO(n_1) * ... as a list of blocks, in factor order.
/// Sizes below 2 are accepted here so that hand-made modules can be tested;
/// FusionRing itself rejects them.
struct PvSpec {
  struct Block {
    bool unitary = false;
    int size = 0;
  };
  std::vector<Block> blocks;

  /// Throws DomainError for rings with a Z factor.
  static PvSpec from_ring(const FusionRing& ring);

  [[nodiscard]] std::size_t unitary_count() const;    // k
  [[nodiscard]] std::size_t orthogonal_count() const;  // l
  [[nodiscard]] bool has_fo2() const;
};

/// One letter of the generator alphabet u_i, ubar_i, v_j.
struct Generator {
  std::string label;  // "u", "ubar", "v", or with a block number: "u2", "v1"
  int dim = 0;        // epsilon(g)
  std::size_t conjugate = 0;  // alphabet index of conj(g)
};

/// 2k + l letters: u_i, ubar_i for each FU block and v_j for each FO block,
/// in factor order.
[[nodiscard]] std::vector<Generator> generator_alphabet(const PvSpec& spec);

struct CoefficientModule {
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;
  struct Action {
    DenseMatrix k0;
    DenseMatrix k1;
  };
  std::map<std::string, Action> actions;
  /// Optional epsilon(g) overrides; must agree with the spec when present.
  std::map<std::string, Integer> dims;
};

/// K_*(C): K_0 = Z with every generator acting by its dimension, K_1 = 0.
[[nodiscard]] CoefficientModule trivial_module(const PvSpec& spec);

struct PvSigma {
  IntMatrix sigma0;
  IntMatrix sigma1;
};

/// sigma_i = [ g_* - dim(g) ]_g : (+)_g K_i(A) -> K_i(A).  Throws
/// DomainError("module shape error: ...") on inconsistent data.
[[nodiscard]] PvSigma pv_sigma(const PvSpec& spec, const CoefficientModule& a);

/// K_0 = coker sigma_0 + ker sigma_1, K_1 = coker sigma_1 + ker sigma_0.
/// The kernel pieces are free, so both extensions split.
[[nodiscard]] KGroupReport pv_kgroups(const PvSpec& spec,
                                      const CoefficientModule& a);

}  // namespace fqk
