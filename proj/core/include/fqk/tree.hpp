#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/irrep.hpp"
#include "fqk/subgroups.hpp"

namespace fqk {

struct TreeVertex {
  int quotient = 0;  // 0: Irr(G)/Irr(G_0), 1: Irr(G)/Irr(G_1)
  Coset coset;
};

/// Naive Bass-Serre graph of G = G_0 * G_1 truncated at `depth`: edges are
/// the irreps of the window, vertices the cosets they touch.
struct BassSerreGraph {
  FusionRing ring;          // G, flattened
  std::size_t split = 1;    // factors [0, split) form G_0
  std::vector<TreeVertex> vertices;
  std::vector<Irrep> edges;
  std::vector<std::size_t> src;  // edge -> vertex, tau_0
  std::vector<std::size_t> tgt;  // edge -> vertex, tau_1
  int depth = 0;
};

[[nodiscard]] BassSerreGraph build_tree(const FusionRing& g0,
                                        const FusionRing& g1, int depth);
/// Same, with G given flat and G_0 = factors [0, split).
[[nodiscard]] BassSerreGraph build_tree(const FusionRing& g, std::size_t split,
                                        int depth);

struct TreeVerdict {
  enum class Kind { Tree, Disconnected, Cycle };
  Kind kind = Kind::Tree;
  /// Disconnected: two vertices in different components.
  std::vector<std::size_t> witness_vertices;
  /// Cycle: edge indices forming a closed walk.
  std::vector<std::size_t> witness_edges;
};

[[nodiscard]] TreeVerdict verify_tree(const BassSerreGraph& g);
[[nodiscard]] const char* to_string(TreeVerdict::Kind k);

/// DOT text for external rendering.
[[nodiscard]] std::string to_dot(const BassSerreGraph& g);

}  // namespace fqk
