#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/int_matrix.hpp"
#include "fqk/irrep.hpp"
#include "fqk/snf.hpp"

namespace fqk {

struct KGroupReport {
  AbelianGroup k0;
  AbelianGroup k1;
  /// Depth at which two consecutive windows agreed; empty for exact routes.
  std::optional<int> stabilized_at;
  std::string route;  // "tree_boundary" or "pv_sequence"
};

/// Boundary map K_0(C_0(G)) -> K_0(C_0(G/G_0)) + K_0(C_0(G/G_1)) on the
/// depth window.  Columns are the irreps r of G = G_0 * G_1, rows the
/// cosets [w]_0 then [w]_1 (the vertices of build_tree).  Column r has
///   -1 at [e]_0, +1 at [e]_1                        for r = e,
///   -dim(t_0) at [w]_0, +1 at [r]_1                 for r = w t_0,
///   -1 at [r]_0, +dim(t_1) at [w]_1                 for r = w t_1,
/// where t_j is the maximal suffix of r lying in G_j.
[[nodiscard]] IntMatrix boundary_matrix(const FusionRing& g0,
                                        const FusionRing& g1, int depth);
[[nodiscard]] IntMatrix boundary_matrix(const FusionRing& g, std::size_t split,
                                        int depth);

/// K_1 = ker and K_0 = coker of the boundary map, evaluated at `depth` and
/// `depth + 1`.  Throws DomainError("not stabilized at requested depth ...")
/// if the two windows disagree.  K_1 generators are only listed when the
/// kernel was reduced densely.
[[nodiscard]] KGroupReport k_of_tree_algebra(const FusionRing& g0,
                                             const FusionRing& g1, int depth);
[[nodiscard]] KGroupReport k_of_tree_algebra(const FusionRing& g,
                                             std::size_t split, int depth);

struct OutOfWindowEntry {
  std::size_t col;
  Irrep term;
  Integer multiplicity;
};

struct TrAction {
  IntMatrix matrix;
  /// Terms of x (x) conj(r) that fall outside the window.
  std::vector<OutOfWindowEntry> out_of_window;
};

/// Matrix of x -> x (x) conj(r) on the basis irreps_up_to(depth).
[[nodiscard]] TrAction t_r_action_matrix(const FusionRing& g, const Irrep& r,
                                         int depth);

}  // namespace fqk
