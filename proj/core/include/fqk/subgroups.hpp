#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/irrep.hpp"

namespace fqk {

/// Irr(H) for H generated by a set of free-product factors.
struct FactorSubgroup {
  std::vector<std::size_t> factors;
};
/// FU(m) inside FO(m)*Z, membership via is_in_W.
struct FUInFOZ {
  int m = 0;
};
/// Even-index irreps of FO(n).
struct FOEven {};

using SubgroupSpec = std::variant<FactorSubgroup, FUInFOZ, FOEven>;

/// Accepts "factor:<i>", "fu-in-foz", "fo-even".  Throws SyntaxError listing
/// the supported tokens otherwise.
[[nodiscard]] SubgroupSpec parse_subgroup(std::string_view token,
                                          const FusionRing& g);

/// Throws DomainError if `h` does not describe a quantum subgroup of `g`.
void check_subgroup(const FusionRing& g, const SubgroupSpec& h);
[[nodiscard]] bool contains(const FusionRing& g, const SubgroupSpec& h,
                            const Irrep& r);
/// Irreps of H inside the depth window of G, in canonical order.
[[nodiscard]] std::vector<Irrep> subgroup_irreps(const FusionRing& g,
                                                 const SubgroupSpec& h,
                                                 int depth);

/// Irreps of H inside the window that generate Irr(H) under tensoring:
/// u_1 z and z^-1 u_1 for FU, u_2 for the even part, single letters for
/// factor subgroups.
[[nodiscard]] std::vector<Irrep> subgroup_generators(const FusionRing& g,
                                                     const SubgroupSpec& h,
                                                     int depth);

enum class Side { Left, Right };  // G/H and H\G

struct Coset {
  Side side = Side::Left;
  Irrep representative;
  int depth_certificate = 0;
  /// Every member found inside the window, canonical order.  Empty when the
  /// coset was produced from a closed form rather than a closure search.
  std::vector<Irrep> members;

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.side == b.side && a.representative == b.representative;
  }
};

struct ClosureBudget {
  std::size_t max_nodes = 1'000'000;
  /// Reads FQK_BUDGET, falling back to the default.
  static ClosureBudget from_environment();
};

class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(std::size_t explored, Irrep best, int depth);
  [[nodiscard]] std::size_t explored() const noexcept { return explored_; }
  /// Least member found before the budget ran out.
  [[nodiscard]] const Irrep& partial_representative() const noexcept {
    return best_;
  }
  [[nodiscard]] int depth() const noexcept { return depth_; }

 private:
  std::size_t explored_;
  Irrep best_;
  int depth_;
};

/// Breadth-first closure of r ~ s (s a term of r (x) t, t in Irr(H), for the
/// left side; t (x) r for the right side), restricted to irreps_up_to(depth).
[[nodiscard]] Coset coset_of(const FusionRing& g, const SubgroupSpec& h,
                             const Irrep& r, int depth, Side side = Side::Left,
                             ClosureBudget budget = {});

/// Partition of irreps_up_to(g, depth) into cosets, ordered by
/// representative.
[[nodiscard]] std::vector<Coset> cosets_up_to(const FusionRing& g,
                                              const SubgroupSpec& h, int depth,
                                              Side side = Side::Left,
                                              ClosureBudget budget = {});

/// Classes are closed under subgroup_generators one level beyond `depth`, so
/// a class whose least member has a letter parameter of depth + 1 is still
/// certified; each candidate r is tested against Irr(H) within `depth`.
struct DivisibilityVerdict {
  bool divisible = false;
  int depth = 0;
  /// Divisible: every coset with its certified representative r(alpha).
  std::vector<std::pair<Coset, Irrep>> representatives;
  /// Not divisible: a coset none of whose bounded members works.
  std::optional<Coset> counterexample;
};

[[nodiscard]] DivisibilityVerdict is_divisible(const FusionRing& g,
                                               const SubgroupSpec& h,
                                               int depth,
                                               ClosureBudget budget = {});

/// Left-coset representative of r modulo the factors in `h`: r with its
/// maximal suffix inside those factors removed.
[[nodiscard]] Irrep strip_suffix(const Irrep& r, const FactorSubgroup& h);

enum class FUGenerator { U, UBar };

/// u -> u_1 z, ubar -> z^-1 u_1 in FO(m)*Z.
[[nodiscard]] Irrep embed_fu_generator(FUGenerator which, int m);

/// Closure of {u_1 z, z^-1 u_1} under left and right tensoring by the two
/// generators, restricted to irreps_up_to(FO(m)*Z, depth) in canonical order.
/// Includes the trivial word.  The closure itself runs over all words of
/// degree at most the largest degree inside the window.
[[nodiscard]] std::vector<Irrep> generate_fu_irreps(int m, int depth);

}  // namespace fqk
