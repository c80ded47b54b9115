#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fqk/integer.hpp"
#include "fqk/irrep.hpp"

namespace fqk {

class FusionRing;

enum class BlockKind { FO, FU, Z };

/// Descriptor accepted by FusionRing::make.  Products may nest; they are
/// flattened on construction.
struct RingSpec {
  enum class Kind { FO, FU, Z, Product };
  Kind kind = Kind::Z;
  int size = 0;
  std::vector<RingSpec> factors;

  static RingSpec fo(int n) { return {Kind::FO, n, {}}; }
  static RingSpec fu(int m) { return {Kind::FU, m, {}}; }
  static RingSpec z() { return {Kind::Z, 0, {}}; }
  static RingSpec product(std::vector<RingSpec> fs) {
    return {Kind::Product, 0, std::move(fs)};
  }
};

struct Block {
  BlockKind kind = BlockKind::Z;
  int size = 0;  // n for FO(n), m for FU(m), unused for Z
  /// FU(m) only: the ambient FO(m)*Z ring its labels live in.
  std::shared_ptr<const FusionRing> ambient;
};

/// A nontrivial irreducible of a block together with its multiplicity in a
/// block-level tensor product; `letter` is empty for the trivial summand.
struct BlockTerm {
  std::optional<Letter> letter;
  Integer multiplicity;
};

/// Fusion ring of FO(n), FU(m), Z, or a free product of those.  Immutable
/// and cheap to copy; safe to share across threads.
class FusionRing {
 public:
  /// Throws DomainError("unsupported block size ...") for FO/FU sizes < 2.
  static FusionRing make(const RingSpec& spec);

  [[nodiscard]] std::size_t factor_count() const noexcept;
  [[nodiscard]] const Block& block(std::size_t factor) const;
  [[nodiscard]] std::span<const Block> blocks() const noexcept;
  /// Text form in the group-spec grammar, e.g. "FO(3)*Z".
  [[nodiscard]] const std::string& name() const noexcept;
  /// Flat descriptor that rebuilds this ring.
  [[nodiscard]] RingSpec spec() const;

  /// Throws DomainError("malformed irrep: ...") unless r is a reduced word
  /// of nontrivial letters valid for this ring.
  void validate(const Irrep& r) const;
  void validate(const Letter& l) const;

  [[nodiscard]] Irrep conj(const Irrep& r) const;
  [[nodiscard]] Letter conj(const Letter& l) const;
  [[nodiscard]] Integer dim(const Irrep& r) const;
  [[nodiscard]] Integer dim(const Letter& l) const;
  [[nodiscard]] FormalSum fuse(const Irrep& r, const Irrep& s) const;
  /// Bilinear extension.
  [[nodiscard]] FormalSum fuse(const FormalSum& a, const FormalSum& b) const;
  /// Decomposition of a (x) b for two letters of the same factor.
  [[nodiscard]] std::vector<BlockTerm> fuse_letters(const Letter& a,
                                                    const Letter& b) const;

  /// Nontrivial letters of one factor whose parameter (FO index, |Z
  /// exponent|, FU degree) is at most `depth`, in canonical order.
  [[nodiscard]] std::vector<Letter> letters_up_to(std::size_t factor,
                                                  int depth) const;
  /// All irreps of length <= depth with every letter parameter <= depth, in
  /// canonical order.
  [[nodiscard]] std::vector<Irrep> irreps_up_to(int depth) const;

  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.name() == b.name();
  }

 private:
  struct Impl;
  explicit FusionRing(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  void fuse_into(const Irrep& r, const Irrep& s, const Integer& coefficient,
                 FormalSum& out) const;

  std::shared_ptr<const Impl> impl_;
};

/// G_0 * G_1 with the factors of `a` first.
[[nodiscard]] FusionRing free_product(const FusionRing& a, const FusionRing& b);

/// Dimensions d_0 = 1, d_1 = n, d_{k+1} = n d_k - d_{k-1} of FO(n).
[[nodiscard]] Integer fo_dimension(int n, std::int64_t k);

/// Membership in the word set W of FO(m)*Z that realizes Irr(FU(m)); the
/// trivial word counts as a member.  `word` must be an irrep of a
/// two-factor ring whose factor 0 is FO and factor 1 is Z.
[[nodiscard]] bool is_in_W(const Irrep& word);

/// Sum of the FO indices of a W-word: its degree in u, ubar.
[[nodiscard]] std::int64_t w_degree(const Irrep& word);

/// Every nontrivial W-word of the given degree, in canonical order.
[[nodiscard]] std::vector<Irrep> w_words_of_degree(std::int64_t degree);

}  // namespace fqk
