#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/integer.hpp"
#include "fqk/irrep.hpp"

namespace fqk {

/// The depth window irreps_up_to(depth) stored as a prefix trie: each word
/// is its parent plus one letter.  About 12 bytes per word, so windows with
/// millions of words stay cheap.  Ids follow canonical order; id 0 is the
/// trivial word.
class WordTable {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  WordTable(const FusionRing& ring, int depth,
            std::size_t max_words = 200'000'000);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] int depth() const noexcept { return depth_; }
  [[nodiscard]] const FusionRing& ring() const noexcept { return ring_; }

  [[nodiscard]] std::uint32_t parent(std::uint32_t id) const {
    return nodes_[id].parent;
  }
  /// Factor of the last letter; only valid for id != 0.
  [[nodiscard]] std::uint32_t last_factor(std::uint32_t id) const {
    return nodes_[id].factor;
  }
  [[nodiscard]] const Letter& last_letter(std::uint32_t id) const {
    return alphabet_[nodes_[id].factor][nodes_[id].letter];
  }
  [[nodiscard]] const Integer& last_dim(std::uint32_t id) const {
    return dims_[nodes_[id].factor][nodes_[id].letter];
  }
  [[nodiscard]] std::size_t letter_count(std::uint32_t id) const;
  [[nodiscard]] Irrep irrep(std::uint32_t id) const;

 private:
  struct Node {
    std::uint32_t parent;
    std::uint32_t letter;
    std::uint16_t factor;
    std::uint16_t weight;
  };

  void sort_canonically();

  FusionRing ring_;
  int depth_;
  std::vector<std::vector<Letter>> alphabet_;
  std::vector<std::vector<Integer>> dims_;
  std::vector<Node> nodes_;
};

}  // namespace fqk
