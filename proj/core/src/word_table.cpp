#include "fqk/word_table.hpp"

#include <algorithm>
#include <numeric>

#include "fqk/error.hpp"

namespace fqk {

WordTable::WordTable(const FusionRing& ring, int depth, std::size_t max_words)
    : ring_(ring), depth_(depth) {
  if (depth < 0) throw DomainError("negative depth");
  bool uniform = true;
  for (std::size_t f = 0; f < ring.factor_count(); ++f) {
    alphabet_.push_back(ring.letters_up_to(f, depth));
    std::vector<Integer> d;
    for (const auto& l : alphabet_.back()) {
      d.push_back(ring.dim(l));
      if (l.weight() != 1) uniform = false;
    }
    dims_.push_back(std::move(d));
  }

  nodes_.push_back({kNone, 0, 0, 0});
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t id = level_begin; id < level_end; ++id) {
      const Node node = nodes_[id];
      for (std::size_t f = 0; f < alphabet_.size(); ++f) {
        if (id != 0 && node.factor == f) continue;
        for (std::size_t k = 0; k < alphabet_[f].size(); ++k) {
          const std::int64_t w = node.weight + alphabet_[f][k].weight();
          if (w > depth) continue;
          if (nodes_.size() >= max_words) {
            throw DomainError("depth window exceeds " +
                              std::to_string(max_words) + " words");
          }
          nodes_.push_back({static_cast<std::uint32_t>(id),
                            static_cast<std::uint32_t>(k),
                            static_cast<std::uint16_t>(f),
                            static_cast<std::uint16_t>(w)});
        }
      }
    }
    level_begin = level_end;
    level_end = nodes_.size();
  }
  // With unit weights, level order over sorted parents is already canonical.
  if (!uniform) sort_canonically();
}

std::size_t WordTable::letter_count(std::uint32_t id) const {
  std::size_t n = 0;
  for (; id != 0; id = nodes_[id].parent) ++n;
  return n;
}

Irrep WordTable::irrep(std::uint32_t id) const {
  Irrep r;
  for (; id != 0; id = nodes_[id].parent) r.letters.push_back(last_letter(id));
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

void WordTable::sort_canonically() {
  const std::size_t n = nodes_.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t id = 0; id < n; ++id) {
    offset[id + 1] = offset[id] + letter_count(static_cast<std::uint32_t>(id));
  }
  std::vector<std::uint64_t> keys(offset[n]);
  for (std::size_t id = 0; id < n; ++id) {
    std::size_t pos = offset[id + 1];
    for (auto x = static_cast<std::uint32_t>(id); x != 0; x = nodes_[x].parent) {
      keys[--pos] = (static_cast<std::uint64_t>(nodes_[x].factor) << 32) |
                    nodes_[x].letter;
    }
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (nodes_[a].weight != nodes_[b].weight) {
      return nodes_[a].weight < nodes_[b].weight;
    }
    return std::lexicographical_compare(
        keys.begin() + static_cast<std::ptrdiff_t>(offset[a]),
        keys.begin() + static_cast<std::ptrdiff_t>(offset[a + 1]),
        keys.begin() + static_cast<std::ptrdiff_t>(offset[b]),
        keys.begin() + static_cast<std::ptrdiff_t>(offset[b + 1]));
  });
  std::vector<std::uint32_t> renamed(n);
  for (std::size_t i = 0; i < n; ++i) renamed[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<Node> sorted(n);
  for (std::size_t i = 0; i < n; ++i) {
    Node node = nodes_[order[i]];
    if (node.parent != kNone) node.parent = renamed[node.parent];
    sorted[i] = node;
  }
  nodes_ = std::move(sorted);
}

}  // namespace fqk
