#include "fqk/tree.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "fqk/error.hpp"
#include "fqk/text.hpp"
#include "fqk/word_table.hpp"

namespace fqk {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::uint32_t strip(const WordTable& t, std::uint32_t id, std::size_t split,
                    bool first_side) {
  while (id != 0 && ((t.last_factor(id) < split) == first_side)) {
    id = t.parent(id);
  }
  return id;
}

}  // namespace

BassSerreGraph build_tree(const FusionRing& g0, const FusionRing& g1,
                          int depth) {
  return build_tree(free_product(g0, g1), g0.factor_count(), depth);
}

BassSerreGraph build_tree(const FusionRing& g, std::size_t split, int depth) {
  if (split == 0 || split >= g.factor_count()) {
    throw DomainError("tree needs a split into two nonempty factor groups");
  }
  if (depth < 0) throw DomainError("negative depth");
  const WordTable table(g, depth);
  const std::size_t n = table.size();

  BassSerreGraph out{g, split, {}, {}, {}, {}, depth};
  std::vector<std::uint32_t> vertex0(n, WordTable::kNone);
  std::vector<std::uint32_t> vertex1(n, WordTable::kNone);
  for (int side = 0; side < 2; ++side) {
    auto& index = side == 0 ? vertex0 : vertex1;
    for (std::uint32_t id = 0; id < n; ++id) {
      // Words not ending in G_side represent their own coset.
      const bool rep = id == 0 || ((table.last_factor(id) < split) != (side == 0));
      if (!rep) continue;
      index[id] = static_cast<std::uint32_t>(out.vertices.size());
      out.vertices.push_back(
          TreeVertex{side, Coset{Side::Left, table.irrep(id), depth, {}}});
    }
  }
  out.edges.reserve(n);
  out.src.reserve(n);
  out.tgt.reserve(n);
  for (std::uint32_t id = 0; id < n; ++id) {
    out.edges.push_back(table.irrep(id));
    out.src.push_back(vertex0[strip(table, id, split, true)]);
    out.tgt.push_back(vertex1[strip(table, id, split, false)]);
  }
  return out;
}

TreeVerdict verify_tree(const BassSerreGraph& g) {
  const std::size_t nv = g.vertices.size();
  const std::size_t ne = g.edges.size();
  if (g.src.size() != ne || g.tgt.size() != ne) {
    throw DomainError("graph has mismatched edge maps");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (g.src[e] >= nv || g.tgt[e] >= nv) {
      throw DomainError("edge endpoint out of range");
    }
  }

  TreeVerdict verdict;
  DisjointSets sets(nv);
  // forest adjacency: vertex -> (neighbour, edge)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(nv);
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t a = g.src[e];
    const std::size_t b = g.tgt[e];
    if (!sets.unite(a, b)) {
      // Path a -> b inside the forest closes the cycle with e.
      std::vector<std::pair<std::size_t, std::size_t>> via(
          nv, {SIZE_MAX, SIZE_MAX});
      std::deque<std::size_t> queue{a};
      via[a] = {a, SIZE_MAX};
      while (!queue.empty() && via[b].first == SIZE_MAX) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& [y, edge] : forest[x]) {
          if (via[y].first != SIZE_MAX) continue;
          via[y] = {x, edge};
          queue.push_back(y);
        }
      }
      verdict.kind = TreeVerdict::Kind::Cycle;
      verdict.witness_edges.push_back(e);
      for (std::size_t x = b; x != a; x = via[x].first) {
        verdict.witness_edges.push_back(via[x].second);
      }
      return verdict;
    }
    forest[a].emplace_back(b, e);
    forest[b].emplace_back(a, e);
  }
  for (std::size_t v = 1; v < nv; ++v) {
    if (sets.find(v) != sets.find(0)) {
      verdict.kind = TreeVerdict::Kind::Disconnected;
      verdict.witness_vertices = {0, v};
      return verdict;
    }
  }
  if (nv == 0) {
    verdict.kind = TreeVerdict::Kind::Disconnected;
  }
  return verdict;
}

const char* to_string(TreeVerdict::Kind k) {
  switch (k) {
    case TreeVerdict::Kind::Tree: return "tree";
    case TreeVerdict::Kind::Disconnected: return "disconnected";
    case TreeVerdict::Kind::Cycle: return "cycle";
  }
  return "?";
}

std::string to_dot(const BassSerreGraph& g) {
  std::ostringstream os;
  os << "digraph Y {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    os << "  v" << v << " [label=\"[" << render(g.ring, vx.coset.representative)
       << "]_" << vx.quotient << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    os << "  v" << g.src[e] << " -> v" << g.tgt[e] << " [label=\""
       << render(g.ring, g.edges[e]) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fqk
