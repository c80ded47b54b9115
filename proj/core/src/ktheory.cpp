#include "fqk/ktheory.hpp"

#include <map>
#include <memory>

#include "fqk/error.hpp"
#include "fqk/text.hpp"
#include "fqk/word_table.hpp"

namespace fqk {

namespace {

struct VertexIndex {
  std::shared_ptr<const WordTable> table;
  std::size_t split = 1;
  std::vector<std::uint32_t> of0;   // word id -> vertex, G_0 representatives
  std::vector<std::uint32_t> of1;   // word id -> vertex, G_1 representatives
  std::vector<std::uint32_t> word;  // vertex -> word id
  std::size_t count0 = 0;           // vertices [0, count0) are G/G_0 cosets

  [[nodiscard]] bool in_g0(std::uint32_t id) const {
    return table->last_factor(id) < split;
  }
};

VertexIndex index_vertices(const FusionRing& g, std::size_t split, int depth) {
  if (split == 0 || split >= g.factor_count()) {
    throw DomainError("boundary map needs a split into two nonempty factor groups");
  }
  if (depth < 0) throw DomainError("negative depth");
  VertexIndex v;
  v.table = std::make_shared<const WordTable>(g, depth);
  v.split = split;
  const std::size_t n = v.table->size();
  v.of0.assign(n, WordTable::kNone);
  v.of1.assign(n, WordTable::kNone);
  for (std::uint32_t id = 0; id < n; ++id) {
    if (id == 0 || !v.in_g0(id)) {
      v.of0[id] = static_cast<std::uint32_t>(v.word.size());
      v.word.push_back(id);
    }
  }
  v.count0 = v.word.size();
  for (std::uint32_t id = 0; id < n; ++id) {
    if (id == 0 || v.in_g0(id)) {
      v.of1[id] = static_cast<std::uint32_t>(v.word.size());
      v.word.push_back(id);
    }
  }
  return v;
}

IntMatrix build_boundary(const VertexIndex& v) {
  const WordTable& t = *v.table;
  auto shared = std::make_shared<const VertexIndex>(v);
  Basis rows(v.word.size(), [shared](std::size_t i) {
    const int q = i < shared->count0 ? 0 : 1;
    const auto& tab = *shared->table;
    return "[" + render(tab.ring(), tab.irrep(shared->word[i])) + "]_" +
           std::to_string(q);
  });
  auto table = v.table;
  Basis cols(t.size(), [table](std::size_t j) {
    return render(table->ring(), table->irrep(static_cast<std::uint32_t>(j)));
  });

  IntMatrix::Builder b(std::move(rows), std::move(cols));
  for (std::uint32_t id = 0; id < t.size(); ++id) {
    if (id == 0) {
      b.add(v.of0[0], -1);
      b.add(v.of1[0], 1);
    } else {
      const bool side0 = v.in_g0(id);
      // Strip the maximal suffix in G_side, multiplying up its dimension.
      Integer d = 1;
      std::uint32_t w = id;
      while (w != 0 && v.in_g0(w) == side0) {
        d *= t.last_dim(w);
        w = t.parent(w);
      }
      if (side0) {
        b.add(v.of0[w], -d);
        b.add(v.of1[id], 1);
      } else {
        b.add(v.of0[id], -1);
        b.add(v.of1[w], d);
      }
    }
    b.finish_column();
  }
  return std::move(b).build();
}

}  // namespace

IntMatrix boundary_matrix(const FusionRing& g0, const FusionRing& g1, int depth) {
  return boundary_matrix(free_product(g0, g1), g0.factor_count(), depth);
}

IntMatrix boundary_matrix(const FusionRing& g, std::size_t split, int depth) {
  return build_boundary(index_vertices(g, split, depth));
}

KGroupReport k_of_tree_algebra(const FusionRing& g0, const FusionRing& g1,
                               int depth) {
  return k_of_tree_algebra(free_product(g0, g1), g0.factor_count(), depth);
}

KGroupReport k_of_tree_algebra(const FusionRing& g, std::size_t split,
                               int depth) {
  if (depth < 1) throw DomainError("tree K-theory needs depth >= 1");
  const IntMatrix at_depth = boundary_matrix(g, split, depth);
  const KerCoker here = ker_coker(at_depth);
  KerCoker next;
  {
    const IntMatrix larger = boundary_matrix(g, split, depth + 1);
    next = ker_coker(larger);
  }
  const bool stable = here.kernel_rank == next.kernel_rank &&
                      here.cokernel.same_invariants(next.cokernel);
  if (!stable) {
    throw DomainError("not stabilized at requested depth " +
                      std::to_string(depth) + ": K0 " +
                      here.cokernel.to_string() + " vs " +
                      next.cokernel.to_string() + ", K1 rank " +
                      std::to_string(here.kernel_rank) + " vs " +
                      std::to_string(next.kernel_rank));
  }
  KGroupReport report;
  report.route = "tree_boundary";
  report.stabilized_at = depth;
  report.k0 = here.cokernel;
  report.k1.rank = here.kernel_rank;
  if (here.kernel_basis) {
    for (const auto& vec : *here.kernel_basis) {
      report.k1.generators.push_back(render_combination(vec, at_depth.col_basis()));
    }
  }
  return report;
}

TrAction t_r_action_matrix(const FusionRing& g, const Irrep& r, int depth) {
  g.validate(r);
  if (r.length() > depth) throw DomainError("irrep lies outside the depth window");
  const std::vector<Irrep> basis = g.irreps_up_to(depth);
  std::map<Irrep, std::size_t> position;
  std::vector<std::string> labels;
  labels.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    position.emplace(basis[i], i);
    labels.push_back(render(g, basis[i]));
  }
  const Irrep rbar = g.conj(r);
  TrAction out;
  Basis b(labels);
  IntMatrix::Builder builder(b, b);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [term, mult] : g.fuse(basis[j], rbar)) {
      const auto it = position.find(term);
      if (it == position.end()) {
        out.out_of_window.push_back({j, term, mult});
      } else {
        builder.add(it->second, mult);
      }
    }
    builder.finish_column();
  }
  out.matrix = std::move(builder).build();
  return out;
}

}  // namespace fqk
