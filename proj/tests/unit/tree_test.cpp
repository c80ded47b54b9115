#include <gtest/gtest.h>

#include <map>
#include <string>

#include "fqk/fusion_ring.hpp"
#include "fqk/text.hpp"
#include "fqk/tree.hpp"
#include "oracles.hpp"

namespace {

using namespace fqk;

FusionRing ring(const char* spec) { return FusionRing::make(parse_spec(spec)); }

TEST(Tree, DepthZero) {
  const auto y = build_tree(ring("FO(3)*Z"), 1, 0);
  ASSERT_EQ(y.edges.size(), 1u);
  ASSERT_EQ(y.vertices.size(), 2u);
  EXPECT_EQ(y.vertices[y.src[0]].quotient, 0);
  EXPECT_EQ(y.vertices[y.tgt[0]].quotient, 1);
  EXPECT_EQ(verify_tree(y).kind, TreeVerdict::Kind::Tree);
}

TEST(Tree, RejectsBadSplits) {
  EXPECT_THROW((void)build_tree(ring("FO(3)*Z"), 0, 2), DomainError);
  EXPECT_THROW((void)build_tree(ring("FO(3)"), 1, 2), DomainError);
}

TEST(Tree, FactorsMayBeProducts) {
  const auto y = build_tree(ring("FO(3)*Z"), ring("FO(4)"), 3);
  EXPECT_EQ(y.split, 2u);
  EXPECT_EQ(verify_tree(y).kind, TreeVerdict::Kind::Tree);
}

class TreeRings : public ::testing::TestWithParam<const char*> {};

TEST_P(TreeRings, IsATreeAtEveryDepth) {
  const FusionRing g = ring(GetParam());
  for (int depth = 0; depth <= 4; ++depth) {
    const auto y = build_tree(g, 1, depth);
    EXPECT_EQ(y.edges.size(), g.irreps_up_to(depth).size());
    EXPECT_EQ(y.vertices.size(), y.edges.size() + 1);
    const auto v = verify_tree(y);
    EXPECT_EQ(v.kind, TreeVerdict::Kind::Tree) << to_string(v.kind) << " at " << depth;
  }
}

TEST_P(TreeRings, GrowsMonotonically) {
  const FusionRing g = ring(GetParam());
  const auto small = build_tree(g, 1, 2);
  const auto big = build_tree(g, 1, 3);
  std::map<Irrep, std::size_t> where;
  for (std::size_t e = 0; e < big.edges.size(); ++e) where[big.edges[e]] = e;
  for (std::size_t e = 0; e < small.edges.size(); ++e) {
    const auto it = where.find(small.edges[e]);
    ASSERT_NE(it, where.end());
    const std::size_t f = it->second;
    EXPECT_EQ(small.vertices[small.src[e]].coset.representative,
              big.vertices[big.src[f]].coset.representative);
    EXPECT_EQ(small.vertices[small.tgt[e]].coset.representative,
              big.vertices[big.tgt[f]].coset.representative);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, TreeRings,
                         ::testing::Values("FO(3)*Z", "FU(2)*Z", "Z*Z",
                                           "FO(3)*FO(4)", "FO(2)*FU(3)"));

// The classical case: cosets of <a> and <b> in the free group on a, b.
TEST(Tree, FreeGroupMatchesClassicalCosets) {
  const FusionRing g = ring("Z*Z");
  for (int depth = 1; depth <= 4; ++depth) {
    const auto y = build_tree(g, 1, depth);
    std::map<Irrep, std::size_t> index;
    for (std::size_t e = 0; e < y.edges.size(); ++e) index[y.edges[e]] = e;
    for (int side = 0; side < 2; ++side) {
      oracle::Partition part(y.edges.size());
      for (std::size_t e = 0; e < y.edges.size(); ++e) {
        const auto w = oracle::to_free_word(y.edges[e]);
        for (int k = -depth; k <= depth; ++k) {
          if (k == 0) continue;
          const auto it = index.find(
              oracle::from_free_word(oracle::free_multiply(w, {{side, k}})));
          if (it != index.end()) part.join(e, it->second);
        }
      }
      const auto& ends = side == 0 ? y.src : y.tgt;
      for (std::size_t e = 0; e < y.edges.size(); ++e) {
        for (std::size_t f = e + 1; f < y.edges.size(); ++f) {
          EXPECT_EQ(part.find(e) == part.find(f), ends[e] == ends[f])
              << render(g, y.edges[e]) << " / " << render(g, y.edges[f]);
        }
      }
    }
  }
}

TEST(Tree, DetectsCycles) {
  auto y = build_tree(ring("Z*Z"), 1, 2);
  y.edges.push_back(y.edges[3]);
  y.src.push_back(y.src[3]);
  y.tgt.push_back(y.tgt[3]);
  const auto v = verify_tree(y);
  EXPECT_EQ(v.kind, TreeVerdict::Kind::Cycle);
  EXPECT_GE(v.witness_edges.size(), 2u);
  EXPECT_EQ(v.witness_edges.front(), y.edges.size() - 1);
}

TEST(Tree, DetectsDisconnection) {
  auto y = build_tree(ring("Z*Z"), 1, 2);
  y.vertices.push_back(TreeVertex{0, Coset{}});
  const auto v = verify_tree(y);
  EXPECT_EQ(v.kind, TreeVerdict::Kind::Disconnected);
  EXPECT_EQ(v.witness_vertices, (std::vector<std::size_t>{0, y.vertices.size() - 1}));
  EXPECT_THROW((void)verify_tree(BassSerreGraph{y.ring, 1, {}, {Irrep()}, {0}, {1}, 0}),
               DomainError);
}

TEST(Tree, DotOutput) {
  const auto y = build_tree(ring("FO(3)*Z"), 1, 0);
  const std::string dot = to_dot(y);
  EXPECT_EQ(dot.rfind("digraph Y {", 0), 0u);
  EXPECT_NE(dot.find("v0 -> v1"), std::string::npos);
  EXPECT_NE(dot.find("[e]_0"), std::string::npos);
}

}  // namespace
