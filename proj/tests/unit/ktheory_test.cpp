#include <gtest/gtest.h>

#include <map>
#include <string>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/ktheory.hpp"
#include "fqk/text.hpp"

namespace {

using namespace fqk;

FusionRing ring(const char* spec) { return FusionRing::make(parse_spec(spec)); }

std::map<std::string, Integer> column(const IntMatrix& a, const std::string& label) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.col_basis().label(j) != label) continue;
    std::map<std::string, Integer> out;
    for (std::size_t k = a.col_begin(j); k < a.col_end(j); ++k) {
      out[a.row_basis().label(a.entry_row(k))] = a.entry_value(k);
    }
    return out;
  }
  ADD_FAILURE() << "no column " << label;
  return {};
}

using Col = std::map<std::string, Integer>;

TEST(Boundary, ColumnsFollowTheSuffixRule) {
  const FusionRing g = ring("FO(3)*Z");
  const IntMatrix d = boundary_matrix(g, 1, 2);
  EXPECT_EQ(d.cols(), g.irreps_up_to(2).size());
  EXPECT_EQ(d.rows(), d.cols() + 1);
  EXPECT_EQ(column(d, "e"), (Col{{"[e]_0", -1}, {"[e]_1", 1}}));
  EXPECT_EQ(column(d, "0:u1"), (Col{{"[e]_0", -3}, {"[0:u1]_1", 1}}));
  EXPECT_EQ(column(d, "0:u2"), (Col{{"[e]_0", -8}, {"[0:u2]_1", 1}}));
  EXPECT_EQ(column(d, "1:z^1"), (Col{{"[1:z^1]_0", -1}, {"[e]_1", 1}}));
  EXPECT_EQ(column(d, "1:z^1.0:u1"),
            (Col{{"[1:z^1]_0", -3}, {"[1:z^1.0:u1]_1", 1}}));
  EXPECT_EQ(column(d, "0:u2.1:z^-1"),
            (Col{{"[0:u2.1:z^-1]_0", -1}, {"[0:u2]_1", 1}}));
}

TEST(Boundary, FreeGroup) {
  const IntMatrix d = boundary_matrix(ring("Z"), ring("Z"), 1);
  EXPECT_EQ(column(d, "0:z^1"), (Col{{"[e]_0", -1}, {"[0:z^1]_1", 1}}));
  EXPECT_EQ(column(d, "1:z^-1"), (Col{{"[1:z^-1]_0", -1}, {"[e]_1", 1}}));
}

TEST(Boundary, ColumnSumsAreDimensionDifferences) {
  // Each column has exactly two entries: one in each quotient.
  const FusionRing g = ring("FU(2)*Z");
  const IntMatrix d = boundary_matrix(g, 1, 3);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    ASSERT_EQ(d.col_end(j) - d.col_begin(j), 2u) << d.col_basis().label(j);
  }
}

TEST(TreeAlgebra, KGroups) {
  for (const char* spec : {"FO(3)*Z", "FU(2)*Z", "FO(3)*FO(3)", "Z*Z"}) {
    const KGroupReport r = k_of_tree_algebra(ring(spec), 1, 3);
    EXPECT_EQ(r.k0.to_string(), "Z") << spec;
    EXPECT_EQ(r.k1.to_string(), "0") << spec;
    EXPECT_EQ(r.stabilized_at, 3);
    EXPECT_EQ(r.route, "tree_boundary");
  }
  EXPECT_THROW((void)k_of_tree_algebra(ring("FO(3)*Z"), 1, 0), DomainError);
  const KGroupReport split = k_of_tree_algebra(ring("FO(3)*Z"), ring("FO(4)"), 2);
  EXPECT_EQ(split.k0.to_string(), "Z");
}

TEST(TrAction, FreeGroupShift) {
  const FusionRing z = ring("Z");
  const TrAction t = t_r_action_matrix(z, parse_word("z^1", z), 2);
  // x -> x z^-1 on {e, z^-1, z, z^-2, z^2}; z^-2 falls off the window.
  ASSERT_EQ(t.matrix.cols(), 5u);
  EXPECT_EQ(column(t.matrix, "e"), (Col{{"z^-1", 1}}));
  EXPECT_EQ(column(t.matrix, "z^1"), (Col{{"e", 1}}));
  EXPECT_EQ(column(t.matrix, "z^-2"), Col{});
  ASSERT_EQ(t.out_of_window.size(), 1u);
  EXPECT_EQ(render(z, t.out_of_window[0].term), "z^-3");
}

TEST(TrAction, Orthogonal) {
  const FusionRing fo3 = ring("FO(3)");
  const TrAction t = t_r_action_matrix(fo3, parse_word("u1", fo3), 3);
  EXPECT_EQ(column(t.matrix, "u1"), (Col{{"u0", 1}, {"u2", 1}}));
  EXPECT_EQ(column(t.matrix, "u3"), (Col{{"u2", 1}}));
  ASSERT_EQ(t.out_of_window.size(), 1u);
  EXPECT_EQ(render(fo3, t.out_of_window[0].term), "u4");
}

TEST(TrAction, Unitary) {
  const FusionRing fu = ring("FU(2)");
  const TrAction t = t_r_action_matrix(fu, parse_word("u", fu), 2);
  // e (x) conj(u) = ubar
  EXPECT_EQ(column(t.matrix, "e"), (Col{{"[1:z^-1.0:u1]", 1}}));
}

}  // namespace
