// Copyright 2026 The wlbind Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "test_graphs.hpp"
#include "wlbind/binding.hpp"
#include "wlbind/oracle.hpp"

namespace wlbind {
namespace {

TEST(BindTest, PrintedAdjacencyDimensionAndCells) {
  for (const auto& b : testing::printed_bindings()) {
    const auto bg = bind(b.basic);
    EXPECT_EQ(bg.labeled(), b.binding) << b.name;
    const auto x = stabilize(bg.labeled());
    EXPECT_EQ(x.dim(), b.dim) << b.name;
    EXPECT_EQ(x.cells(), Partition(b.cells)) << b.name;
    EXPECT_TRUE(equivalent(x.graph(), b.stable)) << b.name;
  }
}

TEST(BindTest, OrderAndNumbering) {
  const auto b = bind(path_graph(4));
  EXPECT_EQ(b.order(), 10u);
  EXPECT_EQ(b.basic_count(), 4u);
  EXPECT_EQ(b.graph().edge_count(), 3u + 12u);
  Vertex expected = 5;
  for (Vertex u = 1; u <= 4; ++u) {
    for (Vertex v = u + 1; v <= 4; ++v, ++expected) {
      EXPECT_EQ(b.binding_vertex(u, v), expected);
      EXPECT_EQ(b.binding_vertex(v, u), expected);
      EXPECT_EQ(b.bound_pair(expected), (std::pair<Vertex, Vertex>{u, v}));
      EXPECT_EQ(b.graph().degree(expected), 2u);
    }
  }
  EXPECT_THROW(b.binding_vertex(2, 2), std::invalid_argument);
  EXPECT_THROW(b.bound_pair(3), std::invalid_argument);
  EXPECT_THROW(bind(SimpleGraph(1)), std::invalid_argument);
}

TEST(PhiGraphTest, KeepsOnlyVertexAndBindingLabels) {
  const auto b = bind(complete_graph(3));
  const auto x = stabilize(b.labeled());
  const auto phi = phi_graph(b, x);
  EXPECT_EQ(phi.at(1, 2), kBlank);
  EXPECT_EQ(phi.at(4, 5), kBlank);
  EXPECT_EQ(phi.at(1, 4), x.graph().at(1, 4));
  EXPECT_EQ(phi.at(4, 4), x.graph().at(4, 4));
  EXPECT_TRUE(equivalent(stabilize(phi).graph(), x.graph()));
}

TEST(ExtendAutomorphismTest, LiftIsAutomorphism) {
  const auto g = cycle_graph(5);
  const auto b = bind(g);
  for (const auto& s : automorphism_group(g.labeled())) {
    const auto lift = extend_automorphism(b, s);
    EXPECT_TRUE(is_automorphism(b.labeled(), lift));
  }
  EXPECT_THROW(extend_automorphism(b, Permutation::transposition(5, 1, 2)), std::invalid_argument);
  EXPECT_THROW(extend_automorphism(b, Permutation::identity(4)), std::invalid_argument);
}

TEST(ClassifyCellsTest, Kinds) {
  const auto b = bind(path_graph(3));
  const Partition p({{1, 4}, {2, 3}, {5, 6}});
  EXPECT_EQ(classify_cells(b, p), (std::vector<CellClass>{CellClass::kMixed, CellClass::kBasic, CellClass::kBinding}));
  EXPECT_STREQ(to_string(CellClass::kMixed), "mixed");
  EXPECT_THROW(classify_cells(b, Partition::unit(3)), std::invalid_argument);
}

TEST(BindingLemmaTest, HoldOnSmallGraphs) {
  for (const auto& g : testing::connected_upto(5)) {
    if (g.order() < 2) continue;
    const auto b = bind(g);
    const auto x = stabilize(b.labeled());
    EXPECT_TRUE(binding_edges_separate(b, x)) << encode_graph6(g);
    EXPECT_TRUE(binding_labels_agree(b, x)) << encode_graph6(g);
  }
}

TEST(BindingLemmaTest, SeparationFailsAgainstForeignBasicGraph) {
  // Stable labels of the triangle's binding graph do not tell the path's
  // edges from its non-edge.
  const auto x = stabilize(bind(complete_graph(3)).labeled());
  EXPECT_TRUE(binding_edges_separate(bind(complete_graph(3)), x));
  EXPECT_FALSE(binding_edges_separate(bind(path_graph(3)), x));
}

}  // namespace
}  // namespace wlbind
